#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace rsf {

/// A Young diagram: weakly decreasing positive parts. Immutable once built.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts the parts and drops zeros before validating; negative parts still throw.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Row i (0-based); zero past the last row.
    int row(int i) const noexcept {
        return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    /// Cellwise containment of `other` in *this.
    bool contains(const Partition& other) const noexcept;

    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) noexcept {
        return a.parts_ == b.parts_;
    }
    /// Lexicographic order on the parts sequence.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

/// Result of removing (or adding) one border strip.
struct BorderStripRemoval {
    Partition result;
    int height = 0;  // rows spanned minus one

    friend bool operator==(const BorderStripRemoval&, const BorderStripRemoval&) = default;
};

Partition conjugate(const Partition& lambda);

/// All border strips of `len` cells that can be removed from `lambda`, ordered
/// by the row in which the strip starts (top first).
std::vector<BorderStripRemoval> border_strip_removals(const Partition& lambda, int len);

/// All border strips of `len` cells that can be added to `lambda`, ordered by
/// the strip's lowest row (top first). Heights as for removal.
std::vector<BorderStripRemoval> border_strip_additions(const Partition& lambda, int len);

/// Every partition of n exactly once, reverse-lexicographic: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// Partitions of n whose diagram fits inside `outer`, reverse-lexicographic.
std::vector<Partition> partitions_inside(const Partition& outer, int n);

/// Every tuple of `slots` partitions whose sizes sum to `total`, ordered by
/// size composition (first slot largest first), then reverse-lexicographic per slot.
std::vector<std::vector<Partition>> multipartitions(int slots, int total);

/// Beta numbers lambda_i + n - i for i = 1..n. Requires n >= lambda.length().
std::vector<int> beta_set(const Partition& lambda, int n);

/// Inverse of beta_set: any set of distinct nonnegative integers (any order).
Partition from_beta_set(std::vector<int> betas);

}  // namespace rsf
