#pragma once

#include <utility>
#include <vector>

#include "rsf/partition.hpp"

namespace rsf {

/// A generalized Maya diagram: the integer sequence
///   head[0], head[1], ..., head[m-1], tail_top, tail_top - 1, tail_top - 2, ...
/// Two diagrams differing by a uniform shift of every entry are equivalent;
/// equality here is on the stored sequence after trimming the head.
class MayaDiagram {
public:
    MayaDiagram() = default;
    MayaDiagram(std::vector<int> head, int tail_top);

    const std::vector<int>& head() const noexcept { return head_; }
    int tail_top() const noexcept { return tail_top_; }

    /// Entry alpha_i, 1-based.
    int entry(int i) const;

    /// alpha + amount * epsilon_i (1-based i).
    MayaDiagram with_added(int i, int amount) const;

    /// Uniform shift of every entry.
    MayaDiagram shifted(int offset) const;

    /// True when the whole sequence is strictly decreasing.
    bool is_decreasing() const noexcept;

    /// lambda(alpha); only meaningful for strictly decreasing diagrams.
    Partition to_partition() const;

    friend bool operator==(const MayaDiagram&, const MayaDiagram&) = default;

private:
    void trim();

    std::vector<int> head_;
    int tail_top_ = -1;
};

struct SortedMaya {
    MayaDiagram diagram;  // strictly decreasing rearrangement; unspecified when sign == 0
    int sign = 0;
};

/// The strictly decreasing Maya diagram of `lambda` whose negative entries are
/// exactly -1, -2, ... and whose nonnegative entries number the least multiple
/// of r covering every part.
MayaDiagram from_partition(const Partition& lambda, int r);

/// Strictly decreasing rearrangement together with the sign of the sorting
/// permutation; sign 0 when two entries coincide.
SortedMaya sort_sign(const MayaDiagram& alpha);

/// r-core, r-quotient and r-sign of a partition.
struct CoreQuotient {
    int r = 2;
    Partition core;
    std::vector<Partition> quotient;  // slot k reads runner k of the abacus
    int sign = 1;                     // interleaving sign relative to the core's; +1 on cores

    int quotient_size() const noexcept;
    friend bool operator==(const CoreQuotient&, const CoreQuotient&) = default;
};

CoreQuotient r_decompose(const Partition& lambda, int r);

/// Inverse of r_decompose; the sign field of `cq` is ignored. Throws
/// std::invalid_argument when the core is not an r-core or the quotient has
/// the wrong number of slots.
Partition r_compose(const CoreQuotient& cq);

bool is_r_core(const Partition& lambda, int r);

/// (-1)^q for the number q of vertical dominoes removed while greedily reducing
/// lambda to its 2-core.
int delta2_column_hooks(const Partition& lambda);

}  // namespace rsf
