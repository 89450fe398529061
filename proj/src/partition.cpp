#include "rsf/partition.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace rsf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive: " + to_string());
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing: " + to_string());
        size_ += parts_[i];
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    return Partition(std::move(parts));
}

bool Partition::contains(const Partition& other) const noexcept {
    if (other.length() > length())
        return false;
    for (int i = 0; i < other.length(); ++i)
        if (other.row(i) > row(i))
            return false;
    return true;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.parts())
        h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> cols(static_cast<std::size_t>(lambda.row(0)), 0);
    for (int part : lambda.parts())
        for (int j = 0; j < part; ++j)
            ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

std::vector<int> beta_set(const Partition& lambda, int n) {
    if (n < lambda.length())
        throw std::invalid_argument("beta_set: too few beads for " + lambda.to_string());
    std::vector<int> betas(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        betas[static_cast<std::size_t>(i)] = lambda.row(i) + n - 1 - i;
    return betas;
}

Partition from_beta_set(std::vector<int> betas) {
    std::sort(betas.begin(), betas.end(), std::greater<>());
    if (std::adjacent_find(betas.begin(), betas.end()) != betas.end())
        throw std::invalid_argument("from_beta_set: repeated bead");
    if (!betas.empty() && betas.back() < 0)
        throw std::invalid_argument("from_beta_set: negative bead");
    const int n = static_cast<int>(betas.size());
    std::vector<int> parts;
    for (int i = 0; i < n; ++i) {
        int part = betas[static_cast<std::size_t>(i)] - (n - 1 - i);
        if (part > 0)
            parts.push_back(part);
    }
    return Partition(std::move(parts));
}

namespace {

// Moves each bead by `shift` cells (negative = strip removal) when the target is
// free and nonnegative; the height is the number of beads jumped over.
std::vector<BorderStripRemoval> slide_beads(const std::vector<int>& betas, int shift) {
    std::set<int> occupied(betas.begin(), betas.end());
    std::vector<BorderStripRemoval> out;
    for (int b : betas) {  // betas are decreasing: top row first
        int target = b + shift;
        if (target < 0 || occupied.count(target))
            continue;
        int lo = std::min(b, target), hi = std::max(b, target);
        int height = static_cast<int>(std::distance(occupied.upper_bound(lo), occupied.lower_bound(hi)));
        std::vector<int> moved = betas;
        std::replace(moved.begin(), moved.end(), b, target);
        out.push_back({from_beta_set(std::move(moved)), height});
    }
    return out;
}

void enumerate_partitions(int remaining, int max_part, const Partition* outer, std::vector<int>& prefix,
                          std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    int row = static_cast<int>(prefix.size());
    int cap = std::min(remaining, max_part);
    if (outer)
        cap = std::min(cap, outer->row(row));
    for (int part = cap; part >= 1; --part) {
        prefix.push_back(part);
        enumerate_partitions(remaining - part, part, outer, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<BorderStripRemoval> border_strip_removals(const Partition& lambda, int len) {
    if (len < 1)
        throw std::invalid_argument("border_strip_removals: len must be >= 1");
    return slide_beads(beta_set(lambda, lambda.length()), -len);
}

std::vector<BorderStripRemoval> border_strip_additions(const Partition& lambda, int len) {
    if (len < 1)
        throw std::invalid_argument("border_strip_additions: len must be >= 1");
    return slide_beads(beta_set(lambda, lambda.length() + len), len);
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0)
        throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate_partitions(n, n, nullptr, prefix, out);
    return out;
}

std::vector<Partition> partitions_inside(const Partition& outer, int n) {
    std::vector<Partition> out;
    if (n < 0 || n > outer.size())
        return out;
    std::vector<int> prefix;
    enumerate_partitions(n, n, &outer, prefix, out);
    return out;
}

std::vector<std::vector<Partition>> multipartitions(int slots, int total) {
    if (slots < 1 || total < 0)
        throw std::invalid_argument("multipartitions: need slots >= 1 and total >= 0");
    std::vector<std::vector<Partition>> out;
    std::vector<Partition> current;
    auto rec = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == slots - 1) {
            for (const auto& p : partitions_of(remaining)) {
                current.push_back(p);
                out.push_back(current);
                current.pop_back();
            }
            return;
        }
        for (int size = remaining; size >= 0; --size)
            for (const auto& p : partitions_of(size)) {
                current.push_back(p);
                self(self, slot + 1, remaining - size);
                current.pop_back();
            }
    };
    rec(rec, 0, total);
    return out;
}

}  // namespace rsf
