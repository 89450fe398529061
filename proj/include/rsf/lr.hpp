#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rsf/partition.hpp"

namespace rsf {

/// c^nu_{lambda mu}: the number of skew tableaux of shape nu/lambda and content
/// mu whose reverse reading word is a lattice word. Zero when lambda is not
/// inside nu or the sizes do not add up.
std::int64_t lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu);

/// The m-fold coefficient of S_outer in S_{inners[0]} ... S_{inners[m-1]}.
/// Throws std::invalid_argument when `inners` is empty.
std::int64_t lr_multi(const Partition& outer, const std::vector<Partition>& inners);

/// Every nu with c^nu_{lambda mu} > 0, reverse-lexicographic.
std::vector<std::pair<Partition, std::int64_t>> schur_product_expand(const Partition& lambda, const Partition& mu);

}  // namespace rsf
