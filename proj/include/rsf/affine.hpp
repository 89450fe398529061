#pragma once

#include <cstdint>
#include <vector>

#include "rsf/partition.hpp"

namespace rsf {

/// The weight Lambda(core) - depth * delta of the basic A^(1)_{r-1}-module.
struct WeightLabel {
    int r = 2;
    Partition core;
    int depth = 0;

    friend bool operator==(const WeightLabel&, const WeightLabel&) = default;
};

/// Weight of the basis vector S^(r)_lambda. Throws std::invalid_argument unless
/// slot 0 of the r-quotient of lambda is empty.
WeightLabel weight_of(const Partition& lambda, int r);

/// Partitions (core; empty, lambda[1], ..., lambda[r-1]) with total quotient size
/// equal to the depth, reverse-lexicographic. Throws when the core is not an r-core.
std::vector<Partition> weight_basis(const WeightLabel& w);

struct WeightRank {
    int size = 0;
    int rank = 0;
    bool exact = true;  // false: rank is a lower bound from evaluations mod a prime
};

/// Rank of the reduced Schur functions of weight_basis(w). Degrees up to
/// kExactRankDegree use exact rational elimination on the t-expansions; larger
/// degrees evaluate at pseudo-random points modulo a prime, which can only
/// under-count the rational rank.
inline constexpr int kExactRankDegree = 14;
WeightRank weight_space_rank(const WeightLabel& w);

/// Coefficients of 1/phi(q)^(r-1) for q^0 .. q^max_n.
std::vector<std::int64_t> multiplicity_series(int r, int max_n);

/// All r-cores of size at most max_size, by size then reverse-lexicographic.
std::vector<Partition> r_cores_up_to(int r, int max_size);

}  // namespace rsf
