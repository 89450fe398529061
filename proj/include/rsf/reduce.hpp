#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rsf/maya.hpp"
#include "rsf/partition.hpp"
#include "rsf/polyring.hpp"
#include "rsf/series.hpp"

namespace rsf {

/// S^(r)_lambda written in the basic set: sum of coeff * S^(r)_mu.
struct Decomposition {
    Partition source;
    int r = 2;
    std::vector<std::pair<Partition, std::int64_t>> terms;  // reverse-lexicographic in mu

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Partitions of n whose 0-th r-quotient slot is empty, reverse-lexicographic.
std::vector<Partition> basic_set(int r, int n);

/// Every mu with |mu| = |lambda|, the same r-core and empty slot 0, weighted by
///   (-1)^{|lambda[0]|} delta_r(lambda) delta_r(mu)
///     * sum_{nu_1..nu_{r-1}} LR^{lambda[0]'}_{nu_1...nu_{r-1}} prod_k LR^{mu[k]}_{nu_k lambda[k]}.
/// Zero terms are dropped.
Decomposition decompose(const Partition& lambda, int r);

struct TheoremCheck {
    bool holds = false;
    TPolynomial lhs;         // S^(r)_lambda
    TPolynomial difference;  // lhs minus the decomposition's sum; zero when it holds
};

TheoremCheck verify_theorem(const Partition& lambda, int r);

struct CountingReport {
    int r = 2;
    std::vector<std::int64_t> basic_set_counts;         // |basic_set(r, n)|
    std::vector<std::int64_t> series;                   // [q^n] phi(q^r)/phi(q)
    std::vector<std::int64_t> restricted_partitions;    // partitions of n with no part divisible by r
    bool ok = false;
};

/// Compares the three counts for every n <= max_n.
CountingReport counting_report(int r, int max_n);
bool counting_check(int r, int max_n);

/// Partitions of n with no part divisible by r.
std::int64_t restricted_partition_count(int r, int n);

struct RankReport {
    int rank = 0;
    int rows = 0;       // |basic_set(r, n)|
    int dimension = 0;  // monomials of degree n in t_j, r not dividing j
    bool ok = false;
};

RankReport basis_rank_report(int r, int n);
bool basis_rank_check(int r, int n);

}  // namespace rsf
