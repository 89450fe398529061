#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "rsf/partition.hpp"
#include "rsf/polyring.hpp"

namespace rsf {

/// Conjugacy class of a symmetric group: j -> number of j-cycles.
class CycleType {
public:
    CycleType() = default;
    /// Cycle lengths as a partition, e.g. (3,1,1) = one 3-cycle and two fixed points.
    explicit CycleType(const Partition& cycles);
    /// Throws std::invalid_argument on nonpositive lengths or negative counts.
    explicit CycleType(std::map<int, int> multiplicities);

    const std::map<int, int>& multiplicities() const noexcept { return mult_; }
    int degree() const noexcept { return n_; }
    Partition cycles() const;

    /// z = prod_j j^{m_j} m_j!, the centralizer order.
    mpz_class z() const;

    /// The monomial prod_j t_j^{m_j}.
    Monomial monomial() const;

    bool has_part_divisible_by(int r) const noexcept;

private:
    std::map<int, int> mult_;
    int n_ = 0;
};

/// chi^lambda(nu) by the Murnaghan-Nakayama rule. Throws std::invalid_argument
/// when |lambda| differs from the degree of nu. Memoized; safe to call concurrently.
std::int64_t mn_character(const Partition& lambda, const CycleType& nu);

/// S_lambda(t) = sum_nu chi^lambda(nu) t^nu / prod_j nu_j!.
TPolynomial schur_in_t(const Partition& lambda);

/// S_lambda(t) with every t_{jr} set to zero.
TPolynomial reduced_schur(const Partition& lambda, int r);

/// Signed terms of S_lambda * p_j: for each i, the rearrangement of
/// alpha + j*epsilon_i with nonzero sign, in order of i.
std::vector<std::pair<Partition, int>> schur_times_power_sum(const Partition& lambda, int j);

}  // namespace rsf
