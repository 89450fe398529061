#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rsf/partition.hpp"
#include "rsf/polyring.hpp"

namespace rsf {

/// Arithmetic modulo the Mersenne prime 2^61 - 1.
inline constexpr std::uint64_t kEvalPrime = (std::uint64_t{1} << 61) - 1;

/// S^(r)_lambda at the point t_j = values[j-1] (mod kEvalPrime), computed with
/// the Jacobi-Trudi determinant of complete symmetric functions in the t
/// variables. r = 0 evaluates the unreduced S_lambda. `values` must cover
/// t_1 .. t_|lambda|.
std::uint64_t evaluate_schur_mod(const Partition& lambda, int r, std::span<const std::uint64_t> values);

/// evaluate_schur_mod for many shapes at one point, with the complete and
/// elementary symmetric functions up to max_degree computed once.
class SchurEvaluator {
public:
    SchurEvaluator(int r, std::span<const std::uint64_t> values, int max_degree);
    std::uint64_t operator()(const Partition& lambda) const;

private:
    std::vector<std::uint64_t> h_, e_;
};

/// A polynomial evaluated at the same kind of point; throws std::domain_error if
/// a coefficient denominator is divisible by the prime.
std::uint64_t evaluate_mod(const TPolynomial& p, std::span<const std::uint64_t> values);

/// Rank modulo kEvalPrime of a square or rectangular matrix.
int rank_mod(std::vector<std::vector<std::uint64_t>> matrix);

}  // namespace rsf
