#pragma once

#include <cstdint>
#include <vector>

namespace rsf {

/// Integer power series truncated after q^order (order + 1 coefficients).
using Series = std::vector<std::int64_t>;

/// phi(q^step) = prod_{j>=1} (1 - q^{j*step}).
Series euler_product(int step, int order);

Series series_mul(const Series& a, const Series& b);

/// Inverse of a series with constant term 1.
Series series_inverse(const Series& a);

/// Coefficients of phi(q^r) / phi(q) up to q^order.
Series basic_set_series(int r, int order);

/// Coefficients of 1 / phi(q)^(r-1) up to q^order.
Series weight_multiplicity_series(int r, int order);

}  // namespace rsf
