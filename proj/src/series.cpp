#include "rsf/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsf {

Series euler_product(int step, int order) {
    if (step < 1 || order < 0)
        throw std::invalid_argument("euler_product: bad arguments");
    Series out(static_cast<std::size_t>(order) + 1, 0);
    out[0] = 1;
    for (int j = step; j <= order; j += step)
        for (int n = order; n >= j; --n)
            out[static_cast<std::size_t>(n)] -= out[static_cast<std::size_t>(n - j)];
    return out;
}

Series series_mul(const Series& a, const Series& b) {
    const std::size_t len = std::min(a.size(), b.size());
    Series out(len, 0);
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = 0; i + j < len; ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

Series series_inverse(const Series& a) {
    if (a.empty() || a[0] != 1)
        throw std::invalid_argument("series_inverse: constant term must be 1");
    Series out(a.size(), 0);
    out[0] = 1;
    for (std::size_t n = 1; n < a.size(); ++n) {
        std::int64_t acc = 0;
        for (std::size_t k = 1; k <= n; ++k)
            acc += a[k] * out[n - k];
        out[n] = -acc;
    }
    return out;
}

Series basic_set_series(int r, int order) {
    return series_mul(euler_product(r, order), series_inverse(euler_product(1, order)));
}

Series weight_multiplicity_series(int r, int order) {
    if (r < 1)
        throw std::invalid_argument("weight_multiplicity_series: r must be positive");
    Series inv = series_inverse(euler_product(1, order));
    Series out(static_cast<std::size_t>(order) + 1, 0);
    out[0] = 1;
    for (int k = 1; k < r; ++k)
        out = series_mul(out, inv);
    return out;
}

}  // namespace rsf
