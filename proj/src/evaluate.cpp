#include "rsf/evaluate.hpp"

#include <stdexcept>

namespace rsf {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 add_mod(u64 a, u64 b) {
    u64 s = a + b;
    return s >= kEvalPrime ? s - kEvalPrime : s;
}

u64 sub_mod(u64 a, u64 b) { return a >= b ? a - b : a + kEvalPrime - b; }

u64 mul_mod(u64 a, u64 b) {
    u128 prod = static_cast<u128>(a) * b;
    u64 lo = static_cast<u64>(prod & kEvalPrime);
    u64 hi = static_cast<u64>(prod >> 61);
    return add_mod(lo, hi);
}

u64 pow_mod(u64 base, u64 exp) {
    u64 acc = 1;
    for (; exp; exp >>= 1) {
        if (exp & 1)
            acc = mul_mod(acc, base);
        base = mul_mod(base, base);
    }
    return acc;
}

u64 inverse_mod(u64 a) {
    if (a == 0)
        throw std::domain_error("inverse of zero modulo the evaluation prime");
    return pow_mod(a, kEvalPrime - 2);
}

u64 reduce_mpz(const mpz_class& z) {
    mpz_class m = z % mpz_class(std::to_string(kEvalPrime));
    if (m < 0)
        m += mpz_class(std::to_string(kEvalPrime));
    return std::stoull(m.get_str());
}

// h_0 .. h_n from H(z) = exp(sum_j c_j t_j z^j): k h_k = sum_{j=1}^k j c_j t_j h_{k-j},
// with c_j = 1, or c_j = (-1)^(j-1) for the elementary functions.
std::vector<u64> exp_series(int n, int r, std::span<const u64> t, bool alternating) {
    std::vector<u64> h(static_cast<std::size_t>(n) + 1, 0);
    h[0] = 1;
    for (int k = 1; k <= n; ++k) {
        u64 acc = 0;
        for (int j = 1; j <= k; ++j) {
            if (r > 0 && j % r == 0)
                continue;
            const u64 term = mul_mod(mul_mod(static_cast<u64>(j), t[static_cast<std::size_t>(j - 1)]),
                                     h[static_cast<std::size_t>(k - j)]);
            acc = alternating && j % 2 == 0 ? sub_mod(acc, term) : add_mod(acc, term);
        }
        h[static_cast<std::size_t>(k)] = mul_mod(acc, inverse_mod(static_cast<u64>(k)));
    }
    return h;
}

u64 determinant_mod(std::vector<std::vector<u64>> m) {
    const std::size_t n = m.size();
    u64 det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = sub_mod(0, det);
        }
        det = mul_mod(det, m[col][col]);
        const u64 inv = inverse_mod(m[col][col]);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0)
                continue;
            const u64 f = mul_mod(m[i][col], inv);
            for (std::size_t j = col; j < n; ++j)
                m[i][j] = sub_mod(m[i][j], mul_mod(f, m[col][j]));
        }
    }
    return det;
}

}  // namespace

SchurEvaluator::SchurEvaluator(int r, std::span<const u64> values, int max_degree)
    : h_(exp_series(max_degree, r, values, false)), e_(exp_series(max_degree, r, values, true)) {
    if (static_cast<int>(values.size()) < max_degree)
        throw std::invalid_argument("SchurEvaluator: need a value for every t_j with j <= max_degree");
}

u64 SchurEvaluator::operator()(const Partition& lambda) const {
    if (lambda.size() >= static_cast<int>(h_.size()))
        throw std::invalid_argument("SchurEvaluator: " + lambda.to_string() + " exceeds the prepared degree");
    // Jacobi-Trudi in h, or its dual in e on the conjugate when that is shorter
    const bool dual = lambda.row(0) < lambda.length();
    const Partition shape = dual ? conjugate(lambda) : lambda;
    const std::vector<u64>& g = dual ? e_ : h_;
    const int len = shape.length();
    std::vector<std::vector<u64>> m(static_cast<std::size_t>(len), std::vector<u64>(static_cast<std::size_t>(len), 0));
    for (int i = 0; i < len; ++i)
        for (int j = 0; j < len; ++j) {
            int k = shape.row(i) - i + j;
            if (k >= 0)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g[static_cast<std::size_t>(k)];
        }
    return determinant_mod(std::move(m));
}

u64 evaluate_schur_mod(const Partition& lambda, int r, std::span<const u64> values) {
    return SchurEvaluator(r, values, lambda.size())(lambda);
}

u64 evaluate_mod(const TPolynomial& p, std::span<const u64> values) {
    u64 total = 0;
    for (const auto& [mono, c] : p.terms()) {
        u64 den = reduce_mpz(c.get_den());
        u64 term = mul_mod(reduce_mpz(c.get_num()), inverse_mod(den));
        for (const auto& [j, e] : mono.powers()) {
            if (j > static_cast<int>(values.size()))
                throw std::invalid_argument("evaluate_mod: missing value for t_" + std::to_string(j));
            term = mul_mod(term, pow_mod(values[static_cast<std::size_t>(j - 1)], static_cast<u64>(e)));
        }
        total = add_mod(total, term);
    }
    return total;
}

int rank_mod(std::vector<std::vector<u64>> m) {
    int rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
        auto top = static_cast<std::size_t>(rank);
        std::size_t pivot = top;
        while (pivot < rows && m[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[top]);
        const u64 inv = inverse_mod(m[top][col]);
        for (std::size_t i = top + 1; i < rows; ++i) {
            if (m[i][col] == 0)
                continue;
            const u64 f = mul_mod(m[i][col], inv);
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] = sub_mod(m[i][j], mul_mod(f, m[top][j]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace rsf
