#include "rsf/affine.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "rsf/evaluate.hpp"
#include "rsf/maya.hpp"
#include "rsf/schur.hpp"
#include "rsf/series.hpp"

namespace rsf {

WeightLabel weight_of(const Partition& lambda, int r) {
    const CoreQuotient cq = r_decompose(lambda, r);
    if (!cq.quotient.front().empty())
        throw std::invalid_argument("weight_of: " + lambda.to_string() +
                                    " has a nonempty 0-th quotient and is not a weight basis label");
    return {r, cq.core, cq.quotient_size()};
}

std::vector<Partition> weight_basis(const WeightLabel& w) {
    if (w.depth < 0)
        throw std::invalid_argument("weight_basis: depth must be nonnegative");
    if (!is_r_core(w.core, w.r))
        throw std::invalid_argument("weight_basis: " + w.core.to_string() + " is not an r-core");
    std::vector<Partition> out;
    for (auto& tail : multipartitions(w.r - 1, w.depth)) {
        std::vector<Partition> quotient{Partition()};
        quotient.insert(quotient.end(), tail.begin(), tail.end());
        out.push_back(r_compose(CoreQuotient{w.r, w.core, std::move(quotient), 1}));
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

WeightRank weight_space_rank(const WeightLabel& w) {
    const std::vector<Partition> basis = weight_basis(w);
    WeightRank out;
    out.size = static_cast<int>(basis.size());
    const int degree = w.core.size() + w.r * w.depth;
    if (degree <= kExactRankDegree) {
        std::vector<TPolynomial> rows;
        rows.reserve(basis.size());
        for (const auto& lambda : basis)
            rows.push_back(reduced_schur(lambda, w.r));
        out.rank = exact_rank(rows);
        return out;
    }
    out.exact = false;
    std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(degree));
    std::uniform_int_distribution<std::uint64_t> pick(1, kEvalPrime - 1);
    std::vector<std::vector<std::uint64_t>> matrix(basis.size());
    for (std::size_t point = 0; point < basis.size(); ++point) {
        std::vector<std::uint64_t> values(static_cast<std::size_t>(degree));
        for (auto& v : values)
            v = pick(rng);
        const SchurEvaluator at(w.r, values, degree);
        for (std::size_t i = 0; i < basis.size(); ++i)
            matrix[i].push_back(at(basis[i]));
    }
    out.rank = rank_mod(std::move(matrix));
    return out;
}

std::vector<std::int64_t> multiplicity_series(int r, int max_n) {
    if (r < 2)
        throw std::invalid_argument("multiplicity_series: r must be >= 2");
    return weight_multiplicity_series(r, max_n);
}

std::vector<Partition> r_cores_up_to(int r, int max_size) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n)
        for (const auto& p : partitions_of(n))
            if (is_r_core(p, r))
                out.push_back(p);
    return out;
}

}  // namespace rsf
