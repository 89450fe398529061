#include "rsf/reduce.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "rsf/lr.hpp"
#include "rsf/schur.hpp"

namespace rsf {

namespace {

void require_modulus(int r) {
    if (r < 2)
        throw std::invalid_argument("modulus r must be >= 2");
}

// Calls `visit` with every tuple (p_0, ..., p_{k-1}) where p_i is a partition
// containing floor[i] and the sizes sum to `total`.
void for_each_tuple_over(const std::vector<Partition>& floor, int total,
                         const std::function<void(const std::vector<Partition>&)>& visit) {
    std::vector<Partition> current;
    std::function<void(std::size_t, int)> rec = [&](std::size_t slot, int remaining) {
        if (slot == floor.size()) {
            if (remaining == 0)
                visit(current);
            return;
        }
        int rest_floor = 0;
        for (std::size_t k = slot + 1; k < floor.size(); ++k)
            rest_floor += floor[k].size();
        for (int size = floor[slot].size(); size + rest_floor <= remaining; ++size) {
            for (const auto& p : partitions_of(size)) {
                if (!p.contains(floor[slot]))
                    continue;
                current.push_back(p);
                rec(slot + 1, remaining - size);
                current.pop_back();
            }
        }
    };
    rec(0, total);
}

// sum over (nu_1..nu_{r-1}) of LR^{top}_{nu_1...nu_{r-1}} * prod_k LR^{mu[k]}_{nu_k lambda[k]},
// with k running over slots 1..r-1 of the given quotients.
std::int64_t weight_sum(const Partition& top, const std::vector<Partition>& lambda_q,
                        const std::vector<Partition>& mu_q) {
    const std::size_t slots = lambda_q.size() - 1;
    std::vector<Partition> nus;
    std::function<std::int64_t(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t product) -> std::int64_t {
        if (k > slots) {
            std::int64_t multi = lr_multi(top, nus);
            return multi * product;
        }
        const Partition& outer = mu_q[k];
        const Partition& inner = lambda_q[k];
        std::int64_t total = 0;
        for (const auto& nu : partitions_inside(outer, outer.size() - inner.size())) {
            std::int64_t c = lr_coefficient(outer, nu, inner);
            if (c == 0)
                continue;
            nus.push_back(nu);
            total += rec(k + 1, product * c);
            nus.pop_back();
        }
        return total;
    };
    return rec(1, 1);
}

}  // namespace

std::vector<Partition> basic_set(int r, int n) {
    require_modulus(r);
    std::vector<Partition> out;
    for (const auto& lambda : partitions_of(n))
        if (r_decompose(lambda, r).quotient.front().empty())
            out.push_back(lambda);
    return out;
}

Decomposition decompose(const Partition& lambda, int r) {
    require_modulus(r);
    const CoreQuotient cq = r_decompose(lambda, r);
    const Partition& slot0 = cq.quotient.front();
    const Partition top = conjugate(slot0);
    const int prefactor = (slot0.size() % 2 ? -1 : 1) * cq.sign;

    Decomposition out{lambda, r, {}};
    const std::vector<Partition> floor(cq.quotient.begin() + 1, cq.quotient.end());
    for_each_tuple_over(floor, cq.quotient_size(), [&](const std::vector<Partition>& tail) {
        std::vector<Partition> mu_q{Partition()};
        mu_q.insert(mu_q.end(), tail.begin(), tail.end());
        std::int64_t sum = weight_sum(top, cq.quotient, mu_q);
        if (sum == 0)
            return;
        Partition mu = r_compose(CoreQuotient{r, cq.core, mu_q, 1});
        out.terms.emplace_back(mu, prefactor * r_decompose(mu, r).sign * sum);
    });
    std::sort(out.terms.begin(), out.terms.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    return out;
}

TheoremCheck verify_theorem(const Partition& lambda, int r) {
    TheoremCheck check;
    check.lhs = reduced_schur(lambda, r);
    check.difference = check.lhs;
    for (const auto& [mu, coeff] : decompose(lambda, r).terms)
        check.difference -= reduced_schur(mu, r) * Rational(static_cast<long>(coeff));
    check.holds = check.difference.is_zero();
    return check;
}

std::int64_t restricted_partition_count(int r, int n) {
    std::int64_t count = 0;
    for (const auto& p : partitions_of(n))
        if (std::none_of(p.parts().begin(), p.parts().end(), [r](int part) { return part % r == 0; }))
            ++count;
    return count;
}

CountingReport counting_report(int r, int max_n) {
    require_modulus(r);
    CountingReport report;
    report.r = r;
    report.series = basic_set_series(r, max_n);
    report.ok = true;
    for (int n = 0; n <= max_n; ++n) {
        report.basic_set_counts.push_back(static_cast<std::int64_t>(basic_set(r, n).size()));
        report.restricted_partitions.push_back(restricted_partition_count(r, n));
        const auto i = static_cast<std::size_t>(n);
        if (report.basic_set_counts[i] != report.series[i] || report.series[i] != report.restricted_partitions[i])
            report.ok = false;
    }
    return report;
}

bool counting_check(int r, int max_n) { return counting_report(r, max_n).ok; }

RankReport basis_rank_report(int r, int n) {
    require_modulus(r);
    std::vector<TPolynomial> rows;
    for (const auto& lambda : basic_set(r, n))
        rows.push_back(reduced_schur(lambda, r));
    RankReport report;
    report.rows = static_cast<int>(rows.size());
    report.rank = exact_rank(rows);
    report.dimension = static_cast<int>(monomials_of_degree(n, r).size());
    report.ok = report.rank == report.rows && report.rank == report.dimension;
    return report;
}

bool basis_rank_check(int r, int n) { return basis_rank_report(r, n).ok; }

}  // namespace rsf
