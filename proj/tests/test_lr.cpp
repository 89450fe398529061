#include <doctest.h>

#include "oracles.hpp"
#include "rsf/lr.hpp"
#include "rsf/schur.hpp"

using rsf::Partition;

namespace {

// s_a * s_b expanded in Schur polynomials by peeling leading monomials in
// `vars` x-variables. Independent of tableau counting with a lattice condition.
std::vector<std::pair<Partition, std::int64_t>> expand_by_monomials(const Partition& a, const Partition& b) {
    const int vars = std::max(1, a.size() + b.size());
    oracle::XPoly rest = oracle::xmul(oracle::schur_by_tableaux(a, vars), oracle::schur_by_tableaux(b, vars));
    std::vector<std::pair<Partition, std::int64_t>> out;
    while (!rest.empty()) {
        // the lexicographically largest exponent vector is a dominant weight
        const auto& [lead, coeff] = *rest.rbegin();
        const Partition nu = Partition::from_unsorted(lead);
        REQUIRE(coeff.get_den() == 1);
        const auto c = coeff.get_num().get_si();
        out.emplace_back(nu, c);
        for (const auto& [e, q] : oracle::schur_by_tableaux(nu, vars))
            oracle::add_to(rest, e, -q * c);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    return out;
}

}  // namespace

TEST_CASE("lr_coefficient: named cases") {
    for (const auto& p : rsf::partitions_of(4))
        CHECK(rsf::lr_coefficient(p, p, Partition()) == 1);
    CHECK(rsf::lr_coefficient(Partition{2}, Partition{1}, Partition{1}) == 1);
    CHECK(rsf::lr_coefficient(Partition{1, 1}, Partition{1}, Partition{1}) == 1);
    CHECK(rsf::lr_coefficient(Partition{2, 1}, Partition{1}, Partition{1, 1}) == 1);
    CHECK(rsf::lr_coefficient(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
    CHECK(rsf::lr_coefficient(Partition{2}, Partition{1, 1}, Partition()) == 0);
    CHECK(rsf::lr_coefficient(Partition{3}, Partition{1}, Partition{1}) == 0);
}

TEST_CASE("schur_product_expand: named cases") {
    using Terms = std::vector<std::pair<Partition, std::int64_t>>;
    CHECK(rsf::schur_product_expand(Partition(), Partition{2, 1}) == Terms{{Partition{2, 1}, 1}});
    CHECK(rsf::schur_product_expand(Partition{1}, Partition{1}) == Terms{{Partition{2}, 1}, {Partition{1, 1}, 1}});
    CHECK(rsf::schur_product_expand(Partition{2, 1}, Partition{1}) ==
          Terms{{Partition{3, 1}, 1}, {Partition{2, 2}, 1}, {Partition{2, 1, 1}, 1}});
}

TEST_CASE("product expansion agrees with the x-variable monomial oracle") {
    for (int total = 0; total <= 5; ++total)
        for (int a = 0; a <= total; ++a)
            for (const auto& lambda : rsf::partitions_of(a))
                for (const auto& mu : rsf::partitions_of(total - a))
                    CHECK(rsf::schur_product_expand(lambda, mu) == expand_by_monomials(lambda, mu));
}

TEST_CASE("lr symmetries") {
    for (int n = 0; n <= 7; ++n)
        for (const auto& nu : rsf::partitions_of(n))
            for (int a = 0; a <= n; ++a)
                for (const auto& lambda : rsf::partitions_inside(nu, a))
                    for (const auto& mu : rsf::partitions_inside(nu, n - a)) {
                        const auto c = rsf::lr_coefficient(nu, lambda, mu);
                        CHECK(c == rsf::lr_coefficient(nu, mu, lambda));
                        CHECK(c == rsf::lr_coefficient(rsf::conjugate(nu), rsf::conjugate(lambda), rsf::conjugate(mu)));
                    }
}

TEST_CASE("lr_multi") {
    CHECK(rsf::lr_multi(Partition{3, 1}, {Partition{3, 1}}) == 1);
    CHECK(rsf::lr_multi(Partition{3, 1}, {Partition{2, 2}}) == 0);
    CHECK(rsf::lr_multi(Partition{2, 1}, {Partition{1}, Partition{1}, Partition{1}}) == 2);
    CHECK(rsf::lr_multi(Partition(), {Partition(), Partition(), Partition()}) == 1);
    CHECK(rsf::lr_multi(Partition{1}, {Partition(), Partition()}) == 0);
    CHECK_THROWS_AS(rsf::lr_multi(Partition(), {}), std::invalid_argument);

    // f^lambda: the number of standard tableaux equals the n-fold coefficient of s_1
    CHECK(rsf::lr_multi(Partition{3, 2}, std::vector<Partition>(5, Partition{1})) == 5);
    CHECK(rsf::lr_multi(Partition{3, 2, 1}, std::vector<Partition>(6, Partition{1})) == 16);
}

TEST_CASE("lr_multi does not depend on the order of the factors") {
    std::vector<Partition> small;
    for (int n = 0; n <= 3; ++n)
        for (const auto& p : rsf::partitions_of(n))
            small.push_back(p);
    for (const auto& a : small)
        for (const auto& b : small)
            for (const auto& c : small) {
                const int total = a.size() + b.size() + c.size();
                if (total > 7 || total == 0)
                    continue;
                for (const auto& outer : rsf::partitions_of(total)) {
                    std::vector<Partition> inners{a, b, c};
                    std::sort(inners.begin(), inners.end());
                    const auto reference = rsf::lr_multi(outer, inners);
                    while (std::next_permutation(inners.begin(), inners.end()))
                        CHECK(rsf::lr_multi(outer, inners) == reference);
                }
            }
}
