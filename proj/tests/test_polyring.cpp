#include <doctest.h>

#include <random>

#include "rsf/polyring.hpp"

using rsf::Monomial;
using rsf::Rational;
using rsf::TPolynomial;

namespace {

TPolynomial t(int j) { return TPolynomial::variable(j); }
TPolynomial c(long num, long den = 1) { return TPolynomial(Rational(num, den)); }

// S_(2) and S_(1,1) in the t variables
TPolynomial s2() { return t(1) * t(1) * Rational(1, 2) + t(2); }
TPolynomial s11() { return t(1) * t(1) * Rational(1, 2) - t(2); }

TPolynomial random_poly(std::mt19937& rng) {
    TPolynomial p;
    int terms = static_cast<int>(rng() % 4);
    for (int k = 0; k < terms; ++k) {
        std::vector<std::pair<int, int>> powers;
        int vars = static_cast<int>(rng() % 3);
        for (int v = 0; v < vars; ++v)
            powers.emplace_back(1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 2));
        long num = static_cast<long>(rng() % 7) - 3;
        long den = 1 + static_cast<long>(rng() % 3);
        Rational q(num, den);
        q.canonicalize();
        p.add_term(Monomial(powers), q);
    }
    return p;
}

}  // namespace

TEST_CASE("monomials") {
    Monomial m({{3, 1}, {1, 2}, {3, 1}, {2, 0}});
    CHECK(m.powers() == std::vector<std::pair<int, int>>{{1, 2}, {3, 2}});
    CHECK(m.degree() == 8);
    CHECK(m.exponent(3) == 2);
    CHECK(m.exponent(2) == 0);
    CHECK(Monomial().is_one());
    CHECK_THROWS(Monomial({{0, 1}}));
}

TEST_CASE("canonical term order") {
    rsf::MonomialOrder less;
    CHECK(less(Monomial(), Monomial::variable(1)));
    CHECK(less(Monomial::variable(1, 2), Monomial::variable(2)));
    CHECK(less(Monomial({{1, 1}, {2, 1}}), Monomial::variable(3)));
    CHECK_FALSE(less(Monomial::variable(2), Monomial::variable(2)));
    CHECK(s2().to_string() == "1/2*t1^2 + t2");
}

TEST_CASE("add") {
    const TPolynomial p = s2();
    CHECK(rsf::add(p, TPolynomial()) == p);
    CHECK(rsf::add(t(1), -t(1)).is_zero());
    CHECK(rsf::add(s2(), s11()) == t(1) * t(1));
}

TEST_CASE("mul") {
    const TPolynomial p = s2();
    CHECK(rsf::mul(p, c(1)) == p);
    CHECK(rsf::mul(t(1), t(1)) == TPolynomial(Monomial::variable(1, 2), Rational(1)));
    const TPolynomial expected = TPolynomial(Monomial::variable(1, 4), Rational(1, 4)) -
                                 TPolynomial(Monomial::variable(2, 2), Rational(1));
    CHECK(rsf::mul(s2(), s11()) == expected);
}

TEST_CASE("reduce_r") {
    CHECK(rsf::reduce_r(t(2), 2).is_zero());
    CHECK(rsf::reduce_r(s2(), 2) == t(1) * t(1) * Rational(1, 2));
    CHECK(rsf::reduce_r(t(1) * t(3) + t(4), 2) == t(1) * t(3));
    CHECK(rsf::reduce_r(t(6) + t(5), 3) == t(5));
}

TEST_CASE("omega") {
    CHECK(rsf::omega(t(1)) == t(1));
    CHECK(rsf::omega(t(2)) == -t(2));
    CHECK(rsf::omega(s2()) == s11());
    CHECK(rsf::omega(t(2) * t(2)) == t(2) * t(2));
}

TEST_CASE("graded_component") {
    CHECK(rsf::graded_component(c(1), 0) == c(1));
    CHECK(rsf::graded_component(s2(), 2) == s2());
    CHECK(rsf::graded_component(t(1) + t(3), 3) == t(3));
    CHECK(rsf::graded_component(t(1) + t(3), 2).is_zero());
}

TEST_CASE("ring laws and substitution properties on random polynomials") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        TPolynomial a = random_poly(rng), b = random_poly(rng), d = random_poly(rng);
        CHECK((a * b) * d == a * (b * d));
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a * (b + d) == a * b + a * d);
        CHECK(rsf::omega(rsf::omega(a)) == a);
        CHECK(rsf::omega(a * b) == rsf::omega(a) * rsf::omega(b));
        for (int r = 2; r <= 3; ++r) {
            CHECK(rsf::reduce_r(a * b, r) == rsf::reduce_r(a, r) * rsf::reduce_r(b, r));
            CHECK(rsf::reduce_r(rsf::omega(a), r) == rsf::omega(rsf::reduce_r(a, r)));
        }
        TPolynomial sum;
        for (int n = 0; n <= a.max_degree(); ++n)
            sum += rsf::graded_component(a, n);
        CHECK(sum == a);
        for (const auto& [m, q] : a.terms()) {
            CHECK(q != 0);
            CHECK(q.get_den() > 0);
            CHECK(gcd(q.get_num(), q.get_den()) == 1);
        }
    }
}

TEST_CASE("monomials_of_degree and exact_rank") {
    CHECK(rsf::monomials_of_degree(0).size() == 1);
    CHECK(rsf::monomials_of_degree(4).size() == 5);
    CHECK(rsf::monomials_of_degree(4, 2).size() == 2);  // t1^4, t1 t3
    CHECK(rsf::monomials_of_degree(3, 3).size() == 2);  // t1^3, t1 t2

    CHECK(rsf::exact_rank({}) == 0);
    CHECK(rsf::exact_rank({s2(), s11()}) == 2);
    CHECK(rsf::exact_rank({s2(), s2() * Rational(3), s11()}) == 2);
    CHECK(rsf::exact_rank({TPolynomial(), t(1)}) == 1);
    CHECK(rsf::exact_rank({s2() + s11(), t(1) * t(1)}) == 1);
}
