#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rsf {

using Rational = mpq_class;

/// A monomial t_{j1}^{e1} t_{j2}^{e2} ... stored as (j, e) pairs with ascending j
/// and positive e. The empty monomial is 1.
class Monomial {
public:
    Monomial() = default;
    /// Accepts pairs in any order; zero exponents are dropped, repeated indices merged.
    explicit Monomial(std::vector<std::pair<int, int>> powers);

    static Monomial variable(int j, int exponent = 1);

    const std::vector<std::pair<int, int>>& powers() const noexcept { return powers_; }
    int exponent(int j) const noexcept;
    /// Weighted degree with deg t_j = j.
    int degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return powers_.empty(); }

    /// True when some t_j with r | j occurs.
    bool involves_multiple_of(int r) const noexcept;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.powers_ == b.powers_; }

    std::string to_string() const;

private:
    std::vector<std::pair<int, int>> powers_;
    int degree_ = 0;
};

/// Canonical term order: ascending weighted degree, then descending exponent of
/// t_1, t_2, ... (so t_1^2 precedes t_2).
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Sparse polynomial in t_1, t_2, ... with exact rational coefficients; no
/// stored zero coefficients.
class TPolynomial {
public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    TPolynomial() = default;
    explicit TPolynomial(const Rational& constant);
    TPolynomial(const Monomial& m, const Rational& coeff);

    static TPolynomial variable(int j) { return TPolynomial(Monomial::variable(j), Rational(1)); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    Rational coefficient(const Monomial& m) const;

    /// Adds c * m in place.
    void add_term(const Monomial& m, const Rational& c);

    /// True when every term has weighted degree n (the zero polynomial counts).
    bool is_homogeneous(int n) const noexcept;
    /// Highest weighted degree; -1 for zero.
    int max_degree() const noexcept;

    TPolynomial& operator+=(const TPolynomial& other);
    TPolynomial& operator-=(const TPolynomial& other);
    TPolynomial& operator*=(const Rational& c);

    friend TPolynomial operator+(TPolynomial a, const TPolynomial& b) { return a += b; }
    friend TPolynomial operator-(TPolynomial a, const TPolynomial& b) { return a -= b; }
    friend TPolynomial operator-(TPolynomial a) { return a *= Rational(-1); }
    friend TPolynomial operator*(TPolynomial a, const Rational& c) { return a *= c; }
    friend TPolynomial operator*(const TPolynomial& a, const TPolynomial& b);
    friend bool operator==(const TPolynomial& a, const TPolynomial& b) noexcept { return a.terms_ == b.terms_; }

    /// Human-readable form, e.g. "1/2*t1^2 + t2".
    std::string to_string() const;

private:
    Terms terms_;
};

TPolynomial add(const TPolynomial& p, const TPolynomial& q);
TPolynomial mul(const TPolynomial& p, const TPolynomial& q);

/// Sets every t_{jr} to zero.
TPolynomial reduce_r(const TPolynomial& p, int r);

/// t_j -> (-1)^(j-1) t_j.
TPolynomial omega(const TPolynomial& p);

/// Terms of weighted degree exactly n.
TPolynomial graded_component(const TPolynomial& p, int n);

/// Monomials of weighted degree n avoiding every t_{jr}; r = 0 or 1 disables the
/// restriction (r = 1 would otherwise leave only the constant). Canonical order.
std::vector<Monomial> monomials_of_degree(int n, int r = 0);

/// Rank over Q of the coefficient matrix whose rows are the given polynomials.
int exact_rank(const std::vector<TPolynomial>& rows);

}  // namespace rsf
