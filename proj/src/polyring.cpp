#include "rsf/polyring.hpp"

#include <algorithm>
#include <stdexcept>

#include "rsf/partition.hpp"

namespace rsf {

Monomial::Monomial(std::vector<std::pair<int, int>> powers) {
    std::sort(powers.begin(), powers.end());
    for (const auto& [j, e] : powers) {
        if (j < 1)
            throw std::invalid_argument("Monomial: variable index must be >= 1");
        if (e < 0)
            throw std::invalid_argument("Monomial: negative exponent");
        if (e == 0)
            continue;
        if (!powers_.empty() && powers_.back().first == j)
            powers_.back().second += e;
        else
            powers_.emplace_back(j, e);
        degree_ += j * e;
    }
}

Monomial Monomial::variable(int j, int exponent) { return Monomial({{j, exponent}}); }

int Monomial::exponent(int j) const noexcept {
    auto it = std::lower_bound(powers_.begin(), powers_.end(), std::make_pair(j, 0));
    return it != powers_.end() && it->first == j ? it->second : 0;
}

bool Monomial::involves_multiple_of(int r) const noexcept {
    return std::any_of(powers_.begin(), powers_.end(), [r](const auto& p) { return p.first % r == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<std::pair<int, int>> merged = a.powers_;
    merged.insert(merged.end(), b.powers_.begin(), b.powers_.end());
    return Monomial(std::move(merged));
}

std::string Monomial::to_string() const {
    if (powers_.empty())
        return "1";
    std::string s;
    for (const auto& [j, e] : powers_) {
        if (!s.empty())
            s += '*';
        s += "t" + std::to_string(j);
        if (e > 1)
            s += "^" + std::to_string(e);
    }
    return s;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const noexcept {
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    const auto& pa = a.powers();
    const auto& pb = b.powers();
    std::size_t i = 0;
    for (; i < pa.size() && i < pb.size(); ++i) {
        if (pa[i].first != pb[i].first)
            return pa[i].first < pb[i].first;  // a has the smaller variable with positive exponent
        if (pa[i].second != pb[i].second)
            return pa[i].second > pb[i].second;
    }
    return i < pa.size() && i == pb.size();
}

TPolynomial::TPolynomial(const Rational& constant) {
    if (constant != 0)
        terms_.emplace(Monomial(), constant);
}

TPolynomial::TPolynomial(const Monomial& m, const Rational& coeff) {
    if (coeff != 0)
        terms_.emplace(m, coeff);
}

Rational TPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TPolynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

bool TPolynomial::is_homogeneous(int n) const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [n](const auto& t) { return t.first.degree() == n; });
}

int TPolynomial::max_degree() const noexcept {
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.degree());
    return d;
}

TPolynomial& TPolynomial::operator+=(const TPolynomial& other) {
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

TPolynomial& TPolynomial::operator-=(const TPolynomial& other) {
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

TPolynomial& TPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_)
        coeff *= c;
    return *this;
}

TPolynomial operator*(const TPolynomial& a, const TPolynomial& b) {
    TPolynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(ma * mb, ca * cb);
    return out;
}

std::string TPolynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (m.is_one())
            s += mag.get_str();
        else if (mag == 1)
            s += m.to_string();
        else
            s += mag.get_str() + "*" + m.to_string();
    }
    return s;
}

TPolynomial add(const TPolynomial& p, const TPolynomial& q) { return p + q; }

TPolynomial mul(const TPolynomial& p, const TPolynomial& q) { return p * q; }

TPolynomial reduce_r(const TPolynomial& p, int r) {
    if (r < 1)
        throw std::invalid_argument("reduce_r: r must be positive");
    TPolynomial out;
    for (const auto& [m, c] : p.terms())
        if (!m.involves_multiple_of(r))
            out.add_term(m, c);
    return out;
}

TPolynomial omega(const TPolynomial& p) {
    TPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        int flips = 0;
        for (const auto& [j, e] : m.powers())
            if (j % 2 == 0)
                flips += e;
        out.add_term(m, flips % 2 ? Rational(-c) : c);
    }
    return out;
}

TPolynomial graded_component(const TPolynomial& p, int n) {
    TPolynomial out;
    for (const auto& [m, c] : p.terms())
        if (m.degree() == n)
            out.add_term(m, c);
    return out;
}

std::vector<Monomial> monomials_of_degree(int n, int r) {
    std::vector<Monomial> out;
    for (const auto& nu : partitions_of(n)) {
        std::vector<std::pair<int, int>> powers;
        bool allowed = true;
        for (int part : nu.parts()) {
            if (r > 1 && part % r == 0)
                allowed = false;
            powers.emplace_back(part, 1);
        }
        if (allowed)
            out.emplace_back(std::move(powers));
    }
    std::sort(out.begin(), out.end(), MonomialOrder{});
    return out;
}

int exact_rank(const std::vector<TPolynomial>& rows) {
    std::map<Monomial, std::size_t, MonomialOrder> column;
    for (const auto& p : rows)
        for (const auto& [m, c] : p.terms())
            column.try_emplace(m, column.size());

    std::vector<std::vector<Rational>> matrix(rows.size(), std::vector<Rational>(column.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [m, c] : rows[i].terms())
            matrix[i][column.at(m)] = c;

    int rank = 0;
    const std::size_t height = matrix.size();
    for (std::size_t col = 0; col < column.size() && static_cast<std::size_t>(rank) < height; ++col) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < height && matrix[pivot][col] == 0)
            ++pivot;
        if (pivot == height)
            continue;
        std::swap(matrix[pivot], matrix[static_cast<std::size_t>(rank)]);
        const auto& prow = matrix[static_cast<std::size_t>(rank)];
        for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < height; ++i) {
            if (matrix[i][col] == 0)
                continue;
            Rational factor = matrix[i][col] / prow[col];
            for (std::size_t j = col; j < column.size(); ++j)
                matrix[i][j] -= factor * prow[j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace rsf
