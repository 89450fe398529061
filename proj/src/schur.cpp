#include "rsf/schur.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "rsf/maya.hpp"

namespace rsf {

CycleType::CycleType(const Partition& cycles) {
    for (int len : cycles.parts())
        ++mult_[len];
    n_ = cycles.size();
}

CycleType::CycleType(std::map<int, int> multiplicities) {
    for (const auto& [j, m] : multiplicities) {
        if (j < 1 || m < 0)
            throw std::invalid_argument("CycleType: invalid cycle length or count");
        if (m > 0) {
            mult_[j] = m;
            n_ += j * m;
        }
    }
}

Partition CycleType::cycles() const {
    std::vector<int> parts;
    for (auto it = mult_.rbegin(); it != mult_.rend(); ++it)
        parts.insert(parts.end(), static_cast<std::size_t>(it->second), it->first);
    return Partition(std::move(parts));
}

mpz_class CycleType::z() const {
    mpz_class z = 1;
    for (const auto& [j, m] : mult_) {
        mpz_class power, fact;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(m));
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m));
        z *= power * fact;
    }
    return z;
}

Monomial CycleType::monomial() const {
    return Monomial(std::vector<std::pair<int, int>>(mult_.begin(), mult_.end()));
}

bool CycleType::has_part_divisible_by(int r) const noexcept {
    for (const auto& [j, m] : mult_)
        if (j % r == 0)
            return true;
    return false;
}

namespace {

using CharacterKey = std::pair<std::vector<int>, std::vector<int>>;

struct CharacterMemo {
    std::shared_mutex mutex;
    std::map<CharacterKey, std::int64_t> values;
};

CharacterMemo& character_memo() {
    static CharacterMemo memo;
    return memo;
}

// `cycles` is weakly decreasing; the largest cycle is stripped first.
std::int64_t character_rec(const Partition& lambda, const std::vector<int>& cycles) {
    if (cycles.empty())
        return 1;  // lambda is empty here
    CharacterKey key{lambda.parts(), cycles};
    auto& memo = character_memo();
    {
        std::shared_lock lock(memo.mutex);
        if (auto it = memo.values.find(key); it != memo.values.end())
            return it->second;
    }
    std::vector<int> rest(cycles.begin() + 1, cycles.end());
    std::int64_t value = 0;
    for (const auto& removal : border_strip_removals(lambda, cycles.front())) {
        std::int64_t sub = character_rec(removal.result, rest);
        value += removal.height % 2 ? -sub : sub;
    }
    std::unique_lock lock(memo.mutex);
    memo.values.emplace(std::move(key), value);
    return value;
}

TPolynomial character_sum(const Partition& lambda, int skip_multiples_of) {
    TPolynomial out;
    for (const auto& nu : partitions_of(lambda.size())) {
        CycleType type(nu);
        if (skip_multiples_of > 1 && type.has_part_divisible_by(skip_multiples_of))
            continue;
        mpz_class denom = 1;
        for (const auto& [j, m] : type.multiplicities()) {
            mpz_class fact;
            mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m));
            denom *= fact;
        }
        Rational coeff(mpz_class(static_cast<long>(character_rec(lambda, nu.parts()))), denom);
        coeff.canonicalize();
        out.add_term(type.monomial(), coeff);
    }
    return out;
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const CycleType& nu) {
    if (lambda.size() != nu.degree())
        throw std::invalid_argument("mn_character: |lambda| = " + std::to_string(lambda.size()) +
                                    " but the class has degree " + std::to_string(nu.degree()));
    return character_rec(lambda, nu.cycles().parts());
}

TPolynomial schur_in_t(const Partition& lambda) { return character_sum(lambda, 0); }

TPolynomial reduced_schur(const Partition& lambda, int r) {
    if (r < 2)
        throw std::invalid_argument("reduced_schur: r must be >= 2");
    // Classes with a cycle divisible by r contribute only monomials containing some t_{jr}.
    return character_sum(lambda, r);
}

std::vector<std::pair<Partition, int>> schur_times_power_sum(const Partition& lambda, int j) {
    if (j < 1)
        throw std::invalid_argument("schur_times_power_sum: j must be >= 1");
    const int beads = lambda.length() + j;
    const MayaDiagram alpha(beta_set(lambda, beads), -1);
    std::vector<std::pair<Partition, int>> out;
    // Entries past `beads` land on occupied positions once shifted by j.
    for (int i = 1; i <= beads; ++i) {
        auto sorted = sort_sign(alpha.with_added(i, j));
        if (sorted.sign != 0)
            out.emplace_back(sorted.diagram.to_partition(), sorted.sign);
    }
    return out;
}

}  // namespace rsf
