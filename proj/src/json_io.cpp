#include "rsf/json_io.hpp"

#include <stdexcept>

namespace rsf {

Json to_json(const Partition& p) {
    Json out = Json::array();
    for (int part : p.parts())
        out.push_back(part);
    return out;
}

Json to_json(const CoreQuotient& cq) {
    Json quotient = Json::array();
    for (const auto& q : cq.quotient)
        quotient.push_back(to_json(q));
    return Json{{"r", cq.r}, {"core", to_json(cq.core)}, {"quotient", quotient}, {"sign", cq.sign}};
}

std::string rational_to_string(const Rational& value) {
    Rational q = value;
    q.canonicalize();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("not a rational number: '" + text + "'");
    q.canonicalize();
    return q;
}

Json to_json(const TPolynomial& p) {
    Json out = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json monomial = Json::object();
        for (const auto& [j, e] : m.powers())
            monomial[std::to_string(j)] = e;
        out.push_back(Json{{"coeff", rational_to_string(c)}, {"monomial", monomial}});
    }
    return out;
}

Json to_json(const Decomposition& d) {
    Json terms = Json::array();
    for (const auto& [mu, coeff] : d.terms)
        terms.push_back(Json{{"mu", to_json(mu)}, {"coeff", coeff}});
    return Json{{"r", d.r}, {"lambda", to_json(d.source)}, {"terms", terms}};
}

Json to_json(const WeightLabel& w) {
    return Json{{"r", w.r}, {"core", to_json(w.core)}, {"depth", w.depth}};
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("partition must be a JSON array");
    std::vector<int> parts;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw std::invalid_argument("partition entries must be integers");
        parts.push_back(x.get<int>());
    }
    return Partition(std::move(parts));
}

CoreQuotient core_quotient_from_json(const Json& j) {
    CoreQuotient cq;
    cq.r = j.at("r").get<int>();
    cq.core = partition_from_json(j.at("core"));
    for (const auto& q : j.at("quotient"))
        cq.quotient.push_back(partition_from_json(q));
    cq.sign = j.at("sign").get<int>();
    return cq;
}

TPolynomial polynomial_from_json(const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("polynomial must be a JSON array of terms");
    TPolynomial out;
    for (const auto& term : j) {
        std::vector<std::pair<int, int>> powers;
        for (const auto& [key, e] : term.at("monomial").items())
            powers.emplace_back(std::stoi(key), e.get<int>());
        out.add_term(Monomial(std::move(powers)), rational_from_string(term.at("coeff").get<std::string>()));
    }
    return out;
}

Decomposition decomposition_from_json(const Json& j) {
    Decomposition d;
    d.r = j.at("r").get<int>();
    d.source = partition_from_json(j.at("lambda"));
    for (const auto& t : j.at("terms"))
        d.terms.emplace_back(partition_from_json(t.at("mu")), t.at("coeff").get<std::int64_t>());
    return d;
}

WeightLabel weight_label_from_json(const Json& j) {
    return {j.at("r").get<int>(), partition_from_json(j.at("core")), j.at("depth").get<int>()};
}

}  // namespace rsf
