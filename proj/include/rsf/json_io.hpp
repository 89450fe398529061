#pragma once

#include <json.hpp>

#include "rsf/affine.hpp"
#include "rsf/maya.hpp"
#include "rsf/partition.hpp"
#include "rsf/polyring.hpp"
#include "rsf/reduce.hpp"

namespace rsf {

using Json = nlohmann::ordered_json;

// Canonical JSON encodings. Key order is fixed so output is byte-stable.

Json to_json(const Partition& p);                 // [3,1]; [] for the empty partition
Json to_json(const CoreQuotient& cq);             // {"r","core","quotient","sign"}
Json to_json(const TPolynomial& p);               // [{"coeff":"num/den","monomial":{"j":e,...}},...]
Json to_json(const Decomposition& d);             // {"r","lambda","terms":[{"mu","coeff"},...]}
Json to_json(const WeightLabel& w);               // {"r","core","depth"}

/// Coefficient text "num/den" (denominator always present, positive, lowest terms).
std::string rational_to_string(const Rational& q);
/// Accepts "num/den" or a bare integer; throws std::invalid_argument otherwise.
Rational rational_from_string(const std::string& text);

Partition partition_from_json(const Json& j);
CoreQuotient core_quotient_from_json(const Json& j);
TPolynomial polynomial_from_json(const Json& j);
Decomposition decomposition_from_json(const Json& j);
WeightLabel weight_label_from_json(const Json& j);

}  // namespace rsf
