#include <doctest.h>

#include "rsf/json_io.hpp"
#include "rsf/schur.hpp"

using rsf::Json;
using rsf::Partition;

TEST_CASE("partition JSON") {
    CHECK(rsf::to_json(Partition{3, 1}).dump() == "[3,1]");
    CHECK(rsf::to_json(Partition()).dump() == "[]");
    CHECK(rsf::partition_from_json(Json::parse("[2,2,1]")) == Partition{2, 2, 1});
    CHECK_THROWS(rsf::partition_from_json(Json::parse("[1,2]")));
    CHECK_THROWS(rsf::partition_from_json(Json::parse("{\"a\":1}")));
}

TEST_CASE("core-quotient JSON") {
    CHECK(rsf::to_json(rsf::r_decompose(Partition{2}, 2)).dump() ==
          R"({"r":2,"core":[],"quotient":[[],[1]],"sign":1})");
}

TEST_CASE("polynomial JSON is canonical") {
    CHECK(rsf::to_json(rsf::schur_in_t(Partition{2})).dump() ==
          R"([{"coeff":"1/2","monomial":{"1":2}},{"coeff":"1/1","monomial":{"2":1}}])");
    CHECK(rsf::to_json(rsf::TPolynomial(rsf::Rational(1))).dump() == R"([{"coeff":"1/1","monomial":{}}])");
    CHECK(rsf::to_json(rsf::TPolynomial()).dump() == "[]");
}

TEST_CASE("rational text") {
    CHECK(rsf::rational_to_string(rsf::Rational(-3, 6)) == "-1/2");
    CHECK(rsf::rational_from_string("4/8") == rsf::Rational(1, 2));
    CHECK(rsf::rational_from_string("-7") == rsf::Rational(-7));
    CHECK_THROWS(rsf::rational_from_string("x/2"));
    CHECK_THROWS(rsf::rational_from_string("1/0"));
    CHECK_THROWS(rsf::rational_from_string(""));
}

TEST_CASE("decoding inverts encoding") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& p : rsf::partitions_of(n)) {
            const auto poly = rsf::schur_in_t(p);
            CHECK(rsf::polynomial_from_json(Json::parse(rsf::to_json(poly).dump())) == poly);
            for (int r = 2; r <= 3; ++r) {
                const auto cq = rsf::r_decompose(p, r);
                CHECK(rsf::core_quotient_from_json(rsf::to_json(cq)) == cq);
                const auto d = rsf::decompose(p, r);
                CHECK(rsf::decomposition_from_json(rsf::to_json(d)) == d);
            }
        }
    const rsf::WeightLabel w{3, Partition{2}, 4};
    CHECK(rsf::to_json(w).dump() == R"({"r":3,"core":[2],"depth":4})");
    CHECK(rsf::weight_label_from_json(rsf::to_json(w)) == w);
}
