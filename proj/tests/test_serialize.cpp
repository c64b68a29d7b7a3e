#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qonsager/serialize.hpp"

#include <random>

using namespace qonsager;

namespace {

std::mt19937_64 rng(33001);

ScalarFraction random_coeff() {
    std::uniform_int_distribution<long> c(-7, 7), e(0, 3);
    auto v = ScalarFraction(c(rng)) * ScalarFraction::q(1).pow(e(rng)) + ScalarFraction(c(rng));
    if (e(rng) == 0) v = v / ScalarFraction::r(1);
    return v;
}

NCPolynomial random_poly(AlphabetTag tag) {
    std::uniform_int_distribution<int> nterms(0, 5), len(0, 3), which(0, 3), idx(0, 4);
    NCPolynomial p(tag);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Word w;
        int m = len(rng);
        for (int j = 0; j < m; ++j) {
            if (tag == AlphabetTag::Concrete) {
                w.push_back(which(rng) % 2 ? Letter::b() : Letter::a());
            } else {
                switch (which(rng)) {
                    case 0: w.push_back(Letter::wm(idx(rng))); break;
                    case 1: w.push_back(Letter::wp(idx(rng))); break;
                    case 2: w.push_back(Letter::g(idx(rng))); break;
                    default: w.push_back(Letter::gt(idx(rng))); break;
                }
            }
        }
        p.add_term(std::move(w), random_coeff());
    }
    return p;
}

}  // namespace

TEST_CASE("polynomial JSON schema") {
    auto g1 = q_commutator(NCPolynomial::gen_b(), NCPolynomial::gen_a(), 1);
    auto j = poly_to_json(g1);
    CHECK(j["alphabet"] == "concrete");
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["word"] == "BA");
    CHECK(j["terms"][0]["coeff"] == "q");
    CHECK(j["terms"][1]["word"] == "AB");
    CHECK(j["terms"][1]["coeff"] == "(-1)/(q)");
    // the unit word serializes as ""
    auto unit = NCPolynomial::scalar(AlphabetTag::Concrete, ScalarFraction(3));
    CHECK(poly_to_json(unit)["terms"][0]["word"] == "");
}

TEST_CASE("round trip on random polynomials") {
    for (int i = 0; i < 150; ++i) {
        for (auto tag : {AlphabetTag::Concrete, AlphabetTag::Abstract}) {
            auto p = random_poly(tag);
            auto q = poly_from_json(poly_to_json(p));
            CHECK(p == q);
        }
    }
}

TEST_CASE("serialization is byte stable") {
    auto table = build_generator_table(1);
    auto j1 = generator_table_to_json(table).dump();
    auto j2 = generator_table_to_json(build_generator_table(1)).dump();
    CHECK(j1 == j2);
    auto roundtrip = poly_from_json(poly_to_json(table.G[1]));
    CHECK(poly_to_json(roundtrip).dump() == poly_to_json(table.G[1]).dump());
}

TEST_CASE("report serialization") {
    RelationReport r;
    r.add("qo1", 1, std::nullopt, "d2:a=2,b=3", true);
    r.add("qo4", 0, 1, "d2:a=2,b=3", false);
    auto j = report_to_json(r);
    CHECK(j["all_passed"] == false);
    REQUIRE(j["entries"].size() == 2);
    CHECK(j["entries"][0]["relation"] == "qo1");
    CHECK(j["entries"][0]["l"].is_null());
    CHECK(j["entries"][1]["l"] == 1);
}

TEST_CASE("latex export mirrors the display conventions") {
    auto table = build_generator_table(0);
    auto tex = generator_table_to_latex(table);
    CHECK(tex.find("\\textsf{A}") != std::string::npos);
    CHECK(tex.find("{\\textsf{A}^*}") != std::string::npos);
    auto f1tex = table.Wm[1].to_latex();
    CHECK(f1tex.find("\\rho") != std::string::npos);
}
