#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qonsager/generators.hpp"

using namespace qonsager;

namespace {

const ScalarFraction Q = ScalarFraction::q();
const ScalarFraction R = ScalarFraction::r();

ScalarFraction sf(long num, long den = 1) { return ScalarFraction(Rational(num, den)); }

Word cw(const std::string& s) { return parse_word(s, AlphabetTag::Concrete); }

}  // namespace

TEST_CASE("ansatz index sets match the examples") {
    SUBCASE("k=0: one mixed pair, no e blocks") {
        CHECK(CoefficientTable::a_pair_list(0) ==
              std::vector<std::pair<int, int>>{{0, 0}});
        CHECK(CoefficientTable::e_pair_list(0).empty());
        CHECK(CoefficientTable::expected_e_count(0) == 0);
    }
    SUBCASE("k=1: pairs (0,1),(1,0); e at (0,0)") {
        CHECK(CoefficientTable::a_pair_list(1) ==
              std::vector<std::pair<int, int>>{{1, 0}, {0, 1}});
        CHECK(CoefficientTable::e_pair_list(1) ==
              std::vector<std::pair<int, int>>{{0, 0}});
    }
    SUBCASE("k=2: pairs at sums 0 and 2; single e at (0,1)") {
        CHECK(CoefficientTable::a_pair_list(2) ==
              std::vector<std::pair<int, int>>{{0, 0}, {2, 0}, {1, 1}, {0, 2}});
        CHECK(CoefficientTable::e_pair_list(2) ==
              std::vector<std::pair<int, int>>{{0, 1}});
    }
    SUBCASE("e-unknown count for k <= 6") {
        CHECK(CoefficientTable::expected_e_count(3) == 3);
        CHECK(CoefficientTable::expected_e_count(4) == 3);
        CHECK(CoefficientTable::expected_e_count(5) == 6);
        CHECK(CoefficientTable::expected_e_count(6) == 6);
        for (int k = 0; k <= 6; ++k)
            CHECK(CoefficientTable::e_pair_list(k).size() ==
                  CoefficientTable::expected_e_count(k));
    }
}

TEST_CASE("ansatz template shape") {
    auto t0 = ansatz_template(0);
    // a(0,0), b(0,0), const
    CHECK(t0.blocks.size() == 3);
    auto t1 = ansatz_template(1);
    // two pairs x2 + one e block + const
    CHECK(t1.blocks.size() == 6);
    // The e block has the fixed three-part shape.
    auto t2 = ansatz_template(2);
    for (const auto& [ref, block] : t2.blocks) {
        if (ref.kind != CoeffRef::E) continue;
        CHECK(ref.i == 0);
        CHECK(ref.j == 1);
        CHECK(block.coefficient({Letter::wm(0), Letter::wm(1)}) == Q.pow(2));
        CHECK(block.coefficient({Letter::wp(0), Letter::wp(1)}) == Q.pow(-2));
        CHECK(block.coefficient({Letter::g(1), Letter::gt(0)}) == R.inverse());
    }
}

TEST_CASE("solved coefficients reproduce the k=0,1,2 displays") {
    SUBCASE("k=0") {
        auto t = solve_coefficients(0);
        CHECK(t.a.at({0, 0}) == -Q.pow(-1));
        CHECK(t.b.at({0, 0}) == Q);
        CHECK(t.e.empty());
    }
    SUBCASE("k=1") {
        auto t = solve_coefficients(1);
        const ScalarFraction d = Q.pow(2) + Q.pow(-2);
        CHECK(t.e.at({0, 0}) == -(Q - Q.pow(-1)) / d);
        CHECK(t.a.at({0, 1}) == -Q.pow(-1) / d);
        CHECK(t.b.at({1, 0}) == Q.pow(3) / d);
        CHECK(t.b.at({0, 1}) == Q / d);
        CHECK(t.a.at({1, 0}) == -Q.pow(-3) / d);
    }
    SUBCASE("k=2") {
        auto t = solve_coefficients(2);
        const ScalarFraction d = Q.pow(2) + Q.pow(-2) - ScalarFraction(1);
        CHECK(t.e.at({0, 1}) == -(Q - Q.pow(-1)) / d);
        CHECK(t.a.at({1, 1}) == -Q.pow(-1) / d);
        CHECK(t.b.at({1, 1}) == Q / d);
        CHECK(t.a.at({2, 0}) == Q.pow(-2) * (Q - Q.pow(-1)) / d);
        CHECK(t.b.at({2, 0}) == Q.pow(2) * (Q - Q.pow(-1)) / d);
        CHECK(t.a.count({0, 0}) == 0);  // zero coefficients are dropped
        CHECK(t.b.count({0, 0}) == 0);
        CHECK(t.a.count({0, 2}) == 0);
        CHECK(t.b.count({0, 2}) == 0);
    }
}

TEST_CASE("reduced system is uniquely solvable through k=6") {
    for (int k = 0; k <= 6; ++k) {
        auto ws = build_constraints(k);
        CHECK(ws.e_order.size() == CoefficientTable::expected_e_count(k));
        if (!ws.e_order.empty()) {
            auto res = solve(ws.system);
            REQUIRE(res.status == SolveResult::Status::Unique);
            CHECK(res.rank == ws.e_order.size());
            // solutions stay inside Q(q): no r appears
            for (const auto& v : res.solution) CHECK(!v.has_r());
        }
    }
}

TEST_CASE("constraint workspace audit: sum rules hold at the solution") {
    for (int k = 1; k <= 5; ++k) {
        auto ws = build_constraints(k);
        auto table = solve_coefficients(k);
        std::vector<ScalarFraction> ev;
        for (auto& pr : ws.e_order) ev.push_back(table.e.at(pr));

        const ScalarFraction qpqi = Q + Q.pow(-1);
        const ScalarFraction q2m = Q.pow(2) - Q.pow(-2);
        for (int l = 1; l <= ws.alpha; ++l) {
            ScalarFraction s = ws.s_form.at(l).eval(ev);
            ScalarFraction expect = (l == ws.alpha) ? -qpqi : ScalarFraction(0);
            CHECK(s == expect);

            // partial-sum rule: p(0,l) = w*(q^2-q^-2)*e(0, 2l-kbar)
            ScalarFraction p0 = ws.p_form.at({0, l}).eval(ev);
            auto it = table.e.find({0, 2 * l - ws.kbar});
            ScalarFraction erhs = it == table.e.end() ? ScalarFraction(0) : it->second;
            CHECK(p0 == ws.w * q2m * erhs);
        }

        // accumulated forms vanish on the top diagonal
        for (int i = 0; i <= ws.alpha - ws.kbar; ++i)
            CHECK(ws.abar.at({i, k - i}).eval(ev).is_zero());
    }
}

TEST_CASE("extend_W reproduces the first recursion step") {
    SUBCASE("with the level constant set to zero") {
        auto table = build_generator_table(0);
        const ScalarFraction d = Q.pow(2) + Q.pow(-2);
        const auto& wm1 = table.Wm[1];
        CHECK(wm1.coefficient(cw("ABA")) == d / R);
        CHECK(wm1.coefficient(cw("AAB")) == -R.inverse());
        CHECK(wm1.coefficient(cw("BAA")) == -R.inverse());
        CHECK(wm1.coefficient(cw("B")) == ScalarFraction(1));
        CHECK(wm1.term_count() == 4);
        CHECK(table.Wp[1] == wm1.exchanged());
    }
    SUBCASE("with a generic level constant the linear term appears") {
        BuildOptions opts;
        opts.a_consts = {sf(2, 3)};
        auto table = build_generator_table(0, opts);
        const auto& wm1 = table.Wm[1];
        CHECK(wm1.coefficient(cw("A")) == sf(2, 3) * (Q - Q.pow(-1)) / R);
        CHECK(wm1.coefficient(cw("B")) == ScalarFraction(1));
        CHECK(table.G[0].coefficient(cw("")) == sf(2, 3));
    }
}

TEST_CASE("level-1 generator matches the printed expansion") {
    BuildOptions opts;
    opts.a_consts = {sf(1, 2), sf(0)};
    auto table = build_generator_table(1, opts);
    const auto& g2 = table.G[1];
    const ScalarFraction d = R * (Q.pow(2) + Q.pow(-2));

    CHECK(g2.coefficient(cw("AABB")) == (Q.pow(-3) + Q.pow(-1)) / d);
    CHECK(g2.coefficient(cw("BBAA")) == -(Q.pow(3) + Q) / d);
    CHECK(g2.coefficient(cw("ABBA")) == (Q.pow(-3) - Q.pow(3)) / d);
    CHECK(g2.coefficient(cw("BAAB")) == (Q.pow(-3) - Q.pow(3)) / d);
    CHECK(g2.coefficient(cw("ABAB")) == -(Q.pow(-5) + Q.pow(-3) + ScalarFraction(2) * Q.pow(-1)) / d);
    CHECK(g2.coefficient(cw("BABA")) == (Q.pow(5) + Q.pow(3) + ScalarFraction(2) * Q) / d);
    CHECK(g2.coefficient(cw("AA")) == R * (Q - Q.pow(-1)) / d);
    CHECK(g2.coefficient(cw("BB")) == R * (Q - Q.pow(-1)) / d);
    // the a_1 block: a_1 (q^2+q^-2)(q-q^-1) [B,A]_q / denominator
    const ScalarFraction ab = sf(1, 2) * (Q.pow(2) + Q.pow(-2)) * (Q - Q.pow(-1)) / d;
    CHECK(g2.coefficient(cw("BA")) == ab * Q);
    CHECK(g2.coefficient(cw("AB")) == -ab * Q.pow(-1));
    // The mixed block carries G_1*Gt_1/r, whose a_1^2 part lands on the
    // unit word (the level constant itself is 0 here).
    const ScalarFraction e00 = -(Q - Q.pow(-1)) / (Q.pow(2) + Q.pow(-2));
    CHECK(g2.coefficient(cw("")) == e00 * sf(1, 4) / R);
    CHECK(table.Gt[1] == g2.exchanged());
}

TEST_CASE("closed-form and representation backends agree") {
    BuildOptions opts;
    opts.backend = SolveBackend::BothAgree;
    opts.a_consts = {sf(1, 3), sf(0), sf(2)};
    auto table = build_generator_table(2, opts);
    CHECK(table.K == 2);
    CHECK(table.coeffs[2].e.at({0, 1}) ==
          -(Q - Q.pow(-1)) / (Q.pow(2) + Q.pow(-2) - ScalarFraction(1)));
}

TEST_CASE("rescaling homogeneity of the recursion") {
    // With all level constants zero, A -> lambda A, B -> lambda B,
    // r -> lambda^2 r is a symmetry: every W picks up a single factor of
    // lambda and every G a factor of lambda^2 (word length minus twice the
    // r-degree is 1 resp. 2 for every stored term).
    auto table = build_generator_table(2);
    const ScalarFraction lambda = sf(3);
    auto rescale = [&](const NCPolynomial& p) {
        return p.map_coefficients([&](const ScalarFraction& c) {
                    return c.scale_r(Rational(9));
                })
            .scale_letters(lambda);
    };
    for (int k = 0; k <= 3; ++k) {
        CHECK(rescale(table.Wm[k]) == lambda * table.Wm[k]);
        CHECK(rescale(table.Wp[k]) == lambda * table.Wp[k]);
    }
    for (int k = 0; k <= 2; ++k)
        CHECK(rescale(table.G[k]) == lambda.pow(2) * table.G[k]);
}

TEST_CASE("degree bounds and exchange symmetry") {
    auto table = build_generator_table(3);
    for (int k = 0; k <= 4; ++k) {
        CHECK(table.Wm[k].degree() <= 2 * k + 1);
        CHECK(table.Wp[k].degree() <= 2 * k + 1);
        CHECK(table.Wm[k].exchanged() == table.Wp[k]);
    }
    for (int k = 0; k <= 3; ++k) {
        CHECK(table.G[k].degree() <= 2 * k + 2);
        CHECK(table.G[k].exchanged() == table.Gt[k]);
    }
}

TEST_CASE("abstract instantiation matches the concrete build") {
    auto table = build_generator_table(2);
    for (int k = 0; k <= 2; ++k) {
        auto tmpl = ansatz_template(k);
        NCPolynomial abstract = tmpl.instantiate(table.coeffs[k]);
        CHECK(table.substitute(abstract) == table.G[k]);
    }
}

TEST_CASE("companion mismatch on a corrupted table is detected") {
    auto table = build_generator_table(1);
    table.Gt[1] += (ScalarFraction::q()) * (NCPolynomial::gen_a() * NCPolynomial::gen_b());
    CHECK_THROWS_AS(extend_W(1, table, true), std::domain_error);
    // with checks off the step goes through regardless
    CHECK_NOTHROW(extend_W(1, table, false));
}

TEST_CASE("with_rho specializes every coefficient") {
    auto table = build_generator_table(1);
    auto rho = -((Q.pow(2) - Q.pow(-2)).pow(2));
    auto spec = table.with_rho(rho);
    CHECK(spec.Wm[1].coefficient(cw("ABA")) == (Q.pow(2) + Q.pow(-2)) / rho);
    CHECK_THROWS_AS(table.with_rho(ScalarFraction(0)), std::domain_error);
}
