// Acceptance suite: every criterion runs exactly, prints one line, and the
// binary exits nonzero if anything failed. Never compiled out.
#include "qonsager/askey.hpp"
#include "qonsager/hierarchy.hpp"
#include "qonsager/serialize.hpp"
#include "qonsager/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace qonsager;

namespace {

const ScalarFraction Q = ScalarFraction::q();
const ScalarFraction R = ScalarFraction::r();
const NCPolynomial CA = NCPolynomial::gen_a();
const NCPolynomial CB = NCPolynomial::gen_b();

int failures = 0;

void run(int number, const std::string& title, const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string failure;
    try {
        body();
    } catch (const std::exception& e) {
        failure = e.what();
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    if (failure.empty()) {
        line << "[PASS] criterion " << number << ": " << title;
    } else {
        ++failures;
        line << "[FAIL] criterion " << number << ": " << title << " -- " << failure;
    }
    line.precision(1);
    line << "  (" << std::fixed << secs << "s)";
    std::cout << line.str() << std::endl;
}

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

ScalarFraction sf(long n, long d = 1) { return ScalarFraction(Rational(n, d)); }

NCPolynomial aletter(Letter l) { return NCPolynomial::letter(AlphabetTag::Abstract, l); }
NCPolynomial ascalar(const ScalarFraction& c) {
    return NCPolynomial::scalar(AlphabetTag::Abstract, c);
}
NCPolynomial cword(const std::string& w, const ScalarFraction& c = ScalarFraction(1)) {
    return NCPolynomial::monomial(AlphabetTag::Concrete, parse_word(w, AlphabetTag::Concrete), c);
}

// ---- criterion 1: the first three abstract generator displays ----------

// The printed closed forms, expanded through the engine's q-commutators.
NCPolynomial display_G1(const ScalarFraction& a1) {
    return q_commutator(aletter(Letter::wp(0)), aletter(Letter::wm(0)), 1) + ascalar(a1);
}

NCPolynomial display_G2(const ScalarFraction& a2) {
    auto Wm0 = aletter(Letter::wm(0)), Wp0 = aletter(Letter::wp(0));
    auto Wm1 = aletter(Letter::wm(1)), Wp1 = aletter(Letter::wp(1));
    auto block = Q.pow(-2) * (Wp0 * Wp0) + Q.pow(2) * (Wm0 * Wm0) +
                 R.inverse() * (aletter(Letter::g(0)) * aletter(Letter::gt(0)));
    auto inner = Q * q_commutator(Wp1, Wm0, 2) + Q.pow(-1) * q_commutator(Wp0, Wm1, 2) -
                 (Q - Q.pow(-1)) * block;
    return (Q.pow(2) + Q.pow(-2)).inverse() * inner + ascalar(a2);
}

NCPolynomial display_G3(const ScalarFraction& a3) {
    auto Wm0 = aletter(Letter::wm(0)), Wp0 = aletter(Letter::wp(0));
    auto Wm1 = aletter(Letter::wm(1)), Wp1 = aletter(Letter::wp(1));
    auto Wm2 = aletter(Letter::wm(2)), Wp2 = aletter(Letter::wp(2));
    auto block = Q.pow(-2) * (Wp0 * Wp1) + Q.pow(2) * (Wm0 * Wm1) +
                 R.inverse() * (aletter(Letter::g(1)) * aletter(Letter::gt(0)));
    auto inner = (Q - Q.pow(-1)) * (Q.pow(2) * (Wp2 * Wm0) + Q.pow(-2) * (Wm2 * Wp0)) +
                 q_commutator(Wp1, Wm1, 1) - (Q - Q.pow(-1)) * block;
    return (Q.pow(2) + Q.pow(-2) - ScalarFraction(1)).inverse() * inner + ascalar(a3);
}

void criterion1() {
    for (auto [a1, a2, a3] :
         {std::array<ScalarFraction, 3>{sf(0), sf(0), sf(0)},
          std::array<ScalarFraction, 3>{sf(1, 2), sf(-2, 3), sf(5)}}) {
        auto t0 = solve_coefficients(0, a1);
        auto t1 = solve_coefficients(1, a2);
        auto t2 = solve_coefficients(2, a3);
        require(ansatz_template(0).instantiate(t0) == display_G1(a1), "G_1 mismatch");
        require(ansatz_template(1).instantiate(t1) == display_G2(a2), "G_2 mismatch");
        require(ansatz_template(2).instantiate(t2) == display_G3(a3), "G_3 mismatch");
    }
}

// ---- criterion 2: the concrete realization of W_{-1} and G_2 -----------

void criterion2() {
    const ScalarFraction a1 = sf(2, 3), a2 = sf(-1, 5);
    const ScalarFraction dd = Q.pow(2) + Q.pow(-2);

    auto display_Wm1 = [&](const ScalarFraction& c1) {
        return R.inverse() * (dd * cword("ABA") - cword("AAB") - cword("BAA")) + cword("B") +
               (c1 * (Q - Q.pow(-1)) / R) * cword("A");
    };
    auto display_G2_concrete = [&](const ScalarFraction& c1, const ScalarFraction& c2) {
        auto inner = (Q.pow(-3) + Q.pow(-1)) * cword("AABB") - (Q.pow(3) + Q) * cword("BBAA") +
                     (Q.pow(-3) - Q.pow(3)) * (cword("ABBA") + cword("BAAB")) -
                     (Q.pow(-5) + Q.pow(-3) + sf(2) * Q.pow(-1)) * cword("ABAB") +
                     (Q.pow(5) + Q.pow(3) + sf(2) * Q) * cword("BABA") +
                     R * (Q - Q.pow(-1)) * (cword("AA") + cword("BB")) +
                     (c1 * dd * (Q - Q.pow(-1))) *
                         q_commutator(CB, CA, 1);
        return (R * dd).inverse() * inner + cword("", c2);
    };

    BuildOptions opts;
    opts.a_consts = {a1, a2};
    auto table = build_generator_table(1, opts);
    require(table.Wm[1] == display_Wm1(a1), "W_{-1} mismatch (generic a_1)");
    require(table.Wp[1] == display_Wm1(a1).exchanged(), "W_2 mismatch (generic a_1)");

    // The printed G_2 omits the a_1^2 unit term produced by the
    // G_1 Gt_1 / rho block; it is restored here (see the decisions ledger).
    auto e00 = table.coeffs[1].e.at({0, 0});
    auto expected = display_G2_concrete(a1, a2) +
                    cword("", e00 * a1 * a1 / R);
    require(table.G[1] == expected, "G_2 mismatch (generic a_1)");

    // With a_1 = 0 the printed display is matched verbatim.
    BuildOptions zopts;
    zopts.a_consts = {sf(0), a2};
    auto ztable = build_generator_table(1, zopts);
    require(ztable.Wm[1] == display_Wm1(sf(0)), "W_{-1} mismatch (a_1 = 0)");
    require(ztable.G[1] == display_G2_concrete(sf(0), a2), "G_2 mismatch (a_1 = 0)");
}

// ---- criterion 3: the first hierarchy polynomials ----------------------

void criterion3() {
    auto table = build_generator_table(2);
    require(build_f(0, table) == CA, "f_0 mismatch");

    const ScalarFraction dd = Q.pow(2) + Q.pow(-2);
    auto f1 = R.inverse() * (dd * cword("ABA") - cword("AAB") - cword("BAA")) + cword("B");
    require(build_f(1, table) == f1, "f_1 mismatch");

    // The printed f_2, with the ABABA sign, the B^2 A word and the rho
    // factor of the cubic block corrected (see the decisions ledger); the
    // corrections are forced by the G_2 display plus the recursion and are
    // machine-verified by the relation suite.
    auto inner = (Q.pow(-2) + sf(1)) * cword("AAABB") + (Q.pow(2) + sf(1)) * cword("BBAAA") -
                 (Q.pow(4) + Q.pow(-4)) * (cword("ABBAA") + cword("AABBA")) +
                 (Q.pow(-2) - Q.pow(4)) * cword("ABAAB") +
                 (Q.pow(2) - Q.pow(-4)) * cword("BAABA") -
                 (Q.pow(-4) + Q.pow(-2) + sf(2)) * cword("AABAB") -
                 (Q.pow(4) + Q.pow(2) + sf(2)) * cword("BABAA") +
                 (Q.pow(6) + Q.pow(4) + sf(2) * Q.pow(2) + sf(2) * Q.pow(-2) + Q.pow(-4) +
                  Q.pow(-6)) *
                     cword("ABABA") +
                 R * (Q.pow(2) - sf(1)) * (cword("AAA") + cword("ABB")) +
                 R * (Q.pow(-2) - sf(1)) * (cword("AAA") + cword("BBA"));
    auto f2 = (R.pow(2) * dd).inverse() * inner + f1.exchanged();
    require(build_f(2, table) == f2, "f_2 mismatch");
}

// ---- criterion 4: backend agreement up to level 4 -----------------------

void criterion4() {
    BuildOptions opts;
    opts.backend = SolveBackend::BothAgree;  // throws on any disagreement
    auto table = build_generator_table(4, opts);
    require(table.K == 4, "table incomplete");
}

// shared by criteria 5 and 6
const GeneratorTable& table_k4() {
    static GeneratorTable t = build_generator_table(4);
    return t;
}

// ---- criterion 5: the relation suite on the standard fleet -------------

void criterion5() {
    const auto& table = table_k4();
    auto report = check_relation_suite(table, default_fleet(), 4, 4);
    std::size_t failed = 0;
    for (const auto& e : report.entries)
        if (!e.passed) ++failed;
    require(report.all_passed,
            std::to_string(failed) + " of " + std::to_string(report.entries.size()) +
                " relation instances failed");
}

// ---- criterion 6: commuting hierarchy -----------------------------------

void criterion6() {
    const auto& table = table_k4();
    auto fleet = default_fleet();
    std::mt19937_64 rng(271828);
    std::uniform_int_distribution<long> pick(-9, 9);
    for (int trial = 0; trial < 3; ++trial) {
        ChargeSpec base;
        base.kappa = sf(pick(rng));
        base.kappa_star = sf(pick(rng));
        base.kappa_plus = sf(pick(rng));
        base.kappa_minus = sf(pick(rng));
        if (!base.any_nonzero()) base.kappa = 1;
        std::vector<ChargeSpec> specs;
        for (int k = 0; k <= 4; ++k) {
            ChargeSpec s = base;
            s.k = k;
            specs.push_back(s);
        }
        // the structural cross-relations (arbitrary kappa) once
        auto report = check_commutation(specs, table, fleet, trial == 0);
        require(report.all_passed, "commutator failed on trial " + std::to_string(trial));
    }
}

// ---- criterion 7: rho extraction ----------------------------------------

void criterion7() {
    // the 2x2 factorization oracle, written out independently
    auto oracle = [&](const Rational& a) {
        ScalarFraction av(a), ai(Rational(1) / a);
        ScalarFraction th0 = av * Q.pow(-1) + ai * Q;
        ScalarFraction th1 = av * Q + ai * Q.pow(-1);
        return (Q * th0 - Q.pow(-1) * th1) * (Q.pow(-1) * th0 - Q * th1);
    };
    const ScalarFraction expected = -((Q.pow(2) - Q.pow(-2)).pow(2));
    require(oracle(2) == expected, "oracle disagrees with the closed form");

    std::vector<std::pair<Rational, Rational>> params = {{2, 3}, {5, 7}, {3, 4}, {-2, 5}};
    for (auto& [a, b] : params) {
        auto rep = pair_d2(a, b);
        require(rep.rho == expected, "rho depends on the parameters");
        require(rep.rho == oracle(a), "rho disagrees with the oracle");
        require(extract_rho(rep.matA, rep.matB) == expected, "extract_rho mismatch");
    }
}

// ---- criterion 8: degrees, symmetry, counts, solvability ----------------

void criterion8() {
    auto table = build_generator_table(5);
    for (int k = 0; k <= 5; ++k) {
        require(table.Wm[k].degree() <= 2 * k + 1, "W degree bound violated");
        require(table.Wp[k].degree() <= 2 * k + 1, "W degree bound violated");
        require(table.G[k].degree() <= 2 * k + 2, "G degree bound violated");
        require(table.Wm[k].exchanged() == table.Wp[k], "exchange symmetry broken (W)");
        require(table.G[k].exchanged() == table.Gt[k], "exchange symmetry broken (G)");
    }
    for (int k = 0; k <= 6; ++k) {
        auto ws = build_constraints(k);
        require(ws.e_order.size() == CoefficientTable::expected_e_count(k),
                "e-unknown count wrong at k=" + std::to_string(k));
        if (ws.e_order.empty()) continue;
        auto res = solve(ws.system);
        require(res.status == SolveResult::Status::Unique,
                "reduced system not uniquely solvable at k=" + std::to_string(k));
        require(res.rank == ws.e_order.size(),
                "independent equations != unknowns at k=" + std::to_string(k));
    }
}

// ---- criterion 9: Askey-Wilson relations --------------------------------

void criterion9() {
    auto table = build_generator_table(2);

    auto rep = pair_aw_tuned_d2(2);
    auto params = extract_omega(rep);
    auto rel = discover_relations(rep, table, 3);
    require(rel.N == 1, "tuned pair should have a first-order relation");
    require(rel.alphas[0] == params.alpha && rel.alphas[1] == ScalarFraction(1),
            "alpha disagrees with the omega route");

    auto r2 = pair_aw_tuned_d2(3);
    require(extract_omega(r2).alpha != params.alpha, "tuned pairs not distinct");
    auto sum = direct_sum(rep, r2);
    auto rel2 = discover_relations(sum, table, 3);
    require(rel2.N == 2, "direct sum should have a second-order relation");

    // brute-force nullspace oracle, eliminated independently of discover
    {
        const int N = 2, dd = sum.dim * sum.dim;
        std::vector<std::vector<ScalarFraction>> m(2 * dd,
                                                   std::vector<ScalarFraction>(N + 1));
        for (int t = 0; t <= N; ++t) {
            auto wm = evaluate(table.Wm[t], sum);
            auto wp = evaluate(table.Wp[t], sum);
            for (int i = 0; i < dd; ++i) {
                m[i][t] = wm.e[i];
                m[dd + i][t] = wp.e[i];
            }
        }
        // solve for (alpha_0, alpha_1) with alpha_2 = 1 by elimination
        std::vector<ScalarFraction> alpha(N + 1, ScalarFraction(0));
        alpha[N] = 1;
        std::size_t rank = 0;
        for (int col = 0; col < N; ++col) {
            std::size_t pivot = m.size();
            for (std::size_t i = rank; i < m.size(); ++i)
                if (!m[i][col].is_zero()) {
                    pivot = i;
                    break;
                }
            require(pivot != m.size(), "oracle: unexpected rank collapse");
            std::swap(m[rank], m[pivot]);
            auto inv = m[rank][col].inverse();
            for (auto& x : m[rank]) x *= inv;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (i == rank || m[i][col].is_zero()) continue;
                auto f = m[i][col];
                for (int j = col; j <= N; ++j) m[i][j] -= f * m[rank][j];
            }
            ++rank;
        }
        for (std::size_t i = rank; i < m.size(); ++i)
            require(m[i][N].is_zero(), "oracle: system inconsistent");
        for (int col = 0; col < N; ++col) alpha[col] = -m[col][N];
        for (int t = 0; t <= N; ++t)
            require(rel2.alphas[t] == alpha[t], "discovered relation disagrees with oracle");
    }
}

// ---- criterion 10: degenerations ----------------------------------------

void criterion10() {
    auto table = build_generator_table(2);
    for (int k = 0; k <= 2; ++k)
        build_f(k, table).map_coefficients([](const ScalarFraction& c) {
            return c.specialize(Rational(1), ScalarFraction(16));  // throws on a pole
        });
    auto f1_spec = build_f(1, table).map_coefficients([](const ScalarFraction& c) {
        return c.specialize(Rational(1), ScalarFraction(16));
    });
    auto classical = sf(1, 16) * (sf(2) * cword("ABA") - cword("AAB") - cword("BAA")) +
                     cword("B");
    require(f1_spec == classical, "f_1 does not reduce to the classical form");

    auto rs0 = RewriteSystem::qdg(ScalarFraction(0));
    for (const auto& rule : rs0.rules) {
        require(rule.lead.size() == 4, "rule shape wrong at rho = 0");
        for (const auto& [w, c] : rule.replacement.terms())
            require(w.size() == 4, "Serre-type shape has only quartic words");
    }
    auto serre = q_commutator(CA, q_commutator(CA, q_commutator(CA, CB, 1), -1), 0);
    require(reduce_qdg(serre, rs0).is_zero(), "Serre relation does not reduce to zero");
}

}  // namespace

int main() {
    run(1, "abstract generator displays reproduced exactly", criterion1);
    run(2, "concrete realization matches the printed expansion", criterion2);
    run(3, "hierarchy polynomials f_0, f_1, f_2 exact", criterion3);
    run(4, "closed-form and representation backends agree through level 4", criterion4);
    run(5, "full relation suite exact on the fleet (k,l <= 4)", criterion5);
    run(6, "hierarchy charges commute exactly (k,l <= 4)", criterion6);
    run(7, "rho extraction parameter-independent and oracle-exact", criterion7);
    run(8, "degree bounds, exchange symmetry, counts and solvability", criterion8);
    run(9, "Askey-Wilson relations discovered and oracle-checked", criterion9);
    run(10, "q=1 and rho=0 degenerations", criterion10);

    if (failures == 0) {
        std::cout << "all acceptance criteria passed" << std::endl;
        return 0;
    }
    std::cout << failures << " acceptance criteria FAILED" << std::endl;
    return 1;
}
