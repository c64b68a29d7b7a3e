#include "qonsager/verify.hpp"

namespace qonsager {

namespace {

ScalarFraction qp(int e) { return ScalarFraction::q(e); }

NCPolynomial word_poly(const Word& w) {
    return NCPolynomial::monomial(AlphabetTag::Concrete, w);
}

}  // namespace

RewriteSystem RewriteSystem::qdg(const ScalarFraction& rho) {
    const Letter A = Letter::a(), B = Letter::b();
    const ScalarFraction c = ScalarFraction(1) + qp(2) + qp(-2);

    RewriteSystem rs;
    rs.rho = rho;

    // BAAA -> AAAB - c AABA + c ABAA - rho AB + rho BA
    NCPolynomial r1 = word_poly({A, A, A, B}) - c * word_poly({A, A, B, A}) +
                      c * word_poly({A, B, A, A}) - rho * word_poly({A, B}) +
                      rho * word_poly({B, A});
    rs.rules.push_back({{B, A, A, A}, std::move(r1)});

    // BBBA -> c BBAB - c BABB + ABBB + rho BA - rho AB
    NCPolynomial r2 = c * word_poly({B, B, A, B}) - c * word_poly({B, A, B, B}) +
                      word_poly({A, B, B, B}) + rho * word_poly({B, A}) -
                      rho * word_poly({A, B});
    rs.rules.push_back({{B, B, B, A}, std::move(r2)});
    return rs;
}

namespace {

// First position where `pat` occurs as a contiguous subword, or npos.
std::size_t find_subword(const Word& w, const Word& pat) {
    if (w.size() < pat.size()) return std::string::npos;
    for (std::size_t i = 0; i + pat.size() <= w.size(); ++i) {
        bool hit = true;
        for (std::size_t j = 0; j < pat.size(); ++j)
            if (!(w[i + j] == pat[j])) {
                hit = false;
                break;
            }
        if (hit) return i;
    }
    return std::string::npos;
}

}  // namespace

NCPolynomial reduce_qdg(const NCPolynomial& p, const RewriteSystem& rs) {
    if (p.alphabet() != AlphabetTag::Concrete)
        throw std::invalid_argument("reduce_qdg: expected a concrete polynomial");
    NCPolynomial cur = p;
    for (;;) {
        bool changed = false;
        // scan leading words first; any redex found restarts the scan
        for (auto it = cur.terms().rbegin(); it != cur.terms().rend(); ++it) {
            const Word w = it->first;
            for (const auto& rule : rs.rules) {
                std::size_t pos = find_subword(w, rule.lead);
                if (pos == std::string::npos) continue;
                const ScalarFraction c = it->second;
                Word prefix(w.begin(), w.begin() + pos);
                Word suffix(w.begin() + pos + rule.lead.size(), w.end());
                NCPolynomial repl =
                    word_poly(prefix) * rule.replacement * word_poly(suffix);
                cur.add_term(w, -c);
                cur += c * repl;
                changed = true;
                break;
            }
            if (changed) break;
        }
        if (!changed) return cur;
    }
}

namespace {

// Per-representation cache of the evaluated generator matrices.
struct RepCache {
    const MatrixRep* rep;
    std::vector<ExactMatrix> Wm, Wp, G, Gt;
    ScalarFraction q1, qm1;

    RepCache(const GeneratorTable& table, const MatrixRep& r) : rep(&r) {
        const int K = table.K;
        Wm.reserve(K + 2);
        Wp.reserve(K + 2);
        for (int i = 0; i <= K + 1; ++i) {
            Wm.push_back(evaluate(table.Wm[i], r));
            Wp.push_back(evaluate(table.Wp[i], r));
        }
        for (int i = 0; i <= K; ++i) {
            G.push_back(evaluate(table.G[i], r));
            Gt.push_back(evaluate(table.Gt[i], r));
        }
        q1 = r.q_scalar(1);
        qm1 = r.q_scalar(-1);
    }

    ExactMatrix comm(const ExactMatrix& x, const ExactMatrix& y) const {
        return x * y - y * x;
    }
    ExactMatrix qcomm(const ExactMatrix& x, const ExactMatrix& y) const {
        return q1 * (x * y) - qm1 * (y * x);
    }
};

}  // namespace

RelationReport check_relation_suite(const GeneratorTable& table,
                                    const std::vector<MatrixRep>& reps, int k_max, int l_max,
                                    const std::optional<std::set<std::string>>& only) {
    RelationReport report;
    const int K = table.K;
    const int kw = std::min(k_max, K + 1);  // top admissible W index
    const int kg = std::min(k_max, K);      // top admissible G index
    auto wants = [&](const char* name) { return !only || only->count(name) > 0; };

    for (const auto& rep : reps) {
        RepCache rc(table, rep);
        const ScalarFraction& rho = rep.rho;
        const ScalarFraction qpq_inv = (rc.q1 + rc.qm1).inverse();
        // The auxiliary identities carry 1/(q^2 - q^-2) prefactors and are
        // not admissible on reps specialized at q = +-1.
        const bool have_aux = !(rc.q1 * rc.q1 - rc.qm1 * rc.qm1).is_zero();
        const ScalarFraction vfac =
            have_aux ? (rc.q1 - rc.qm1) / (rho * (rc.q1 + rc.qm1)) : ScalarFraction(0);
        const ScalarFraction wfac =
            have_aux ? ScalarFraction(1) / (rho * (rc.q1 * rc.q1 - rc.qm1 * rc.qm1))
                     : ScalarFraction(0);

        if (wants("qo1")) {
            for (int k = 0; k <= kg; ++k) {
                ExactMatrix d = qpq_inv * (rc.Gt[k] - rc.G[k]);
                bool ok = (rc.comm(rc.Wm[0], rc.Wp[k]) - d).is_zero() &&
                          (rc.comm(rc.Wm[k], rc.Wp[0]) - d).is_zero();
                report.add("qo1", k, std::nullopt, rep.id, ok);
            }
        }
        if (wants("qo2")) {
            for (int k = 0; k <= kg; ++k) {
                ExactMatrix rhs = rho * (rc.Wm[k + 1] - rc.Wp[k]);
                bool ok = (rc.qcomm(rc.Wm[0], rc.G[k]) - rhs).is_zero() &&
                          (rc.qcomm(rc.Gt[k], rc.Wm[0]) - rhs).is_zero();
                report.add("qo2", k, std::nullopt, rep.id, ok);
            }
        }
        if (wants("qo3")) {
            for (int k = 0; k <= kg; ++k) {
                ExactMatrix rhs = rho * (rc.Wp[k + 1] - rc.Wm[k]);
                bool ok = (rc.qcomm(rc.G[k], rc.Wp[0]) - rhs).is_zero() &&
                          (rc.qcomm(rc.Wp[0], rc.Gt[k]) - rhs).is_zero();
                report.add("qo3", k, std::nullopt, rep.id, ok);
            }
        }
        if (wants("qo4")) {
            for (int k = 0; k <= kw; ++k)
                for (int l = 0; l <= std::min(l_max, K + 1); ++l) {
                    bool ok = rc.comm(rc.Wm[k], rc.Wm[l]).is_zero() &&
                              rc.comm(rc.Wp[k], rc.Wp[l]).is_zero();
                    report.add("qo4", k, l, rep.id, ok);
                }
        }
        if (wants("qo5")) {
            for (int k = 0; k <= kw; ++k)
                for (int l = 0; l <= std::min(l_max, K + 1); ++l) {
                    bool ok = (rc.comm(rc.Wm[k], rc.Wp[l]) + rc.comm(rc.Wp[k], rc.Wm[l]))
                                  .is_zero();
                    report.add("qo5", k, l, rep.id, ok);
                }
        }
        const int lg = std::min(l_max, K);
        if (wants("qo6")) {
            for (int k = 0; k <= kg; ++k)
                for (int l = 0; l <= lg; ++l)
                    report.add("qo6", k, l, rep.id,
                               (rc.comm(rc.Wm[k], rc.G[l]) + rc.comm(rc.G[k], rc.Wm[l]))
                                   .is_zero());
        }
        if (wants("qo7")) {
            for (int k = 0; k <= kg; ++k)
                for (int l = 0; l <= lg; ++l)
                    report.add("qo7", k, l, rep.id,
                               (rc.comm(rc.Wm[k], rc.Gt[l]) + rc.comm(rc.Gt[k], rc.Wm[l]))
                                   .is_zero());
        }
        if (wants("qo8")) {
            for (int k = 0; k <= kg; ++k)
                for (int l = 0; l <= lg; ++l)
                    report.add("qo8", k, l, rep.id,
                               (rc.comm(rc.Wp[k], rc.G[l]) + rc.comm(rc.G[k], rc.Wp[l]))
                                   .is_zero());
        }
        if (wants("qo9")) {
            for (int k = 0; k <= kg; ++k)
                for (int l = 0; l <= lg; ++l)
                    report.add("qo9", k, l, rep.id,
                               (rc.comm(rc.Wp[k], rc.Gt[l]) + rc.comm(rc.Gt[k], rc.Wp[l]))
                                   .is_zero());
        }
        if (wants("qo10")) {
            for (int k = 0; k <= kg; ++k)
                for (int l = 0; l <= lg; ++l) {
                    bool ok = rc.comm(rc.G[k], rc.G[l]).is_zero() &&
                              rc.comm(rc.Gt[k], rc.Gt[l]).is_zero();
                    report.add("qo10", k, l, rep.id, ok);
                }
        }
        if (wants("qo11")) {
            for (int k = 0; k <= kg; ++k)
                for (int l = 0; l <= lg; ++l)
                    report.add("qo11", k, l, rep.id,
                               (rc.comm(rc.Gt[k], rc.G[l]) + rc.comm(rc.G[k], rc.Gt[l]))
                                   .is_zero());
        }
        if (wants("h1") && have_aux) {
            for (int i = 0; i <= kg; ++i)
                for (int j = 0; j <= lg; ++j) {
                    ExactMatrix lhs = rc.comm(rc.Wm[i + 1], rc.Wp[j]) -
                                      rc.comm(rc.Wm[i], rc.Wp[j + 1]);
                    ExactMatrix rhs =
                        vfac * (rc.G[i] * rc.Gt[j] - rc.G[j] * rc.Gt[i]);
                    report.add("h1", i, j, rep.id, (lhs - rhs).is_zero());
                }
        }
        if (wants("h2") && have_aux) {
            for (int i = 0; i <= kg; ++i) {
                ExactMatrix lhs = rc.Wp[i] * rc.Wp[0] - rc.Wm[i] * rc.Wm[0] -
                                  rc.Wm[i + 1] * rc.Wp[0] + rc.Wm[0] * rc.Wp[i + 1] -
                                  wfac * rc.comm(rc.G[i], rc.Gt[0]);
                report.add("h2", i, std::nullopt, rep.id, lhs.is_zero());
            }
        }
        if (wants("h3") && have_aux) {
            for (int i = 0; i + 1 <= kg; ++i)
                for (int j = 0; j + 1 <= lg; ++j) {
                    ExactMatrix lhs =
                        rc.Wm[i + 1] * rc.Wm[j] - rc.Wp[i + 1] * rc.Wp[j] -
                        rc.Wm[i] * rc.Wm[j + 1] + rc.Wp[i] * rc.Wp[j + 1] +
                        rc.Wm[i] * rc.Wp[j] - rc.Wm[j] * rc.Wp[i] -
                        rc.Wm[i + 1] * rc.Wp[j + 1] + rc.Wm[j + 1] * rc.Wp[i + 1] +
                        wfac * (rc.comm(rc.G[i + 1], rc.Gt[j]) -
                                rc.comm(rc.G[i], rc.Gt[j + 1]));
                    report.add("h3", i, j, rep.id, lhs.is_zero());
                }
        }
        if (wants("eqgg")) {
            for (int k = 0; k <= kg; ++k) {
                ExactMatrix lhs =
                    (rc.q1 - rc.qm1) * ((rc.G[k] - rc.Gt[k]) * rc.Wm[0]) +
                    rc.comm(rc.Wm[0], rc.q1 * rc.G[k] + rc.qm1 * rc.Gt[k]);
                report.add("eqgg", k, std::nullopt, rep.id, lhs.is_zero());
            }
        }
        if (wants("ex1-identity") && have_aux) {
            ExactMatrix lhs = rc.Wp[0] * rc.Wp[0] - rc.Wm[0] * rc.Wm[0] -
                              rc.Wm[1] * rc.Wp[0] + rc.Wm[0] * rc.Wp[1] -
                              wfac * rc.comm(rc.G[0], rc.Gt[0]);
            report.add("ex1-identity", 0, std::nullopt, rep.id, lhs.is_zero());
        }
    }
    return report;
}

}  // namespace qonsager
