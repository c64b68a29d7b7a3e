#include "qonsager/askey.hpp"

#include "qonsager/linsolve.hpp"

#include <sstream>

namespace qonsager {

AWParams extract_omega(const MatrixRep& rep, const ScalarFraction& a1) {
    const ExactMatrix& A = rep.matA;
    const ExactMatrix& B = rep.matB;
    const int d = rep.dim;

    // span{I, A, B} must be three-dimensional
    {
        std::vector<std::vector<ScalarFraction>> cols(static_cast<std::size_t>(d) * d,
                                                      std::vector<ScalarFraction>(3));
        for (int i = 0; i < d * d; ++i) {
            cols[i][0] = (i % (d + 1) == 0) ? ScalarFraction(1) : ScalarFraction(0);
            cols[i][1] = A.e[i];
            cols[i][2] = B.e[i];
        }
        if (!nullspace(3, cols).empty())
            throw std::invalid_argument(
                "extract_omega: matA, matB and the identity must be linearly independent");
    }

    const ScalarFraction beta = rep.q_scalar(2) + rep.q_scalar(-2);
    ExactMatrix M1 = B * (A * A) + (A * A) * B - beta * (A * B * A) - rep.rho * B;
    ExactMatrix M2 = A * (B * B) + (B * B) * A - beta * (B * A * B) - rep.rho * A;

    std::optional<ScalarFraction> omega;
    for (int i = 0; i < d * d && !omega; ++i)
        if (!A.e[i].is_zero()) omega = M1.e[i] / A.e[i];
    if (!omega) throw std::invalid_argument("extract_omega: matA vanishes");

    for (int i = 0; i < d * d; ++i) {
        if (!(M1.e[i] == *omega * A.e[i]) || !(M2.e[i] == *omega * B.e[i]))
            throw std::domain_error("extract_omega: not an Askey-Wilson pair");
    }
    AWParams out;
    out.omega = *omega;
    out.rho = rep.rho;
    out.alpha = (*omega - a1 * (rep.q_scalar(1) - rep.q_scalar(-1))) / rep.rho;
    return out;
}

AWRelation discover_relations(const MatrixRep& rep, const GeneratorTable& table, int N_max) {
    if (N_max < 1) throw std::invalid_argument("discover_relations: N_max must be >= 1");
    if (N_max + 1 > static_cast<int>(table.Wm.size()))
        throw std::invalid_argument("discover_relations: table does not cover N_max");
    const int dd = rep.dim * rep.dim;

    std::vector<ExactMatrix> wm, wp;
    for (int t = 0; t <= N_max; ++t) {
        wm.push_back(evaluate(table.Wm[t], rep));
        wp.push_back(evaluate(table.Wp[t], rep));
    }

    for (int N = 1; N <= N_max; ++N) {
        // 2 d^2 rows, N+1 unknowns; a common nullvector serves both chains
        std::vector<std::vector<ScalarFraction>> rows(
            static_cast<std::size_t>(2 * dd), std::vector<ScalarFraction>(N + 1));
        for (int t = 0; t <= N; ++t)
            for (int i = 0; i < dd; ++i) {
                rows[i][t] = wm[t].e[i];
                rows[dd + i][t] = wp[t].e[i];
            }
        auto basis = nullspace(static_cast<std::size_t>(N) + 1, rows);
        if (basis.empty()) continue;
        if (basis.size() != 1)
            throw std::logic_error(
                "discover_relations: nullspace not one-dimensional at the first order; "
                "an order below the minimum was missed");
        auto& v = basis[0];
        if (v[N].is_zero())
            throw std::logic_error(
                "discover_relations: top coefficient vanished at the first order");
        const ScalarFraction inv = v[N].inverse();
        AWRelation rel;
        rel.N = N;
        for (auto& c : v) rel.alphas.push_back(c * inv);

        // witness check on both chains
        ExactMatrix z1(rep.dim), z2(rep.dim);
        for (int t = 0; t <= N; ++t) {
            z1 += rel.alphas[t] * wm[t];
            z2 += rel.alphas[t] * wp[t];
        }
        if (!z1.is_zero() || !z2.is_zero())
            throw std::logic_error("discover_relations: witness check failed");
        return rel;
    }
    throw std::domain_error("discover_relations: no relation up to N_max");
}

}  // namespace qonsager
