#include "qonsager/reps.hpp"

#include "qonsager/linsolve.hpp"

#include <map>
#include <sstream>

namespace qonsager {

ExactMatrix ExactMatrix::identity(int d) {
    ExactMatrix m(d);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : e)
        if (!x.is_zero()) return false;
    return true;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    if (dim != o.dim) throw std::invalid_argument("ExactMatrix: dimension mismatch");
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.e[i];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    if (dim != o.dim) throw std::invalid_argument("ExactMatrix: dimension mismatch");
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= o.e[i];
    return *this;
}

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.dim != y.dim) throw std::invalid_argument("ExactMatrix: dimension mismatch");
    ExactMatrix out(x.dim);
    for (int i = 0; i < x.dim; ++i)
        for (int k = 0; k < x.dim; ++k) {
            const ScalarFraction& xik = x.at(i, k);
            if (xik.is_zero()) continue;
            for (int j = 0; j < x.dim; ++j) {
                if (y.at(k, j).is_zero()) continue;
                out.at(i, j) += xik * y.at(k, j);
            }
        }
    return out;
}

ExactMatrix operator*(const ScalarFraction& c, const ExactMatrix& m) {
    ExactMatrix out(m.dim);
    for (std::size_t i = 0; i < m.e.size(); ++i) out.e[i] = c * m.e[i];
    return out;
}

ScalarFraction MatrixRep::q_scalar(int e) const {
    if (q_val) return ScalarFraction(*q_val).pow(e);
    return ScalarFraction::q(e);
}

ExactMatrix triple_bracket(const ExactMatrix& a, const ExactMatrix& b,
                           const ScalarFraction& q) {
    const ScalarFraction qi = q.inverse();
    ExactMatrix t1 = q * (a * b) - qi * (b * a);
    ExactMatrix t2 = qi * (a * t1) - q * (t1 * a);
    return a * t2 - t2 * a;
}

namespace {

void check_qdg(const ExactMatrix& a, const ExactMatrix& b, const ScalarFraction& rho,
               const ScalarFraction& q, const char* which) {
    ExactMatrix lhs = triple_bracket(a, b, q);
    ExactMatrix rhs = rho * (a * b - b * a);
    if (!(lhs - rhs).is_zero())
        throw std::domain_error(std::string("MatrixRep: relation ") + which +
                                " fails for the given rho");
}

}  // namespace

ScalarFraction extract_rho(const ExactMatrix& matA, const ExactMatrix& matB,
                           const std::optional<Rational>& q_val) {
    if (matA.dim != matB.dim) throw std::invalid_argument("extract_rho: dimension mismatch");
    const ScalarFraction q = q_val ? ScalarFraction(*q_val) : ScalarFraction::q();
    ExactMatrix comm = matA * matB - matB * matA;
    if (comm.is_zero())
        throw std::domain_error("extract_rho: indeterminate, commutator vanishes");
    ExactMatrix trip = triple_bracket(matA, matB, q);
    std::optional<ScalarFraction> rho;
    for (std::size_t i = 0; i < comm.e.size(); ++i) {
        if (comm.e[i].is_zero()) {
            if (!trip.e[i].is_zero())
                throw std::domain_error("extract_rho: not a q-Onsager pair");
            continue;
        }
        ScalarFraction cand = trip.e[i] / comm.e[i];
        if (!rho) {
            rho = cand;
        } else if (!(*rho == cand)) {
            throw std::domain_error("extract_rho: not a q-Onsager pair");
        }
    }
    // Partner relation with the roles of the matrices swapped.
    ExactMatrix trip2 = triple_bracket(matB, matA, q);
    ExactMatrix rhs2 = *rho * (matB * matA - matA * matB);
    if (!(trip2 - rhs2).is_zero())
        throw std::domain_error("extract_rho: not a q-Onsager pair (partner relation)");
    return *rho;
}

MatrixRep verified_rep(ExactMatrix matA, ExactMatrix matB, ScalarFraction rho,
                       std::optional<Rational> q_val, std::string id) {
    const ScalarFraction q = q_val ? ScalarFraction(*q_val) : ScalarFraction::q();
    check_qdg(matA, matB, rho, q, "1");
    check_qdg(matB, matA, rho, q, "2");
    MatrixRep rep;
    rep.dim = matA.dim;
    rep.matA = std::move(matA);
    rep.matB = std::move(matB);
    rep.rho = std::move(rho);
    rep.q_val = std::move(q_val);
    rep.id = std::move(id);
    return rep;
}

namespace {

std::string rat_str(const Rational& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

ScalarFraction theta_eigenvalue(const Rational& a, int two_i_minus_n) {
    // a*q^(2i-N) + a^-1*q^(N-2i)
    return ScalarFraction(a) * ScalarFraction::q(two_i_minus_n) +
           ScalarFraction(Rational(1) / a) * ScalarFraction::q(-two_i_minus_n);
}

}  // namespace

MatrixRep pair_d2(const Rational& a_param, const Rational& b_param) {
    if (a_param == 0 || b_param == 0 || a_param * a_param == 1 || b_param * b_param == 1)
        throw std::domain_error("pair_d2: degenerate eigenvalues");
    ScalarFraction th0 = theta_eigenvalue(a_param, -1);
    ScalarFraction th1 = theta_eigenvalue(a_param, 1);
    ScalarFraction mu0 = theta_eigenvalue(b_param, -1);
    ScalarFraction mu1 = theta_eigenvalue(b_param, 1);

    ExactMatrix A(2), B(2);
    A.at(0, 0) = th0;
    A.at(1, 1) = th1;
    B.at(0, 1) = 1;
    B.at(1, 0) = -(mu0 * mu1);
    B.at(1, 1) = mu0 + mu1;

    MatrixRep rep;
    rep.dim = 2;
    rep.rho = extract_rho(A, B);
    rep.matA = std::move(A);
    rep.matB = std::move(B);
    rep.id = "d2:a=" + rat_str(a_param) + ",b=" + rat_str(b_param);
    return rep;
}

MatrixRep direct_sum(const MatrixRep& r1, const MatrixRep& r2) {
    if (r1.q_val != r2.q_val)
        throw std::domain_error("direct_sum: mismatched q specializations");
    if (!(r1.rho == r2.rho)) throw std::domain_error("direct_sum: rho mismatch");
    const int d = r1.dim + r2.dim;
    ExactMatrix A(d), B(d);
    for (int i = 0; i < r1.dim; ++i)
        for (int j = 0; j < r1.dim; ++j) {
            A.at(i, j) = r1.matA.at(i, j);
            B.at(i, j) = r1.matB.at(i, j);
        }
    for (int i = 0; i < r2.dim; ++i)
        for (int j = 0; j < r2.dim; ++j) {
            A.at(r1.dim + i, r1.dim + j) = r2.matA.at(i, j);
            B.at(r1.dim + i, r1.dim + j) = r2.matB.at(i, j);
        }
    return verified_rep(std::move(A), std::move(B), r1.rho, r1.q_val,
                        "dsum:(" + r1.id + ")+(" + r2.id + ")");
}

MatrixRep pair_leonard(int d, const Rational& a_param, const Rational& b_param) {
    if (d < 3) throw std::invalid_argument("pair_leonard: d must be at least 3");
    if (a_param == 0 || b_param == 0)
        throw std::domain_error("pair_leonard: parameters must be nonzero");
    const int N = d - 1;
    const ScalarFraction Q = ScalarFraction::q();
    auto theta = [&](int i) { return theta_eigenvalue(a_param, 2 * i - N); };

    std::vector<ScalarFraction> th(d);
    for (int i = 0; i < d; ++i) th[i] = theta(i);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (th[i] == th[j]) throw std::domain_error("pair_leonard: degenerate eigenvalues");

    const ScalarFraction beta = Q.pow(2) + Q.pow(-2);
    const ScalarFraction splus2 = (Q + Q.pow(-1)).pow(2);
    const ScalarFraction sminus2 = (Q - Q.pow(-1)).pow(2);
    std::vector<ScalarFraction> g(d);
    for (int i = 0; i < d; ++i) {
        g[i] = sminus2 * (splus2 - th[i] * th[i]);
        if (g[i].is_zero()) throw std::domain_error("pair_leonard: singular diagonal datum");
    }

    // rho from the adjacent eigenvalue products (verified again by the gate).
    const ScalarFraction rho =
        (Q * th[0] - Q.pow(-1) * th[1]) * (Q.pow(-1) * th[0] - Q * th[1]);

    // Three-term chain for the off-diagonal products X_i and the square
    // W = omega^2*(q^2-q^-2)^2; equations indexed by the diagonal entries
    // of the partner relation.
    LinearSystem sys(d);  // unknowns X_0..X_{d-2}, W
    for (int i = 0; i < d; ++i) {
        std::vector<ScalarFraction> row(d, ScalarFraction(0));
        if (i - 1 >= 0 && i - 1 <= d - 2)
            row[i - 1] = ScalarFraction(2) * th[i] - beta * theta(i - 1);
        if (i <= d - 2) row[i] = ScalarFraction(2) * th[i] - beta * theta(i + 1);
        row[d - 1] = -(th[i] / (g[i] * g[i]));
        sys.add_row(std::move(row), rho * th[i]);
    }
    auto res = solve(sys);
    if (res.status != SolveResult::Status::Unique)
        throw std::domain_error("pair_leonard: off-diagonal chain has no unique solution");
    const ScalarFraction W = res.solution[d - 1];
    const ScalarFraction omega_sq = W / ((Q.pow(2) - Q.pow(-2)).pow(2));
    auto omega = omega_sq.sqrt();
    if (!omega)
        throw std::domain_error("pair_leonard: omega^2 is not an exact square");

    ExactMatrix A(d), B(d);
    const ScalarFraction bscale(b_param);
    for (int i = 0; i < d; ++i) {
        A.at(i, i) = th[i];
        B.at(i, i) = *omega * th[i] / g[i];
    }
    for (int i = 0; i + 1 < d; ++i) {
        B.at(i, i + 1) = bscale;
        B.at(i + 1, i) = res.solution[i] / bscale;
    }

    ScalarFraction gate_rho = extract_rho(A, B);
    if (!(gate_rho == rho))
        throw std::domain_error("pair_leonard: gate found an inconsistent rho");
    return verified_rep(std::move(A), std::move(B), std::move(gate_rho), std::nullopt,
                        "leonard:d=" + std::to_string(d) + ",a=" + rat_str(a_param) +
                            ",b=" + rat_str(b_param));
}

MatrixRep pair_aw_tuned_d2(const Rational& a_param) {
    if (a_param == 0 || a_param * a_param == 1)
        throw std::domain_error("pair_aw_tuned_d2: degenerate eigenvalues");
    const ScalarFraction Q = ScalarFraction::q();
    const ScalarFraction th0 = theta_eigenvalue(a_param, -1);
    const ScalarFraction th1 = theta_eigenvalue(a_param, 1);
    const ScalarFraction beta = Q.pow(2) + Q.pow(-2);
    const ScalarFraction rho = (Q * th0 - Q.pow(-1) * th1) * (Q.pow(-1) * th0 - Q * th1);
    const ScalarFraction splus2 = (Q + Q.pow(-1)).pow(2);
    const ScalarFraction sminus2 = (Q - Q.pow(-1)).pow(2);
    const ScalarFraction g0 = sminus2 * (splus2 - th0 * th0);
    const ScalarFraction g1 = sminus2 * (splus2 - th1 * th1);
    if (g0.is_zero() || g1.is_zero())
        throw std::domain_error("pair_aw_tuned_d2: singular diagonal datum");

    // Diagonal entries of the partner quadratic relation: two equations in
    // the off-diagonal product X and W = omega^2 (q^2-q^-2)^2.
    LinearSystem sys(2);
    sys.add_row({ScalarFraction(2) * th0 - beta * th1, -(th0 / (g0 * g0))}, rho * th0);
    sys.add_row({ScalarFraction(2) * th1 - beta * th0, -(th1 / (g1 * g1))}, rho * th1);
    auto res = solve(sys);
    if (res.status != SolveResult::Status::Unique)
        throw std::domain_error("pair_aw_tuned_d2: tuning system is singular");
    const ScalarFraction X = res.solution[0];
    const ScalarFraction omega_sq = res.solution[1] / ((Q.pow(2) - Q.pow(-2)).pow(2));
    auto omega = omega_sq.sqrt();
    if (!omega) throw std::domain_error("pair_aw_tuned_d2: omega^2 is not an exact square");

    ExactMatrix A(2), B(2);
    A.at(0, 0) = th0;
    A.at(1, 1) = th1;
    B.at(0, 0) = *omega * th0 / g0;
    B.at(1, 1) = *omega * th1 / g1;
    B.at(0, 1) = 1;
    B.at(1, 0) = X;

    ScalarFraction gate_rho = extract_rho(A, B);
    if (!(gate_rho == rho))
        throw std::domain_error("pair_aw_tuned_d2: gate found an inconsistent rho");

    // Both quadratic relations must hold exactly for the solved omega.
    ExactMatrix M1 = B * (A * A) + (A * A) * B - beta * (A * B * A) - rho * B;
    ExactMatrix M2 = A * (B * B) + (B * B) * A - beta * (B * A * B) - rho * A;
    if (!(M1 - *omega * A).is_zero() || !(M2 - *omega * B).is_zero())
        throw std::domain_error("pair_aw_tuned_d2: quadratic relations failed to close");

    return verified_rep(std::move(A), std::move(B), std::move(gate_rho), std::nullopt,
                        "awd2:a=" + rat_str(a_param));
}

ExactMatrix evaluate(const NCPolynomial& p, const MatrixRep& rep) {
    if (p.alphabet() != AlphabetTag::Concrete)
        throw std::invalid_argument("evaluate: polynomial must be over the concrete alphabet");
    std::map<Word, ExactMatrix, WordOrder> cache;
    cache.emplace(Word{}, ExactMatrix::identity(rep.dim));

    // Longest cached prefix, extended one letter at a time.
    std::function<const ExactMatrix&(const Word&)> mat_of = [&](const Word& w) -> const ExactMatrix& {
        auto it = cache.find(w);
        if (it != cache.end()) return it->second;
        Word prefix(w.begin(), w.end() - 1);
        const ExactMatrix& pm = mat_of(prefix);
        const ExactMatrix& lm = w.back().kind == Letter::A ? rep.matA : rep.matB;
        return cache.emplace(w, pm * lm).first->second;
    };

    ExactMatrix out(rep.dim);
    for (const auto& [w, c] : p.terms()) {
        ScalarFraction cc = c.specialize(rep.q_val, rep.rho);
        out += cc * mat_of(w);
    }
    return out;
}

namespace {

// "key=value" items separated by commas.
std::map<std::string, std::string> parse_kv(const std::string& s) {
    std::map<std::string, std::string> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string item = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        std::size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad rep spec item: " + item);
        out[item.substr(0, eq)] = item.substr(eq + 1);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

MatrixRep parse_rep_spec(const std::string& spec) {
    if (spec.rfind("d2:", 0) == 0) {
        auto kv = parse_kv(spec.substr(3));
        if (!kv.count("a") || !kv.count("b"))
            throw std::invalid_argument("d2 spec needs a= and b=: " + spec);
        return pair_d2(Rational(kv["a"]), Rational(kv["b"]));
    }
    if (spec.rfind("awd2:", 0) == 0) {
        auto kv = parse_kv(spec.substr(5));
        if (!kv.count("a"))
            throw std::invalid_argument("awd2 spec needs a=: " + spec);
        return pair_aw_tuned_d2(Rational(kv["a"]));
    }
    if (spec.rfind("leonard:", 0) == 0) {
        auto kv = parse_kv(spec.substr(8));
        if (!kv.count("d") || !kv.count("a") || !kv.count("b"))
            throw std::invalid_argument("leonard spec needs d=, a= and b=: " + spec);
        return pair_leonard(std::stoi(kv["d"]), Rational(kv["a"]), Rational(kv["b"]));
    }
    if (spec.rfind("dsum:", 0) == 0) {
        const std::string body = spec.substr(5);
        if (body.empty() || body[0] != '(')
            throw std::invalid_argument("dsum spec needs parenthesized parts: " + spec);
        int depth = 0;
        std::size_t split = std::string::npos;
        for (std::size_t i = 0; i < body.size(); ++i) {
            if (body[i] == '(') ++depth;
            else if (body[i] == ')') --depth;
            else if (body[i] == '+' && depth == 0) {
                split = i;
                break;
            }
        }
        if (split == std::string::npos)
            throw std::invalid_argument("dsum spec needs a top-level '+': " + spec);
        auto strip = [](std::string s) {
            if (s.size() < 2 || s.front() != '(' || s.back() != ')')
                throw std::invalid_argument("dsum part must be parenthesized: " + s);
            return s.substr(1, s.size() - 2);
        };
        MatrixRep left = parse_rep_spec(strip(body.substr(0, split)));
        MatrixRep right = parse_rep_spec(strip(body.substr(split + 1)));
        return direct_sum(left, right);
    }
    throw std::invalid_argument("unknown rep spec: " + spec);
}

std::vector<MatrixRep> default_fleet() {
    std::vector<MatrixRep> fleet;
    fleet.push_back(pair_d2(2, 3));
    fleet.push_back(pair_d2(5, 7));
    fleet.push_back(direct_sum(fleet[0], fleet[1]));
    return fleet;
}

}  // namespace qonsager
