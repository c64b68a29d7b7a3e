#ifndef QONSAGER_REPS_HPP
#define QONSAGER_REPS_HPP

#include "qonsager/ncpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qonsager {

/// Dense matrix of exact scalars (entries in q only; r is specialized
/// before anything becomes a matrix).
struct ExactMatrix {
    int dim = 0;
    std::vector<ScalarFraction> e;  // row-major, dim*dim entries

    ExactMatrix() = default;
    explicit ExactMatrix(int d) : dim(d), e(static_cast<std::size_t>(d) * d) {}

    static ExactMatrix identity(int d);

    ScalarFraction& at(int i, int j) { return e[static_cast<std::size_t>(i) * dim + j]; }
    const ScalarFraction& at(int i, int j) const {
        return e[static_cast<std::size_t>(i) * dim + j];
    }

    bool is_zero() const;
    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    friend ExactMatrix operator+(ExactMatrix x, const ExactMatrix& y) { return x += y; }
    friend ExactMatrix operator-(ExactMatrix x, const ExactMatrix& y) { return x -= y; }
    friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y);
    friend ExactMatrix operator*(const ScalarFraction& c, const ExactMatrix& m);
    friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
        return x.dim == y.dim && x.e == y.e;
    }
};

/// An exact matrix pair with both defining relations verified at
/// construction, together with the extracted structure constant rho.
struct MatrixRep {
    int dim = 0;
    ExactMatrix matA, matB;
    ScalarFraction rho;
    std::optional<Rational> q_val;  // empty: q stays symbolic
    std::string id;                  // mini-language spec or descriptive name

    /// The q to compute with: symbolic or the specialized value.
    ScalarFraction q_scalar(int e = 1) const;
};

/// [A,[A,[A,B]_q]_{q^-1}] with the given q scalar.
ExactMatrix triple_bracket(const ExactMatrix& a, const ExactMatrix& b,
                           const ScalarFraction& q);

/// Solve (triple bracket) = rho * (commutator) entrywise for the scalar rho
/// and verify the partner relation with the same rho. Throws
/// std::domain_error("indeterminate...") when [A,B] = 0 and
/// std::domain_error("not a q-Onsager pair...") on inconsistency.
ScalarFraction extract_rho(const ExactMatrix& matA, const ExactMatrix& matB,
                           const std::optional<Rational>& q_val = std::nullopt);

/// Wrap a matrix pair after checking both defining relations against the
/// supplied rho exactly; use for pairs whose commutator vanishes or whose
/// rho is known externally.
MatrixRep verified_rep(ExactMatrix matA, ExactMatrix matB, ScalarFraction rho,
                       std::optional<Rational> q_val = std::nullopt,
                       std::string id = "custom");

/// Two-dimensional pair: matA diagonal with eigenvalues
/// a*q^(2i-1) + a^-1*q^(1-2i), matB the companion matrix of the analogous
/// b-eigenvalue pair. Requires a, b nonzero with a^2 != 1, b^2 != 1.
MatrixRep pair_d2(const Rational& a_param, const Rational& b_param);

/// Block-diagonal sum; both summands must carry equal rho (and equal q).
MatrixRep direct_sum(const MatrixRep& r1, const MatrixRep& r2);

/// Higher-dimensional pair (d >= 3): matA diagonal with the
/// beta-recurrent eigenvalue array, matB tridiagonal with entries solved
/// from a three-term recurrence. The construction must pass the relation
/// gate or it throws with a diagnostic; the gate, not the entry formulas,
/// is what certifies the result.
MatrixRep pair_leonard(int d, const Rational& a_param, const Rational& b_param);

/// A two-dimensional pair satisfying the two quadratic relations of the
/// Askey-Wilson kind on top of the defining ones: the diagonal of matB is
/// solved from the first quadratic relation, the off-diagonal product and
/// omega^2 from the partner one, and omega by exact square root.
MatrixRep pair_aw_tuned_d2(const Rational& a_param);

/// Evaluate a CONCRETE polynomial: every coefficient is specialized at
/// r = rep.rho (and q = rep.q_val when set), words become products of
/// matA/matB. Throws std::domain_error on a pole.
ExactMatrix evaluate(const NCPolynomial& p, const MatrixRep& rep);

/// Rep mini-language: "d2:a=2,b=3", "dsum:(d2:a=2,b=3)+(d2:a=5,b=7)",
/// "leonard:d=4,a=2,b=3", "awd2:a=2".
MatrixRep parse_rep_spec(const std::string& spec);

/// The standard verification fleet {d2(2,3), d2(5,7), their direct sum}.
std::vector<MatrixRep> default_fleet();

}  // namespace qonsager

#endif
