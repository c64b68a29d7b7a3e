#ifndef QONSAGER_GENERATORS_HPP
#define QONSAGER_GENERATORS_HPP

#include "qonsager/linsolve.hpp"
#include "qonsager/ncpoly.hpp"
#include "qonsager/reps.hpp"

#include <map>
#include <optional>
#include <vector>

namespace qonsager {

/// Which ansatz coefficient a block belongs to.
struct CoeffRef {
    enum Kind { A, B, E, Const } kind;
    int i = 0;
    int j = 0;
    friend auto operator<=>(const CoeffRef&, const CoeffRef&) = default;
    std::string name() const;
};

/// Solved ansatz coefficients for one level k.
struct CoefficientTable {
    int k = 0;
    int kbar = 0;   // 1 for k even, 0 for k odd
    int alpha = 0;  // floor(k/2)
    std::map<std::pair<int, int>, ScalarFraction> a, b, e;
    ScalarFraction constant;  // the free additive constant of this level

    const ScalarFraction& lookup(const CoeffRef& ref) const;

    /// Index pairs (i,j) with i+j = 2l+1-kbar, 0 <= l <= alpha.
    static std::vector<std::pair<int, int>> a_pair_list(int k);
    /// Index pairs (i,j) with i+j = 2l+kbar, i <= j, 0 <= l <= alpha-kbar.
    static std::vector<std::pair<int, int>> e_pair_list(int k);
    /// (alpha-kbar+1)(alpha-kbar+2)/2
    static std::size_t expected_e_count(int k);

    friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;
};

/// The quadratic ansatz for the level-k generator, kept as symbolic
/// coefficient slots attached to abstract-monomial blocks.
struct AnsatzTemplate {
    int k = 0, kbar = 0, alpha = 0;
    std::vector<std::pair<CoeffRef, NCPolynomial>> blocks;  // abstract blocks

    /// Plug a coefficient table in, yielding the abstract polynomial.
    NCPolynomial instantiate(const CoefficientTable& coeffs) const;
};

AnsatzTemplate ansatz_template(int k);

/// Linear form over the level's e-unknowns (fixed unknown order).
struct LinearForm {
    std::vector<ScalarFraction> coeff;
    ScalarFraction constant;

    explicit LinearForm(std::size_t n = 0) : coeff(n, ScalarFraction(0)), constant(0) {}
    LinearForm& operator+=(const LinearForm& o);
    LinearForm& operator-=(const LinearForm& o);
    friend LinearForm operator*(const ScalarFraction& c, LinearForm f);
    ScalarFraction eval(const std::vector<ScalarFraction>& e_values) const;
    bool is_zero() const;
};

/// Everything the closed-form coefficient solve produces along the way:
/// the solved a/b formulas as linear forms in the e's, the derived helper
/// quantities of the constraint analysis, and the reduced linear system.
struct ConstraintWorkspace {
    int k = 0, kbar = 0, alpha = 0;
    std::vector<std::pair<int, int>> e_order;  // unknown order
    std::map<std::pair<int, int>, LinearForm> a_form, b_form;
    std::map<std::pair<int, int>, LinearForm> aplus, aminus;  // a^+/a^- combinations
    std::map<std::pair<int, int>, LinearForm> abar;           // recursive accumulation
    std::map<int, LinearForm> s_form;                         // per-l sum rule
    std::map<std::pair<int, int>, LinearForm> p_form;         // partial sums, times v
    ScalarFraction v, w;

    LinearSystem system;                     // reduced system in the e's
    std::vector<std::string> equation_tags;  // basis element behind each row

    std::size_t e_index(int i, int j) const;
};

/// Assemble the level-k constraint workspace: the solved a/b formulas plus
/// the linear system obtained by pushing the level-k commutation identity
/// onto the independent basis via the three recursion identities.
ConstraintWorkspace build_constraints(int k);

/// Cache of all generators through level K as concrete polynomials.
struct GeneratorTable {
    int K = -1;
    std::vector<NCPolynomial> Wm, Wp;  // indices 0..K+1
    std::vector<NCPolynomial> G, Gt;   // indices 0..K
    std::vector<CoefficientTable> coeffs;
    std::vector<ScalarFraction> a_consts;
    std::optional<ScalarFraction> rho;  // empty: rho kept formal as r

    const NCPolynomial& wm(int i) const { return Wm.at(i); }
    const NCPolynomial& wp(int i) const { return Wp.at(i); }
    const NCPolynomial& g(int i) const { return G.at(i); }
    const NCPolynomial& gt(int i) const { return Gt.at(i); }

    /// Concrete image of one ansatz block at this table.
    NCPolynomial concrete_block(const CoeffRef& ref) const;
    /// Concrete image of an abstract polynomial through the table.
    NCPolynomial substitute(const NCPolynomial& abstract_poly) const;

    /// Copy with every coefficient specialized at r = rho_value.
    GeneratorTable with_rho(const ScalarFraction& rho_value) const;
};

enum class SolveBackend { ClosedForm, RepProjection, BothAgree };

struct BuildOptions {
    std::vector<ScalarFraction> a_consts;  // per level; missing entries are 0
    SolveBackend backend = SolveBackend::ClosedForm;
    bool check_companions = true;
    std::vector<MatrixRep> companion_fleet;   // default: pair_d2(2,3)
    std::vector<MatrixRep> projection_fleet;  // default: d2 family list
};

/// Closed-form backend: solve the reduced linear system exactly.
CoefficientTable solve_coefficients(int k, const ScalarFraction& a_const = ScalarFraction(0));

/// Representation-projection backend: expand the ansatz with unknown
/// coefficients, impose the level-k commutation constraints in exact
/// matrix representations, and solve the stacked linear system.
CoefficientTable solve_coefficients_rep(int k, const GeneratorTable& lower,
                                        const std::vector<MatrixRep>& fleet,
                                        const ScalarFraction& a_const = ScalarFraction(0));

/// One recursion step: from level k data produce Wm[k+1], Wp[k+1] and check
/// the partner q-commutator routes under representation evaluation.
std::pair<NCPolynomial, NCPolynomial> extend_W(int k, const GeneratorTable& table,
                                               bool check_companions = true,
                                               const std::vector<MatrixRep>& fleet = {});

/// Build the whole table through level K.
GeneratorTable build_generator_table(int K, const BuildOptions& options = {});

}  // namespace qonsager

#endif
