#ifndef QONSAGER_HIERARCHY_HPP
#define QONSAGER_HIERARCHY_HPP

#include "qonsager/generators.hpp"
#include "qonsager/verify.hpp"

#include <vector>

namespace qonsager {

/// One conserved charge: kappa W_{-k} + kappa* W_{k+1}
///                       + kappa+ G_{k+1} + kappa- Gtilde_{k+1}.
/// The kappas are shared across the whole hierarchy; charges built from
/// different kappa vectors do not commute in general.
struct ChargeSpec {
    int k = 0;
    ScalarFraction kappa = 0, kappa_star = 0, kappa_plus = 0, kappa_minus = 0;

    bool any_nonzero() const {
        return !(kappa.is_zero() && kappa_star.is_zero() && kappa_plus.is_zero() &&
                 kappa_minus.is_zero());
    }
};

/// The recursion polynomial f_k(A, A*), the charge content at kappa = 1 and
/// all other kappas zero. The swapped f_k(A*, A) is its exchange. The table
/// must have been built with every level constant equal to zero.
NCPolynomial build_f(int k, const GeneratorTable& table);

/// The stated linear combination as a concrete polynomial.
NCPolynomial build_charge(const ChargeSpec& spec, const GeneratorTable& table);

/// Pairwise commutators of the charges, evaluated in every representation,
/// plus the structural cross-relation check (the bilinear expansion of a
/// charge commutator is exactly the qo4..qo11 family, so their individual
/// vanishing covers arbitrary shared kappa vectors, not just the sampled
/// ones). Failures become report entries.
RelationReport check_commutation(const std::vector<ChargeSpec>& specs,
                                 const GeneratorTable& table,
                                 const std::vector<MatrixRep>& reps,
                                 bool structural = true);

}  // namespace qonsager

#endif
