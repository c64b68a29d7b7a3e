#ifndef QONSAGER_ASKEY_HPP
#define QONSAGER_ASKEY_HPP

#include "qonsager/generators.hpp"
#include "qonsager/reps.hpp"

#include <vector>

namespace qonsager {

struct AWParams {
    ScalarFraction omega;
    ScalarFraction rho;
    ScalarFraction alpha;  // (omega - a_1 (q - q^-1)) / rho
};

/// An order-N dependency shared by both generator chains:
/// sum alphas[t] W_{-t} = 0 and sum alphas[t] W_{t+1} = 0 on the
/// originating representation, with alphas[N] = 1 and N minimal.
struct AWRelation {
    int N = 0;
    std::vector<ScalarFraction> alphas;
};

/// Solve both quadratic relations
///   A* A^2 + A^2 A* - (q^2+q^-2) A A* A - rho A* - omega A = 0
///   A A*^2 + A*^2 A - (q^2+q^-2) A* A A* - rho A - omega A* = 0
/// for the single scalar omega. Requires matA, matB and the identity to be
/// linearly independent; throws std::domain_error("...not an Askey-Wilson
/// pair") when no common omega exists.
AWParams extract_omega(const MatrixRep& rep, const ScalarFraction& a1 = ScalarFraction(0));

/// Smallest N <= N_max with a common nullvector across both chains,
/// normalized at the top coefficient; throws std::domain_error("no
/// relation up to N_max") when none exists.
AWRelation discover_relations(const MatrixRep& rep, const GeneratorTable& table, int N_max);

}  // namespace qonsager

#endif
