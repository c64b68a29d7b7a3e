#ifndef QONSAGER_LINSOLVE_HPP
#define QONSAGER_LINSOLVE_HPP

#include "qonsager/scalar.hpp"

#include <vector>

namespace qonsager {

/// Dense linear system over the exact scalar field. Every row has the
/// same width as the unknown order it was built against.
struct LinearSystem {
    std::size_t width = 0;
    std::vector<std::vector<ScalarFraction>> rows;
    std::vector<ScalarFraction> rhs;

    explicit LinearSystem(std::size_t w = 0) : width(w) {}

    void add_row(std::vector<ScalarFraction> coeffs, ScalarFraction b);
    std::size_t row_count() const { return rows.size(); }
};

struct SolveResult {
    enum class Status { Unique, Inconsistent, Underdetermined };
    Status status;
    std::vector<ScalarFraction> solution;  // filled when Unique
    std::size_t rank = 0;
};

/// Exact Gaussian elimination. Overdetermined consistent systems of full
/// column rank report Unique.
SolveResult solve(LinearSystem system);

/// Basis of the right nullspace of the homogeneous system rows*x = 0.
std::vector<std::vector<ScalarFraction>> nullspace(
    std::size_t width, std::vector<std::vector<ScalarFraction>> rows);

}  // namespace qonsager

#endif
