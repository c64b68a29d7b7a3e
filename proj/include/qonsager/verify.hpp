#ifndef QONSAGER_VERIFY_HPP
#define QONSAGER_VERIFY_HPP

#include "qonsager/generators.hpp"
#include "qonsager/reps.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qonsager {

struct RelationInstance {
    std::string relation;  // qo1..qo11, h1, h2, h3, eqgg, ex1-identity
    int k = 0;
    std::optional<int> l;
    std::string rep;
    bool passed = false;
};

struct RelationReport {
    std::vector<RelationInstance> entries;
    bool all_passed = true;

    void add(std::string relation, int k, std::optional<int> l, std::string rep, bool passed) {
        all_passed = all_passed && passed;
        entries.push_back({std::move(relation), k, l, std::move(rep), passed});
    }
};

/// The two defining relations oriented as rewrite rules under the graded
/// lexicographic word order with B > A. Leading words: BAAA and BBBA.
struct RewriteSystem {
    struct Rule {
        Word lead;
        NCPolynomial replacement;
    };
    ScalarFraction rho;
    std::vector<Rule> rules;

    /// rho defaults to the formal parameter r; rho = 0 degenerates the
    /// rules to their Serre-type shape (no quadratic tail).
    static RewriteSystem qdg(const ScalarFraction& rho = ScalarFraction::r());
};

/// Repeatedly replace rule leading-words inside terms until none remain.
/// A zero result certifies membership in the two-sided ideal generated by
/// the defining relations; a nonzero result certifies nothing.
NCPolynomial reduce_qdg(const NCPolynomial& p, const RewriteSystem& rs = RewriteSystem::qdg());

/// Evaluate every admissible instance of the full relation list on every
/// representation; failures become report entries, never exceptions.
/// `only` restricts the suite to a subset of relation names.
RelationReport check_relation_suite(const GeneratorTable& table,
                                    const std::vector<MatrixRep>& reps, int k_max, int l_max,
                                    const std::optional<std::set<std::string>>& only = std::nullopt);

}  // namespace qonsager

#endif
