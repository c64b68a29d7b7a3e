#include "qonsager/hierarchy.hpp"

namespace qonsager {

NCPolynomial build_f(int k, const GeneratorTable& table) {
    for (const auto& c : table.a_consts)
        if (!c.is_zero())
            throw std::invalid_argument(
                "build_f: the hierarchy polynomials need all level constants zero");
    if (k < 0 || k >= static_cast<int>(table.Wm.size()))
        throw std::out_of_range("build_f: level not covered by the table");
    return table.Wm[k];
}

NCPolynomial build_charge(const ChargeSpec& spec, const GeneratorTable& table) {
    if (!spec.any_nonzero())
        throw std::invalid_argument("build_charge: at least one kappa must be nonzero");
    const int k = spec.k;
    if (k < 0 || k >= static_cast<int>(table.Wm.size()))
        throw std::out_of_range("build_charge: level not covered by the table");
    NCPolynomial out(AlphabetTag::Concrete);
    if (!spec.kappa.is_zero()) out += spec.kappa * table.Wm[k];
    if (!spec.kappa_star.is_zero()) out += spec.kappa_star * table.Wp[k];
    if (!spec.kappa_plus.is_zero() || !spec.kappa_minus.is_zero()) {
        if (k >= static_cast<int>(table.G.size()))
            throw std::out_of_range("build_charge: G level not covered by the table");
        if (!spec.kappa_plus.is_zero()) out += spec.kappa_plus * table.G[k];
        if (!spec.kappa_minus.is_zero()) out += spec.kappa_minus * table.Gt[k];
    }
    return out;
}

RelationReport check_commutation(const std::vector<ChargeSpec>& specs,
                                 const GeneratorTable& table,
                                 const std::vector<MatrixRep>& reps, bool structural) {
    RelationReport report;
    int max_k = 0;
    for (const auto& s : specs) max_k = std::max(max_k, s.k);

    for (const auto& rep : reps) {
        // one evaluation per generator, charges as matrix combinations
        std::vector<ExactMatrix> wm(max_k + 1), wp(max_k + 1), g(max_k + 1), gt(max_k + 1);
        std::vector<bool> have_w(max_k + 1, false), have_g(max_k + 1, false);
        for (const auto& s : specs) {
            if (!s.any_nonzero())
                throw std::invalid_argument("check_commutation: empty charge spec");
            if (!have_w[s.k]) {
                wm[s.k] = evaluate(table.Wm.at(s.k), rep);
                wp[s.k] = evaluate(table.Wp.at(s.k), rep);
                have_w[s.k] = true;
            }
            if ((!s.kappa_plus.is_zero() || !s.kappa_minus.is_zero()) && !have_g[s.k]) {
                g[s.k] = evaluate(table.G.at(s.k), rep);
                gt[s.k] = evaluate(table.Gt.at(s.k), rep);
                have_g[s.k] = true;
            }
        }
        std::vector<ExactMatrix> charge_mats;
        charge_mats.reserve(specs.size());
        for (const auto& s : specs) {
            ExactMatrix m = s.kappa * wm[s.k] + s.kappa_star * wp[s.k];
            if (have_g[s.k]) m += s.kappa_plus * g[s.k] + s.kappa_minus * gt[s.k];
            charge_mats.push_back(std::move(m));
        }
        for (std::size_t i = 0; i < specs.size(); ++i) {
            for (std::size_t j = i; j < specs.size(); ++j) {
                ExactMatrix comm =
                    charge_mats[i] * charge_mats[j] - charge_mats[j] * charge_mats[i];
                report.add("commute", specs[i].k, specs[j].k, rep.id, comm.is_zero());
            }
        }
    }

    if (structural) {
        auto cross = check_relation_suite(
            table, reps, max_k, max_k,
            std::set<std::string>{"qo4", "qo5", "qo6", "qo7", "qo8", "qo9", "qo10",
                                  "qo11"});
        report.all_passed = report.all_passed && cross.all_passed;
        for (auto& e : cross.entries) report.entries.push_back(std::move(e));
    }
    return report;
}

}  // namespace qonsager
