#ifndef QONSAGER_SERIALIZE_HPP
#define QONSAGER_SERIALIZE_HPP

#include "qonsager/askey.hpp"
#include "qonsager/generators.hpp"
#include "qonsager/verify.hpp"

#include <json.hpp>

namespace qonsager {

using json = nlohmann::ordered_json;

/// {"alphabet":"concrete","terms":[{"word":"ABA","coeff":"(q^2+1)/(q)"},...]}
/// Terms are serialized leading-word first; the unit word is "".
json poly_to_json(const NCPolynomial& p);
NCPolynomial poly_from_json(const json& j);

json coeff_table_to_json(const CoefficientTable& t);
json generator_table_to_json(const GeneratorTable& t);
json report_to_json(const RelationReport& r);
json aw_relation_to_json(const AWRelation& r);

std::string generator_table_to_text(const GeneratorTable& t);
std::string generator_table_to_latex(const GeneratorTable& t);

}  // namespace qonsager

#endif
