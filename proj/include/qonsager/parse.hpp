#ifndef QONSAGER_PARSE_HPP
#define QONSAGER_PARSE_HPP

#include "qonsager/scalar.hpp"

#include <string>

namespace qonsager {

/// Parse an exact scalar expression in q and r, e.g. "(q^4-2*q^2+1)/(q^2)",
/// "-(q^2-q^-2)^2" or "3/16". Throws std::invalid_argument on bad syntax.
ScalarFraction parse_scalar(const std::string& text);

/// Parse an exact rational such as "-3/16". Throws on bad syntax.
Rational parse_rational(const std::string& text);

}  // namespace qonsager

#endif
