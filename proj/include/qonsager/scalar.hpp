#ifndef QONSAGER_SCALAR_HPP
#define QONSAGER_SCALAR_HPP

#include "qonsager/multipoly.hpp"

#include <optional>
#include <string>

namespace qonsager {

/// Element of the field Q(q, r): a fraction of integer polynomials,
/// gcd-reduced with the leading coefficient of the denominator positive.
/// Negative powers of q are ordinary fractions here (q^-1 is 1/q).
class ScalarFraction {
public:
    ScalarFraction() : num_(), den_(MultiPoly::one()) {}
    ScalarFraction(long v) : num_(BigInt(v)), den_(MultiPoly::one()) {}
    ScalarFraction(const BigInt& v) : num_(v), den_(MultiPoly::one()) {}
    ScalarFraction(const Rational& v)
        : num_(boost::multiprecision::numerator(v)),
          den_(boost::multiprecision::denominator(v)) {}

    static ScalarFraction from(MultiPoly num, MultiPoly den);
    static ScalarFraction from_poly(MultiPoly num) {
        return from(std::move(num), MultiPoly::one());
    }
    /// q^e for any integer e (negative exponents become denominators).
    static ScalarFraction q(int e = 1);
    static ScalarFraction r(int e = 1);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    /// True when r occurs anywhere in the fraction.
    bool has_r() const { return num_.degree_r() > 0 || den_.degree_r() > 0; }

    ScalarFraction& operator+=(const ScalarFraction& o);
    ScalarFraction& operator-=(const ScalarFraction& o);
    ScalarFraction& operator*=(const ScalarFraction& o);
    ScalarFraction& operator/=(const ScalarFraction& o);
    friend ScalarFraction operator+(ScalarFraction x, const ScalarFraction& y) { return x += y; }
    friend ScalarFraction operator-(ScalarFraction x, const ScalarFraction& y) { return x -= y; }
    friend ScalarFraction operator*(ScalarFraction x, const ScalarFraction& y) { return x *= y; }
    friend ScalarFraction operator/(ScalarFraction x, const ScalarFraction& y) { return x /= y; }
    friend ScalarFraction operator-(const ScalarFraction& x);

    /// Cross-multiplication equality: num(x)*den(y) == num(y)*den(x).
    friend bool operator==(const ScalarFraction& x, const ScalarFraction& y);
    friend bool operator!=(const ScalarFraction& x, const ScalarFraction& y) {
        return !(x == y);
    }

    ScalarFraction pow(int e) const;
    ScalarFraction inverse() const;

    /// Substitute q and/or r. r is substituted first, so r-values may be
    /// fractions in q. Throws std::domain_error when the substitution hits
    /// a pole (after the gcd cancellation performed at construction).
    ScalarFraction specialize(const std::optional<Rational>& q_val,
                              const std::optional<ScalarFraction>& r_val) const;

    /// Substitute r := c * r for a rational c (used by scaling tests).
    ScalarFraction scale_r(const Rational& c) const;

    /// Force the exact (unscreened) gcd reduction of num and den.
    ScalarFraction fully_reduced() const;

    /// Exact square root when one exists in Q(q).
    std::optional<ScalarFraction> sqrt() const;

    /// Rational value at random points; used as a probabilistic screen.
    /// Returns nullopt when the denominator vanishes at the point.
    std::optional<Rational> try_evaluate(const Rational& qv, const Rational& rv) const;

    /// Sign of the leading numerator coefficient (denominator is positive).
    int sign() const { return num_.sign_of_leading(); }

    std::string to_string() const;
    std::string to_latex() const;

private:
    MultiPoly num_, den_;
    void normalize();
};

}  // namespace qonsager

#endif
