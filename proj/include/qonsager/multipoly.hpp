#ifndef QONSAGER_MULTIPOLY_HPP
#define QONSAGER_MULTIPOLY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace qonsager {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponent pair of a monomial q^eq * r^er.
struct Exponent {
    int eq = 0;
    int er = 0;

    int grade() const { return eq + er; }
    friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Graded lexicographic order on (eq, er): compare total degree first,
/// then eq. This is the canonical term order for printing and hashing.
struct GradedLexLess {
    bool operator()(const Exponent& x, const Exponent& y) const {
        if (x.grade() != y.grade()) return x.grade() < y.grade();
        if (x.eq != y.eq) return x.eq < y.eq;
        return x.er < y.er;
    }
};

/// Integer-coefficient polynomial in the indeterminates q and r.
/// Stored sparsely; no zero coefficients are ever kept.
class MultiPoly {
public:
    using TermMap = std::map<Exponent, BigInt, GradedLexLess>;

    MultiPoly() = default;
    explicit MultiPoly(BigInt c) {
        if (c != 0) terms_.emplace(Exponent{0, 0}, std::move(c));
    }
    explicit MultiPoly(long c) : MultiPoly(BigInt(c)) {}

    static MultiPoly zero() { return MultiPoly(); }
    static MultiPoly one() { return MultiPoly(BigInt(1)); }
    static MultiPoly q(int e = 1) { return monomial(Exponent{e, 0}, 1); }
    static MultiPoly r(int e = 1) { return monomial(Exponent{0, e}, 1); }

    static MultiPoly monomial(Exponent e, BigInt c) {
        if (e.eq < 0 || e.er < 0)
            throw std::domain_error("MultiPoly: negative exponent");
        MultiPoly p;
        if (c != 0) p.terms_.emplace(e, std::move(c));
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0} &&
               terms_.begin()->second == 1;
    }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
    }
    /// True when the polynomial is a single monomial c*q^i*r^j.
    bool is_monomial() const { return terms_.size() == 1; }

    int degree_q() const;
    int degree_r() const;
    Exponent min_exponents() const;  // componentwise minimum over terms

    /// Leading term in the canonical order (throws on zero).
    const std::pair<const Exponent, BigInt>& leading() const;
    int sign_of_leading() const;  // 0 for the zero polynomial

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly x, const MultiPoly& y) { return x += y; }
    friend MultiPoly operator-(MultiPoly x, const MultiPoly& y) { return x -= y; }
    friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y);
    friend MultiPoly operator-(const MultiPoly& x);
    friend bool operator==(const MultiPoly& x, const MultiPoly& y) {
        return x.terms_ == y.terms_;
    }

    MultiPoly mul_monomial(Exponent e, const BigInt& c) const;
    /// Divide every exponent down by (e.eq, e.er); all terms must allow it.
    MultiPoly div_monomial(Exponent e) const;
    MultiPoly mul_int(const BigInt& c) const;
    /// Exact division by an integer; throws if any coefficient resists.
    MultiPoly div_int(const BigInt& c) const;

    /// gcd of all integer coefficients (positive; 0 for the zero polynomial).
    BigInt content() const;

    /// Substitute q := num/den, returning (poly in r, power of den cleared).
    /// result.first / den^result.second equals this at q = num/den.
    std::pair<MultiPoly, int> substitute_q(const BigInt& num, const BigInt& den) const;
    /// Same for r with a polynomial value handled at the fraction level.
    std::pair<MultiPoly, int> substitute_r(const BigInt& num, const BigInt& den) const;

    /// Evaluate at rational points (for probabilistic equality screens).
    Rational evaluate(const Rational& qv, const Rational& rv) const;

    std::string to_string() const;
    std::string to_latex() const;

    std::size_t term_count() const { return terms_.size(); }

private:
    TermMap terms_;
    friend MultiPoly poly_gcd(const MultiPoly&, const MultiPoly&);
};

/// Polynomial gcd over Z[q,r], positive leading coefficient. Uses a
/// modular coprimality screen; a screen miss only leaves a common factor
/// in place, never a wrong divisor.
MultiPoly poly_gcd(const MultiPoly& x, const MultiPoly& y);

/// As poly_gcd, optionally with the screen disabled (exact subresultant
/// path even for likely-coprime inputs).
MultiPoly poly_gcd_full(const MultiPoly& x, const MultiPoly& y, bool allow_screen);

/// Exact division; throws std::domain_error when the division is not exact.
MultiPoly poly_divide_exact(const MultiPoly& num, const MultiPoly& den);

/// Exact square root of a perfect-square polynomial (currently restricted
/// to polynomials in q alone); returns nullopt when no square root exists.
std::optional<MultiPoly> poly_sqrt(const MultiPoly& p);

}  // namespace qonsager

#endif
