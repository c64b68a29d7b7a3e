#ifndef QONSAGER_NCPOLY_HPP
#define QONSAGER_NCPOLY_HPP

#include "qonsager/scalar.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qonsager {

/// The two generator alphabets. CONCRETE letters A, B realize the standard
/// generators; ABSTRACT letters Wm(i), Wp(i), G(i), Gt(i) realize the
/// current generators W_{-i}, W_{i+1}, G_{i+1}, Gtilde_{i+1}.
enum class AlphabetTag : std::uint8_t { Concrete, Abstract };

struct Letter {
    enum Kind : std::uint8_t { A = 0, B = 1, Wm = 2, Wp = 3, G = 4, Gt = 5 };
    Kind kind;
    std::uint16_t index = 0;  // unused for A/B

    bool concrete() const { return kind == A || kind == B; }
    friend auto operator<=>(const Letter&, const Letter&) = default;

    std::string name() const;
    static Letter a() { return {A, 0}; }
    static Letter b() { return {B, 0}; }
    static Letter wm(int i) { return {Wm, static_cast<std::uint16_t>(i)}; }
    static Letter wp(int i) { return {Wp, static_cast<std::uint16_t>(i)}; }
    static Letter g(int i) { return {G, static_cast<std::uint16_t>(i)}; }
    static Letter gt(int i) { return {Gt, static_cast<std::uint16_t>(i)}; }
    Letter exchanged() const;
};

/// A word over one alphabet; the empty word is the unit of the algebra.
using Word = std::vector<Letter>;

/// Graded lexicographic word order (length first, then letterwise).
/// With A < B this orients the rewrite rules of the verify module.
struct WordOrder {
    bool operator()(const Word& x, const Word& y) const {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    }
};

std::string word_name(const Word& w);
Word parse_word(const std::string& text, AlphabetTag tag);

/// Noncommutative polynomial: a finite ScalarFraction-linear combination of
/// words over a single alphabet. No zero coefficients are stored.
class NCPolynomial {
public:
    using TermMap = std::map<Word, ScalarFraction, WordOrder>;

    explicit NCPolynomial(AlphabetTag tag = AlphabetTag::Concrete) : alphabet_(tag) {}

    static NCPolynomial zero(AlphabetTag tag) { return NCPolynomial(tag); }
    static NCPolynomial scalar(AlphabetTag tag, ScalarFraction c);
    static NCPolynomial letter(AlphabetTag tag, Letter l, ScalarFraction c = 1);
    static NCPolynomial monomial(AlphabetTag tag, Word w, ScalarFraction c = 1);
    /// Concrete single letters, for convenience in tests and builders.
    static NCPolynomial gen_a() { return letter(AlphabetTag::Concrete, Letter::a()); }
    static NCPolynomial gen_b() { return letter(AlphabetTag::Concrete, Letter::b()); }

    AlphabetTag alphabet() const { return alphabet_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Max word length over stored terms; -1 for the zero polynomial
    /// (standing in for "minus infinity").
    int degree() const;

    ScalarFraction coefficient(const Word& w) const;

    NCPolynomial& operator+=(const NCPolynomial& o);
    NCPolynomial& operator-=(const NCPolynomial& o);
    friend NCPolynomial operator+(NCPolynomial x, const NCPolynomial& y) { return x += y; }
    friend NCPolynomial operator-(NCPolynomial x, const NCPolynomial& y) { return x -= y; }
    friend NCPolynomial operator*(const NCPolynomial& x, const NCPolynomial& y);
    friend NCPolynomial operator*(const ScalarFraction& c, const NCPolynomial& p);
    friend NCPolynomial operator-(const NCPolynomial& x);
    friend bool operator==(const NCPolynomial& x, const NCPolynomial& y) {
        return x.alphabet_ == y.alphabet_ && x.terms_ == y.terms_;
    }

    void add_term(Word w, ScalarFraction c);

    /// Letter-for-letter A <-> B (concrete) or Wm <-> Wp, G <-> Gt (abstract),
    /// preserving word order and coefficients. An involution and an algebra
    /// homomorphism.
    NCPolynomial exchanged() const;

    /// Apply f to every coefficient, dropping the term when f returns zero.
    NCPolynomial map_coefficients(const std::function<ScalarFraction(const ScalarFraction&)>& f) const;

    /// Multiply the coefficient of every word of length n by c^n.
    NCPolynomial scale_letters(const ScalarFraction& c) const;

    std::string to_string() const;
    std::string to_latex() const;

private:
    AlphabetTag alphabet_;
    TermMap terms_;
    void check_same_alphabet(const NCPolynomial& o) const;
};

/// q^s * p1 * p2 - q^(-s) * p2 * p1. s = 0 gives the plain commutator;
/// s = 1 is the q-commutator of the bracket notation, s = 2 its square case.
NCPolynomial q_commutator(const NCPolynomial& p1, const NCPolynomial& p2, int s = 1);
inline NCPolynomial commutator(const NCPolynomial& p1, const NCPolynomial& p2) {
    return q_commutator(p1, p2, 0);
}

/// Homomorphic image replacing every abstract letter by the supplied
/// concrete polynomial. Throws std::invalid_argument if a letter has no
/// image (and on concrete input, which has nothing to substitute).
NCPolynomial substitute_letters(const NCPolynomial& p,
                                const std::function<const NCPolynomial*(Letter)>& image);

}  // namespace qonsager

#endif
