#include "qonsager/ncpoly.hpp"

#include <cctype>
#include <stdexcept>

namespace qonsager {

std::string Letter::name() const {
    switch (kind) {
        case A: return "A";
        case B: return "B";
        case Wm: return "Wm" + std::to_string(index);
        case Wp: return "Wp" + std::to_string(index);
        case G: return "G" + std::to_string(index);
        case Gt: return "Gt" + std::to_string(index);
    }
    return "?";
}

Letter Letter::exchanged() const {
    switch (kind) {
        case A: return {B, 0};
        case B: return {A, 0};
        case Wm: return {Wp, index};
        case Wp: return {Wm, index};
        case G: return {Gt, index};
        case Gt: return {G, index};
    }
    return *this;
}

std::string word_name(const Word& w) {
    std::string out;
    for (const Letter& l : w) out += l.name();
    return out;
}

Word parse_word(const std::string& text, AlphabetTag tag) {
    Word w;
    std::size_t i = 0;
    auto number = [&]() {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("bad word: " + text);
        int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            v = v * 10 + (text[i++] - '0');
        return v;
    };
    while (i < text.size()) {
        char c = text[i];
        if (tag == AlphabetTag::Concrete) {
            if (c == 'A') w.push_back(Letter::a());
            else if (c == 'B') w.push_back(Letter::b());
            else throw std::invalid_argument("bad concrete word: " + text);
            ++i;
            continue;
        }
        if (text.compare(i, 2, "Wm") == 0) {
            i += 2;
            w.push_back(Letter::wm(number()));
        } else if (text.compare(i, 2, "Wp") == 0) {
            i += 2;
            w.push_back(Letter::wp(number()));
        } else if (text.compare(i, 2, "Gt") == 0) {
            i += 2;
            w.push_back(Letter::gt(number()));
        } else if (c == 'G') {
            i += 1;
            w.push_back(Letter::g(number()));
        } else {
            throw std::invalid_argument("bad abstract word: " + text);
        }
    }
    return w;
}

NCPolynomial NCPolynomial::scalar(AlphabetTag tag, ScalarFraction c) {
    NCPolynomial p(tag);
    p.add_term({}, std::move(c));
    return p;
}

NCPolynomial NCPolynomial::letter(AlphabetTag tag, Letter l, ScalarFraction c) {
    const bool concrete = l.concrete();
    if (concrete != (tag == AlphabetTag::Concrete))
        throw std::invalid_argument("NCPolynomial: letter does not belong to alphabet");
    NCPolynomial p(tag);
    p.add_term({l}, std::move(c));
    return p;
}

NCPolynomial NCPolynomial::monomial(AlphabetTag tag, Word w, ScalarFraction c) {
    for (const Letter& l : w)
        if (l.concrete() != (tag == AlphabetTag::Concrete))
            throw std::invalid_argument("NCPolynomial: word does not belong to alphabet");
    NCPolynomial p(tag);
    p.add_term(std::move(w), std::move(c));
    return p;
}

int NCPolynomial::degree() const {
    if (terms_.empty()) return -1;
    // Words are graded-lex ordered, so the last one is longest.
    return static_cast<int>(terms_.rbegin()->first.size());
}

ScalarFraction NCPolynomial::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? ScalarFraction(0) : it->second;
}

void NCPolynomial::check_same_alphabet(const NCPolynomial& o) const {
    if (alphabet_ != o.alphabet_)
        throw std::invalid_argument("NCPolynomial: alphabet mismatch");
}

void NCPolynomial::add_term(Word w, ScalarFraction c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(std::move(w), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
    check_same_alphabet(o);
    for (const auto& [w, c] : o.terms_) {
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) {
    check_same_alphabet(o);
    for (const auto& [w, c] : o.terms_) {
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

NCPolynomial operator*(const NCPolynomial& x, const NCPolynomial& y) {
    x.check_same_alphabet(y);
    NCPolynomial out(x.alphabet_);
    for (const auto& [wx, cx] : x.terms_) {
        for (const auto& [wy, cy] : y.terms_) {
            Word w;
            w.reserve(wx.size() + wy.size());
            w.insert(w.end(), wx.begin(), wx.end());
            w.insert(w.end(), wy.begin(), wy.end());
            out.add_term(std::move(w), cx * cy);
        }
    }
    return out;
}

NCPolynomial operator*(const ScalarFraction& c, const NCPolynomial& p) {
    NCPolynomial out(p.alphabet_);
    if (c.is_zero()) return out;
    for (const auto& [w, x] : p.terms_) out.terms_.emplace(w, c * x);
    return out;
}

NCPolynomial operator-(const NCPolynomial& x) {
    NCPolynomial out(x.alphabet_);
    for (const auto& [w, c] : x.terms_) out.terms_.emplace(w, -c);
    return out;
}

NCPolynomial NCPolynomial::exchanged() const {
    NCPolynomial out(alphabet_);
    for (const auto& [w, c] : terms_) {
        Word e;
        e.reserve(w.size());
        for (const Letter& l : w) e.push_back(l.exchanged());
        out.terms_.emplace(std::move(e), c);
    }
    return out;
}

NCPolynomial NCPolynomial::map_coefficients(
    const std::function<ScalarFraction(const ScalarFraction&)>& f) const {
    NCPolynomial out(alphabet_);
    for (const auto& [w, c] : terms_) {
        ScalarFraction v = f(c);
        if (!v.is_zero()) out.terms_.emplace(w, std::move(v));
    }
    return out;
}

NCPolynomial NCPolynomial::scale_letters(const ScalarFraction& c) const {
    NCPolynomial out(alphabet_);
    for (const auto& [w, x] : terms_)
        out.add_term(w, x * c.pow(static_cast<int>(w.size())));
    return out;
}

NCPolynomial q_commutator(const NCPolynomial& p1, const NCPolynomial& p2, int s) {
    return ScalarFraction::q(s) * (p1 * p2) - ScalarFraction::q(-s) * (p2 * p1);
}

NCPolynomial substitute_letters(const NCPolynomial& p,
                                const std::function<const NCPolynomial*(Letter)>& image) {
    if (p.alphabet() != AlphabetTag::Abstract)
        throw std::invalid_argument("substitute_letters: expected an abstract polynomial");
    NCPolynomial out(AlphabetTag::Concrete);
    for (const auto& [w, c] : p.terms()) {
        NCPolynomial prod = NCPolynomial::scalar(AlphabetTag::Concrete, c);
        for (const Letter& l : w) {
            const NCPolynomial* img = image(l);
            if (img == nullptr)
                throw std::invalid_argument("substitute_letters: no image for letter " + l.name());
            prod = prod * *img;
        }
        out += prod;
    }
    return out;
}

namespace {

std::string format_poly(const NCPolynomial& p, bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    // Leading (largest) words first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [w, c] = *it;
        const bool neg = c.sign() < 0;
        const ScalarFraction mag = neg ? -c : c;
        std::string cs = latex ? mag.to_latex() : mag.to_string();
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const bool grouped = cs.front() == '(' || cs.rfind("\\frac", 0) == 0;
        const bool needs_parens = !grouped && (cs.find('+') != std::string::npos ||
                                               cs.find('-') != std::string::npos);
        if (needs_parens) cs = "(" + cs + ")";
        std::string body;
        if (w.empty()) {
            body = cs;
        } else {
            std::string wn;
            if (latex) {
                for (const Letter& l : w)
                    wn += l.kind == Letter::A   ? "\\textsf{A}"
                          : l.kind == Letter::B ? "{\\textsf{A}^*}"
                                                : l.name();
            } else {
                wn = word_name(w);
            }
            if (cs == "1") {
                body = wn;
            } else {
                body = cs + (latex ? "\\," : "*") + wn;
            }
        }
        out += body;
    }
    return out;
}

}  // namespace

std::string NCPolynomial::to_string() const { return format_poly(*this, false); }
std::string NCPolynomial::to_latex() const { return format_poly(*this, true); }

}  // namespace qonsager
