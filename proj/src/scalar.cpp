#include "qonsager/scalar.hpp"

#include <vector>

namespace qonsager {

void ScalarFraction::normalize() {
    if (den_.is_zero()) throw std::domain_error("ScalarFraction: zero denominator");
    if (num_.is_zero()) {
        den_ = MultiPoly::one();
        return;
    }
    if (!den_.is_one()) {
        MultiPoly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = poly_divide_exact(num_, g);
            den_ = poly_divide_exact(den_, g);
        }
    }
    if (den_.sign_of_leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

ScalarFraction ScalarFraction::from(MultiPoly num, MultiPoly den) {
    ScalarFraction x;
    x.num_ = std::move(num);
    x.den_ = std::move(den);
    x.normalize();
    return x;
}

ScalarFraction ScalarFraction::q(int e) {
    if (e >= 0) return from(MultiPoly::q(e), MultiPoly::one());
    return from(MultiPoly::one(), MultiPoly::q(-e));
}

ScalarFraction ScalarFraction::r(int e) {
    if (e >= 0) return from(MultiPoly::r(e), MultiPoly::one());
    return from(MultiPoly::one(), MultiPoly::r(-e));
}

ScalarFraction& ScalarFraction::operator+=(const ScalarFraction& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

ScalarFraction& ScalarFraction::operator-=(const ScalarFraction& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

ScalarFraction& ScalarFraction::operator*=(const ScalarFraction& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

ScalarFraction& ScalarFraction::operator/=(const ScalarFraction& o) {
    if (o.is_zero()) throw std::domain_error("ScalarFraction: division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

ScalarFraction operator-(const ScalarFraction& x) {
    ScalarFraction out = x;
    out.num_ = -out.num_;
    return out;
}

bool operator==(const ScalarFraction& x, const ScalarFraction& y) {
    if (x.num_ == y.num_ && x.den_ == y.den_) return true;
    return x.num_ * y.den_ == y.num_ * x.den_;
}

ScalarFraction ScalarFraction::inverse() const {
    if (is_zero()) throw std::domain_error("ScalarFraction: inverse of zero");
    return from(den_, num_);
}

ScalarFraction ScalarFraction::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    ScalarFraction out = 1;
    ScalarFraction base = *this;
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

namespace {

// Substitute r := P/D into a polynomial; returns (result, D-power cleared)
// so that poly == result / D^power at r = P/D.
std::pair<MultiPoly, MultiPoly> subst_r_fraction(const MultiPoly& p, const MultiPoly& P,
                                                 const MultiPoly& D) {
    const int J = std::max(p.degree_r(), 0);
    std::vector<MultiPoly> Ppow(J + 1), Dpow(J + 1);
    Ppow[0] = MultiPoly::one();
    Dpow[0] = MultiPoly::one();
    for (int i = 1; i <= J; ++i) {
        Ppow[i] = Ppow[i - 1] * P;
        Dpow[i] = Dpow[i - 1] * D;
    }
    MultiPoly out;
    for (const auto& [e, c] : p.terms()) {
        MultiPoly t = MultiPoly::monomial(Exponent{e.eq, 0}, c);
        out += t * Ppow[e.er] * Dpow[J - e.er];
    }
    return {out, Dpow[J]};
}

}  // namespace

ScalarFraction ScalarFraction::fully_reduced() const {
    ScalarFraction x = *this;
    MultiPoly g = poly_gcd_full(x.num_, x.den_, false);
    if (!g.is_one()) {
        x.num_ = poly_divide_exact(x.num_, g);
        x.den_ = poly_divide_exact(x.den_, g);
    }
    return x;
}

ScalarFraction ScalarFraction::specialize(const std::optional<Rational>& q_val,
                                          const std::optional<ScalarFraction>& r_val) const {
    ScalarFraction x = *this;
    if (r_val && x.has_r()) {
        const ScalarFraction& rv = *r_val;
        if (rv.num().degree_r() > 0 || rv.den().degree_r() > 0)
            throw std::domain_error("ScalarFraction: r substitution value must be free of r");
        auto [nn, nd] = subst_r_fraction(x.num_, rv.num(), rv.den());
        auto [dn, dd] = subst_r_fraction(x.den_, rv.num(), rv.den());
        if (dn.is_zero()) {
            // A leftover common factor can fake a pole; reduce and retry.
            ScalarFraction red = x.fully_reduced();
            auto [nn2, nd2] = subst_r_fraction(red.num_, rv.num(), rv.den());
            auto [dn2, dd2] = subst_r_fraction(red.den_, rv.num(), rv.den());
            if (dn2.is_zero())
                throw std::domain_error("ScalarFraction: pole in r substitution");
            x = from(nn2 * dd2, dn2 * nd2);
        } else {
            x = from(nn * dd, dn * nd);
        }
    }
    if (q_val) {
        const BigInt p = boost::multiprecision::numerator(*q_val);
        const BigInt s = boost::multiprecision::denominator(*q_val);
        auto subst = [&](const ScalarFraction& y) -> std::optional<ScalarFraction> {
            auto [nn, ni] = y.num_.substitute_q(p, s);
            auto [dn, di] = y.den_.substitute_q(p, s);
            if (dn.is_zero()) return std::nullopt;
            // y = (nn/s^ni) / (dn/s^di) = nn*s^di / (dn*s^ni)
            BigInt spow_num = 1, spow_den = 1;
            for (int i = 0; i < di; ++i) spow_num *= s;
            for (int i = 0; i < ni; ++i) spow_den *= s;
            return from(nn.mul_int(spow_num), dn.mul_int(spow_den));
        };
        auto out = subst(x);
        if (!out) out = subst(x.fully_reduced());
        if (!out) throw std::domain_error("ScalarFraction: pole at q substitution point");
        x = *out;
    }
    return x;
}

ScalarFraction ScalarFraction::scale_r(const Rational& c) const {
    // r := c*r is a substitution by the fraction (c.num * r) / c.den.
    MultiPoly P = MultiPoly::r().mul_int(boost::multiprecision::numerator(c));
    MultiPoly D(boost::multiprecision::denominator(c));
    auto [nn, nd] = subst_r_fraction(num_, P, D);
    auto [dn, dd] = subst_r_fraction(den_, P, D);
    return from(nn * dd, dn * nd);
}

std::optional<ScalarFraction> ScalarFraction::sqrt() const {
    auto sn = poly_sqrt(num_);
    if (!sn) return std::nullopt;
    auto sd = poly_sqrt(den_);
    if (!sd) return std::nullopt;
    return from(*sn, *sd);
}

std::optional<Rational> ScalarFraction::try_evaluate(const Rational& qv,
                                                     const Rational& rv) const {
    Rational d = den_.evaluate(qv, rv);
    if (d == 0) return std::nullopt;
    return num_.evaluate(qv, rv) / d;
}

std::string ScalarFraction::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::string ScalarFraction::to_latex() const {
    if (den_.is_one()) return num_.to_latex();
    return "\\frac{" + num_.to_latex() + "}{" + den_.to_latex() + "}";
}

}  // namespace qonsager
