#include "qonsager/multipoly.hpp"
#include <cstdint>
#include <array>

#include <algorithm>
#include <sstream>
#include <vector>

namespace qonsager {

namespace {

BigInt int_gcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

// Dense univariate polynomial over Z, used internally for gcd computations.
// Coefficient i is the coefficient of x^i; the vector is kept trimmed.
using UniPoly = std::vector<BigInt>;

void utrim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int udeg(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

UniPoly umul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    utrim(out);
    return out;
}

UniPoly umul_int(UniPoly a, const BigInt& c) {
    if (c == 0) return {};
    for (auto& x : a) x *= c;
    return a;
}

UniPoly usub(UniPoly a, const UniPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    utrim(a);
    return a;
}

BigInt ucontent(const UniPoly& p) {
    BigInt g = 0;
    for (const auto& c : p) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

UniPoly udiv_int(UniPoly p, const BigInt& c) {
    for (auto& x : p) {
        if (x % c != 0) throw std::domain_error("MultiPoly: inexact integer division");
        x /= c;
    }
    return p;
}

// Exact division a / b over Z; throws when not exact.
UniPoly udiv_exact(UniPoly a, const UniPoly& b) {
    if (b.empty()) throw std::domain_error("MultiPoly: division by zero polynomial");
    UniPoly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (udeg(a) >= udeg(b)) {
        if (a.back() % b.back() != 0)
            throw std::domain_error("MultiPoly: inexact polynomial division");
        BigInt c = a.back() / b.back();
        int k = udeg(a) - udeg(b);
        quot[k] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + k] -= c * b[i];
        utrim(a);
        if (a.empty()) break;
    }
    if (!a.empty()) throw std::domain_error("MultiPoly: inexact polynomial division");
    utrim(quot);
    return quot;
}

// Pseudo-remainder: scales the dividend by lc(b) at each step.
UniPoly uprem(UniPoly a, const UniPoly& b) {
    const int db = udeg(b);
    const BigInt& lb = b.back();
    while (!a.empty() && udeg(a) >= db) {
        BigInt c = a.back();
        int k = udeg(a) - db;
        a = umul_int(std::move(a), lb);
        for (std::size_t i = 0; i < b.size(); ++i) a[i + k] -= c * b[i];
        utrim(a);
    }
    return a;
}

bool udivides(const UniPoly& d, const UniPoly& a) {
    try {
        udiv_exact(a, d);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

// 31-bit primes for the modular gcd images.
constexpr std::uint64_t kGcdPrimes[] = {
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549,
    2147483543, 2147483497, 2147483489, 2147483477, 2147483423, 2147483399,
    2147483353, 2147483323, 2147483269, 2147483249, 2147483237, 2147483179,
    2147483171, 2147483137, 2147483123, 2147483077, 2147483069, 2147483059,
};

std::uint64_t mod_of(const BigInt& c, std::uint64_t p) {
    BigInt m = c % p;
    if (m < 0) m += p;
    return m.convert_to<std::uint64_t>();
}

std::uint64_t mulp(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powp(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulp(r, a, p);
        a = mulp(a, a, p);
        e >>= 1;
    }
    return r;
}

// Monic gcd in GF(p)[x]; empty result means both inputs vanished mod p.
std::vector<std::uint64_t> ugcd_mod(const UniPoly& ia, const UniPoly& ib, std::uint64_t p) {
    auto reduce = [&](const UniPoly& u) {
        std::vector<std::uint64_t> v(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) v[i] = mod_of(u[i], p);
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    };
    auto a = reduce(ia), b = reduce(ib);
    while (!b.empty()) {
        const std::uint64_t inv = powp(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            std::uint64_t f = mulp(a.back(), inv, p);
            std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                std::uint64_t sub = mulp(f, b[i], p);
                a[off + i] = (a[off + i] + p - sub) % p;
            }
            while (!a.empty() && a.back() == 0) a.pop_back();
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (!a.empty() && a.back() != 1) {
        const std::uint64_t inv = powp(a.back(), p - 2, p);
        for (auto& x : a) x = mulp(x, inv, p);
    }
    return a;
}

// Primitive PRS fallback, used only when the modular route runs out of
// lucky primes.
UniPoly ugcd_prs(UniPoly a, UniPoly b) {
    if (udeg(a) < udeg(b)) std::swap(a, b);
    while (!b.empty()) {
        UniPoly rem = uprem(a, b);
        BigInt cr = ucontent(rem);
        if (cr != 0) rem = udiv_int(rem, cr);
        a = std::move(b);
        b = std::move(rem);
    }
    if (a.back() < 0) a = umul_int(a, -1);
    return a;
}

// gcd over Z[x] by modular images, CRT and trial division.
UniPoly ugcd(UniPoly a, UniPoly b) {
    if (a.empty()) {
        if (!b.empty() && b.back() < 0) b = umul_int(b, -1);
        return b;
    }
    if (b.empty()) {
        if (a.back() < 0) a = umul_int(a, -1);
        return a;
    }
    BigInt ca = ucontent(a), cb = ucontent(b);
    const BigInt c = int_gcd(ca, cb);
    a = udiv_int(a, ca);
    b = udiv_int(b, cb);
    if (udeg(a) == 0 || udeg(b) == 0) return {c};

    const BigInt lc_gcd = int_gcd(a.back(), b.back());
    int best_deg = INT32_MAX;
    BigInt modulus = 0;
    std::vector<BigInt> crt;  // lc-scaled candidate, coefficients mod modulus

    for (std::uint64_t p : kGcdPrimes) {
        if (a.back() % p == 0 || b.back() % p == 0) continue;
        auto gp = ugcd_mod(a, b, p);
        const int d = static_cast<int>(gp.size()) - 1;
        if (d == 0) return {c};
        if (d > best_deg) continue;  // unlucky prime
        const std::uint64_t scale = mod_of(lc_gcd, p);
        std::vector<std::uint64_t> scaled(gp.size());
        for (std::size_t i = 0; i < gp.size(); ++i) scaled[i] = mulp(gp[i], scale, p);
        if (d < best_deg) {
            best_deg = d;
            modulus = p;
            crt.assign(scaled.begin(), scaled.end());
        } else {
            // CRT merge into the running candidate
            const BigInt m = modulus;
            const std::uint64_t minv = powp(mod_of(m, p), p - 2, p);
            for (std::size_t i = 0; i < crt.size(); ++i) {
                std::uint64_t diff = (scaled[i] + p - mod_of(crt[i], p)) % p;
                crt[i] += m * BigInt(mulp(diff, minv, p));
            }
            modulus *= p;
        }
        // symmetric lift, primitive part, then verify by division
        UniPoly cand(crt.size());
        for (std::size_t i = 0; i < crt.size(); ++i) {
            cand[i] = crt[i];
            if (2 * cand[i] > modulus) cand[i] -= modulus;
        }
        utrim(cand);
        if (cand.empty()) continue;
        BigInt cc = ucontent(cand);
        if (cc != 0) cand = udiv_int(cand, cc);
        if (cand.back() < 0) cand = umul_int(cand, -1);
        if (udivides(cand, a) && udivides(cand, b)) return umul_int(cand, c);
    }
    UniPoly g = ugcd_prs(std::move(a), std::move(b));
    return umul_int(g, c);
}

// Polynomial in r with coefficients in Z[q].
using RecPoly = std::vector<UniPoly>;

void rtrim(RecPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

int rdeg(const RecPoly& p) { return static_cast<int>(p.size()) - 1; }

RecPoly rmul_upoly(RecPoly a, const UniPoly& c) {
    for (auto& x : a) x = umul(x, c);
    rtrim(a);
    return a;
}

RecPoly rsub(RecPoly a, const RecPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = usub(a[i], b[i]);
    rtrim(a);
    return a;
}

UniPoly rcontent(const RecPoly& p) {
    UniPoly g;
    for (const auto& c : p) g = ugcd(g, c);
    return g;
}

RecPoly rdiv_upoly(RecPoly p, const UniPoly& g) {
    for (auto& c : p) c = c.empty() ? c : udiv_exact(c, g);
    return p;
}

RecPoly rprem(RecPoly a, const RecPoly& b) {
    const int db = rdeg(b);
    const UniPoly& lb = b.back();
    while (rdeg(a) >= db && !a.empty()) {
        UniPoly c = a.back();
        int k = rdeg(a) - db;
        a = rmul_upoly(a, lb);
        RecPoly sub(b.size() + k);
        for (std::size_t i = 0; i < b.size(); ++i) sub[i + k] = umul(b[i], c);
        a = rsub(std::move(a), sub);
    }
    return a;
}

RecPoly rgcd(RecPoly a, RecPoly b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    UniPoly ca = rcontent(a), cb = rcontent(b);
    UniPoly c = ugcd(ca, cb);
    a = rdiv_upoly(std::move(a), ca);
    b = rdiv_upoly(std::move(b), cb);
    if (rdeg(a) < rdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        RecPoly rem = rprem(a, b);
        if (!rem.empty()) {
            UniPoly cr = rcontent(rem);
            rem = rdiv_upoly(std::move(rem), cr);
        }
        a = std::move(b);
        b = std::move(rem);
    }
    return rmul_upoly(std::move(a), c);
}

RecPoly to_rec(const MultiPoly& p) {
    RecPoly out;
    for (const auto& [e, c] : p.terms()) {
        if (static_cast<int>(out.size()) <= e.er) out.resize(e.er + 1);
        UniPoly& row = out[e.er];
        if (static_cast<int>(row.size()) <= e.eq) row.resize(e.eq + 1);
        row[e.eq] = c;
    }
    for (auto& row : out) utrim(row);
    rtrim(out);
    return out;
}

MultiPoly from_rec(const RecPoly& p) {
    MultiPoly out;
    for (int j = 0; j <= rdeg(p); ++j)
        for (int i = 0; i <= udeg(p[j]); ++i)
            if (p[j][i] != 0) out += MultiPoly::monomial(Exponent{i, j}, p[j][i]);
    return out;
}

}  // namespace

int MultiPoly::degree_q() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.eq);
    return d;
}

int MultiPoly::degree_r() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.er);
    return d;
}

Exponent MultiPoly::min_exponents() const {
    if (terms_.empty()) return {0, 0};
    Exponent m{INT32_MAX, INT32_MAX};
    for (const auto& [e, c] : terms_) {
        m.eq = std::min(m.eq, e.eq);
        m.er = std::min(m.er, e.er);
    }
    return m;
}

const std::pair<const Exponent, BigInt>& MultiPoly::leading() const {
    if (terms_.empty()) throw std::domain_error("MultiPoly: leading term of zero");
    return *terms_.rbegin();
}

int MultiPoly::sign_of_leading() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->second > 0 ? 1 : -1;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
    MultiPoly out;
    if (x.terms_.empty() || y.terms_.empty()) return out;
    const int dxq = x.degree_q(), dxr = x.degree_r();
    const int dyq = y.degree_q(), dyr = y.degree_r();
    const long long cells =
        (static_cast<long long>(dxq) + dyq + 1) * (static_cast<long long>(dxr) + dyr + 1);
    if (cells <= 1 << 16) {
        // dense convolution; the polynomials here are mostly dense in q
        const int W = dxq + dyq + 1;
        std::vector<BigInt> grid(static_cast<std::size_t>(cells));
        for (const auto& [ex, cx] : x.terms_)
            for (const auto& [ey, cy] : y.terms_)
                grid[static_cast<std::size_t>(ex.er + ey.er) * W + (ex.eq + ey.eq)] += cx * cy;
        for (int er = 0; er <= dxr + dyr; ++er)
            for (int eq = 0; eq < W; ++eq) {
                BigInt& c = grid[static_cast<std::size_t>(er) * W + eq];
                if (c != 0) out.terms_.emplace(Exponent{eq, er}, std::move(c));
            }
        return out;
    }
    for (const auto& [ex, cx] : x.terms_)
        for (const auto& [ey, cy] : y.terms_) {
            Exponent e{ex.eq + ey.eq, ex.er + ey.er};
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) {
                out.terms_.emplace(e, cx * cy);
            } else {
                it->second += cx * cy;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    return out;
}

MultiPoly operator-(const MultiPoly& x) {
    MultiPoly out = x;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MultiPoly MultiPoly::mul_monomial(Exponent e, const BigInt& c) const {
    MultiPoly out;
    if (c == 0) return out;
    for (const auto& [ex, cx] : terms_)
        out.terms_.emplace(Exponent{ex.eq + e.eq, ex.er + e.er}, cx * c);
    return out;
}

MultiPoly MultiPoly::div_monomial(Exponent e) const {
    MultiPoly out;
    for (const auto& [ex, cx] : terms_) {
        if (ex.eq < e.eq || ex.er < e.er)
            throw std::domain_error("MultiPoly: inexact monomial division");
        out.terms_.emplace(Exponent{ex.eq - e.eq, ex.er - e.er}, cx);
    }
    return out;
}

MultiPoly MultiPoly::mul_int(const BigInt& c) const {
    MultiPoly out;
    if (c == 0) return out;
    for (const auto& [e, x] : terms_) out.terms_.emplace(e, x * c);
    return out;
}

MultiPoly MultiPoly::div_int(const BigInt& c) const {
    if (c == 0) throw std::domain_error("MultiPoly: division by zero");
    MultiPoly out;
    for (const auto& [e, x] : terms_) {
        if (x % c != 0) throw std::domain_error("MultiPoly: inexact integer division");
        out.terms_.emplace(e, x / c);
    }
    return out;
}

BigInt MultiPoly::content() const {
    BigInt g = 0;
    for (const auto& [e, c] : terms_) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

std::pair<MultiPoly, int> MultiPoly::substitute_q(const BigInt& num, const BigInt& den) const {
    const int d = std::max(degree_q(), 0);
    // q^i -> num^i * den^(d-i); the caller divides the result by den^d.
    std::vector<BigInt> npow(d + 1), dpow(d + 1);
    npow[0] = 1;
    dpow[0] = 1;
    for (int i = 1; i <= d; ++i) {
        npow[i] = npow[i - 1] * num;
        dpow[i] = dpow[i - 1] * den;
    }
    MultiPoly out;
    for (const auto& [e, c] : terms_)
        out += MultiPoly::monomial(Exponent{0, e.er}, c * npow[e.eq] * dpow[d - e.eq]);
    return {out, d};
}

std::pair<MultiPoly, int> MultiPoly::substitute_r(const BigInt& num, const BigInt& den) const {
    const int d = std::max(degree_r(), 0);
    std::vector<BigInt> npow(d + 1), dpow(d + 1);
    npow[0] = 1;
    dpow[0] = 1;
    for (int i = 1; i <= d; ++i) {
        npow[i] = npow[i - 1] * num;
        dpow[i] = dpow[i - 1] * den;
    }
    MultiPoly out;
    for (const auto& [e, c] : terms_)
        out += MultiPoly::monomial(Exponent{e.eq, 0}, c * npow[e.er] * dpow[d - e.er]);
    return {out, d};
}

Rational MultiPoly::evaluate(const Rational& qv, const Rational& rv) const {
    Rational out = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < e.eq; ++i) t *= qv;
        for (int i = 0; i < e.er; ++i) t *= rv;
        out += t;
    }
    return out;
}

namespace {

// Cheap coprimality screen over GF(p). A "coprime" verdict may in rare
// degenerate cases be wrong, in which case the fraction simply stays less
// than fully reduced, which every consumer tolerates (equality is by
// cross-multiplication). A "not coprime" verdict falls back to the exact
// subresultant path.
constexpr std::uint64_t kScreenP = (std::uint64_t(1) << 61) - 1;  // Mersenne prime

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kScreenP);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t coeff_mod(const BigInt& c) {
    BigInt m = c % kScreenP;
    if (m < 0) m += kScreenP;
    return m.convert_to<std::uint64_t>();
}

// Project onto GF(p)[main] by substituting a constant for the other
// variable; index 0 of the result is the constant coefficient.
std::vector<std::uint64_t> project(const MultiPoly& p, bool main_is_q, std::uint64_t other) {
    int deg = main_is_q ? p.degree_q() : p.degree_r();
    std::vector<std::uint64_t> out(static_cast<std::size_t>(deg) + 1, 0);
    for (const auto& [e, c] : p.terms()) {
        int mi = main_is_q ? e.eq : e.er;
        int oi = main_is_q ? e.er : e.eq;
        std::uint64_t v = mulmod(coeff_mod(c), powmod(other, oi));
        out[mi] = (out[mi] + v) % kScreenP;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Euclidean gcd degree in GF(p)[x]; -1 encodes "inconclusive" (an input
// projected to zero).
int gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
    if (a.empty() || b.empty()) return -1;
    while (!b.empty()) {
        const std::uint64_t inv = powmod(b.back(), kScreenP - 2);
        while (a.size() >= b.size()) {
            std::uint64_t f = mulmod(a.back(), inv);
            std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                std::uint64_t sub = mulmod(f, b[i]);
                a[off + i] = (a[off + i] + kScreenP - sub) % kScreenP;
            }
            while (!a.empty() && a.back() == 0) a.pop_back();
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

bool screened_coprime(const MultiPoly& x, const MultiPoly& y) {
    // q-direction: substitute r := 7
    if (gcd_degree_mod(project(x, true, 7), project(y, true, 7)) != 0) return false;
    // r-direction: substitute q := 11 (skip when neither contains r)
    if (x.degree_r() > 0 || y.degree_r() > 0) {
        if (gcd_degree_mod(project(x, false, 11), project(y, false, 11)) != 0) return false;
    }
    return true;
}

}  // namespace

MultiPoly poly_gcd_full(const MultiPoly& x, const MultiPoly& y, bool allow_screen) {
    auto normalized = [](MultiPoly p) {
        if (p.sign_of_leading() < 0) p = -p;
        return p;
    };
    if (x.is_zero()) return normalized(y);
    if (y.is_zero()) return normalized(x);

    const BigInt ic = int_gcd(x.content(), y.content());
    const Exponent mx = x.min_exponents(), my = y.min_exponents();
    const Exponent common{std::min(mx.eq, my.eq), std::min(mx.er, my.er)};

    MultiPoly x0 = x.div_monomial(mx).div_int(x.content());
    MultiPoly y0 = y.div_monomial(my).div_int(y.content());

    MultiPoly core;
    if (x0.is_constant() || y0.is_constant() ||
        (allow_screen && screened_coprime(x0, y0))) {
        core = MultiPoly::one();
    } else if (x0.degree_r() == 0 && y0.degree_r() == 0) {
        RecPoly rx = to_rec(x0), ry = to_rec(y0);
        core = from_rec(RecPoly{ugcd(rx[0], ry[0])});
    } else {
        core = from_rec(rgcd(to_rec(x0), to_rec(y0)));
    }
    MultiPoly out = core.mul_monomial(common, ic);
    if (out.sign_of_leading() < 0) out = -out;
    return out;
}

MultiPoly poly_gcd(const MultiPoly& x, const MultiPoly& y) {
    return poly_gcd_full(x, y, true);
}

MultiPoly poly_divide_exact(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_zero()) throw std::domain_error("MultiPoly: division by zero polynomial");
    if (num.is_zero()) return MultiPoly::zero();
    if (den.is_one()) return num;
    if (den.is_monomial()) {
        const auto& [e, c] = *den.terms().begin();
        return num.div_monomial(e).div_int(c);
    }
    RecPoly a = to_rec(num), b = to_rec(den);
    RecPoly quot(rdeg(a) >= rdeg(b) ? rdeg(a) - rdeg(b) + 1 : 0);
    while (!a.empty() && rdeg(a) >= rdeg(b)) {
        UniPoly c = udiv_exact(a.back(), b.back());
        int k = rdeg(a) - rdeg(b);
        quot[k] = c;
        RecPoly sub(b.size() + k);
        for (std::size_t i = 0; i < b.size(); ++i) sub[i + k] = umul(b[i], c);
        a = rsub(std::move(a), sub);
    }
    if (!a.empty()) throw std::domain_error("MultiPoly: inexact polynomial division");
    return from_rec(quot);
}

std::optional<MultiPoly> poly_sqrt(const MultiPoly& p) {
    if (p.is_zero()) return MultiPoly::zero();
    if (p.degree_r() != 0) return std::nullopt;
    RecPoly rp = to_rec(p);
    const UniPoly& u = rp[0];
    const int d = udeg(u);
    if (d % 2 != 0) return std::nullopt;
    const int m = d / 2;
    if (u.back() < 0) return std::nullopt;
    BigInt lead = boost::multiprecision::sqrt(u.back());
    if (lead * lead != u.back()) return std::nullopt;
    UniPoly s(m + 1);
    s[m] = lead;
    for (int k = m - 1; k >= 0; --k) {
        BigInt acc = (m + k <= d) ? u[m + k] : BigInt(0);
        for (int i = k + 1; i < m; ++i) {
            int j = m + k - i;
            if (j > i) continue;  // each unordered pair once
            if (j == i)
                acc -= s[i] * s[i];
            else
                acc -= 2 * s[i] * s[j];
        }
        BigInt den = 2 * lead;
        if (acc % den != 0) return std::nullopt;
        s[k] = acc / den;
    }
    if (umul(s, s) != u) return std::nullopt;
    MultiPoly out;
    for (int i = 0; i <= m; ++i)
        if (s[i] != 0) out += MultiPoly::monomial(Exponent{i, 0}, s[i]);
    return out;
}

namespace {

void append_term(std::string& out, const Exponent& e, const BigInt& c, bool latex) {
    const bool neg = c < 0;
    BigInt mag = neg ? BigInt(-c) : c;
    if (out.empty()) {
        if (neg) out += "-";
    } else {
        out += neg ? "-" : "+";
    }
    std::string vars;
    auto power = [&](const char* name, int exp) {
        if (exp == 0) return;
        if (!vars.empty() && !latex) vars += "*";
        vars += name;
        if (exp > 1) {
            if (latex)
                vars += "^{" + std::to_string(exp) + "}";
            else
                vars += "^" + std::to_string(exp);
        }
    };
    power("q", e.eq);
    power(latex ? "\\rho" : "r", e.er);
    if (vars.empty()) {
        out += mag.str();
    } else {
        if (mag != 1) {
            out += mag.str();
            if (!latex) out += "*";
        }
        out += vars;
    }
}

}  // namespace

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        append_term(out, it->first, it->second, false);
    return out;
}

std::string MultiPoly::to_latex() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        append_term(out, it->first, it->second, true);
    return out;
}

}  // namespace qonsager
