#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qonsager/ncpoly.hpp"

#include <random>

using namespace qonsager;

namespace {

const NCPolynomial A = NCPolynomial::gen_a();
const NCPolynomial B = NCPolynomial::gen_b();
const ScalarFraction Q = ScalarFraction::q();

std::mt19937_64 rng(7131);

ScalarFraction random_coeff() {
    std::uniform_int_distribution<long> c(-5, 5), e(0, 2);
    ScalarFraction v(c(rng));
    return v * ScalarFraction::q(1).pow(static_cast<int>(e(rng))) +
           ScalarFraction(c(rng));
}

NCPolynomial random_poly() {
    std::uniform_int_distribution<int> nterms(0, 4), len(0, 3), letter(0, 1);
    NCPolynomial p(AlphabetTag::Concrete);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Word w;
        int m = len(rng);
        for (int j = 0; j < m; ++j)
            w.push_back(letter(rng) ? Letter::b() : Letter::a());
        p.add_term(std::move(w), random_coeff());
    }
    return p;
}

}  // namespace

TEST_CASE("multiplication basics") {
    auto ab = A * B;
    CHECK(ab.term_count() == 1);
    CHECK(ab.coefficient({Letter::a(), Letter::b()}) == ScalarFraction(1));

    auto unit = NCPolynomial::scalar(AlphabetTag::Concrete, 1);
    auto p = random_poly();
    CHECK(unit * p == p);
    CHECK(p * unit == p);

    auto prod = (A + B) * (A - B);
    // A^2 - AB + BA - B^2: noncommutative, the cross terms stay.
    CHECK(prod.coefficient({Letter::a(), Letter::a()}) == ScalarFraction(1));
    CHECK(prod.coefficient({Letter::a(), Letter::b()}) == ScalarFraction(-1));
    CHECK(prod.coefficient({Letter::b(), Letter::a()}) == ScalarFraction(1));
    CHECK(prod.coefficient({Letter::b(), Letter::b()}) == ScalarFraction(-1));
    CHECK(prod.term_count() == 4);
}

TEST_CASE("alphabet mismatch is an error") {
    auto wm0 = NCPolynomial::letter(AlphabetTag::Abstract, Letter::wm(0));
    CHECK_THROWS_AS(A * wm0, std::invalid_argument);
    CHECK_THROWS_AS(A + wm0, std::invalid_argument);
}

TEST_CASE("q_commutator") {
    auto x = random_poly();
    CHECK(q_commutator(x, x, 1) == (Q - Q.pow(-1)) * (x * x));
    auto unit = NCPolynomial::scalar(AlphabetTag::Concrete, 1);
    CHECK(q_commutator(x, unit, 1) == (Q - Q.pow(-1)) * x);
    // [B, A]_q = q BA - q^-1 AB, the leading part of the first G generator.
    auto g1 = q_commutator(B, A, 1);
    CHECK(g1.coefficient({Letter::b(), Letter::a()}) == Q);
    CHECK(g1.coefficient({Letter::a(), Letter::b()}) == -Q.pow(-1));
    // s = 0 degenerates to the plain commutator.
    CHECK(q_commutator(A, B, 0) == A * B - B * A);
}

TEST_CASE("exchange") {
    for (int i = 0; i < 50; ++i) {
        auto p = random_poly();
        CHECK(p.exchanged().exchanged() == p);
    }
    auto g1 = q_commutator(B, A, 1);
    CHECK(g1.exchanged() == q_commutator(A, B, 1));

    // f_1(A,A*) -> f_1(A*,A) under the exchange.
    auto r = ScalarFraction::r();
    auto f1 = (ScalarFraction(1) / r) *
                  ((Q.pow(2) + Q.pow(-2)) * (A * B * A) - A * A * B - B * A * A) +
              B;
    auto f1x = (ScalarFraction(1) / r) *
                   ((Q.pow(2) + Q.pow(-2)) * (B * A * B) - B * B * A - A * B * B) +
               A;
    CHECK(f1.exchanged() == f1x);
}

TEST_CASE("substitute letters") {
    auto wm0 = NCPolynomial::letter(AlphabetTag::Abstract, Letter::wm(0));
    auto wp0 = NCPolynomial::letter(AlphabetTag::Abstract, Letter::wp(0));
    auto image = [&](Letter l) -> const NCPolynomial* {
        static const NCPolynomial a = A, b = B;
        if (l == Letter::wm(0)) return &a;
        if (l == Letter::wp(0)) return &b;
        return nullptr;
    };
    CHECK(substitute_letters(wm0, image) == A);
    CHECK(substitute_letters(wp0, image) == B);
    CHECK(substitute_letters(wp0 * wm0, image) == B * A);
    auto g0 = NCPolynomial::letter(AlphabetTag::Abstract, Letter::g(0));
    CHECK_THROWS_AS(substitute_letters(g0, image), std::invalid_argument);
}

TEST_CASE("algebra laws on random polynomials") {
    for (int i = 0; i < 60; ++i) {
        auto a = random_poly();
        auto b = random_poly();
        auto c = random_poly();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b).exchanged() == a.exchanged() + b.exchanged());
        CHECK((a * b).exchanged() == a.exchanged() * b.exchanged());
        if (!a.is_zero() && !b.is_zero())
            CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("free-algebra q-commutator rewriting identity") {
    // [A,B]_q - [C,A]_q = (q - q^-1)(B - C)A + [A, qB + q^-1 C]
    for (int i = 0; i < 40; ++i) {
        auto a = random_poly();
        auto b = random_poly();
        auto c = random_poly();
        auto lhs = q_commutator(a, b, 1) - q_commutator(c, a, 1);
        auto rhs = (Q - Q.pow(-1)) * ((b - c) * a) +
                   commutator(a, Q * b + Q.pow(-1) * c);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("word names and parsing") {
    Word w{Letter::wm(3), Letter::wp(2), Letter::g(1), Letter::gt(4)};
    CHECK(word_name(w) == "Wm3Wp2G1Gt4");
    CHECK(parse_word("Wm3Wp2G1Gt4", AlphabetTag::Abstract) == w);
    CHECK(parse_word("ABA", AlphabetTag::Concrete) ==
          Word{Letter::a(), Letter::b(), Letter::a()});
    CHECK(parse_word("", AlphabetTag::Concrete).empty());
    CHECK_THROWS_AS(parse_word("AX", AlphabetTag::Concrete), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("G", AlphabetTag::Abstract), std::invalid_argument);
}

TEST_CASE("printing") {
    auto g1 = q_commutator(B, A, 1);
    CHECK(g1.to_string() == "q*BA - (1)/(q)*AB");
    CHECK(NCPolynomial(AlphabetTag::Concrete).to_string() == "0");
    auto p = A + NCPolynomial::scalar(AlphabetTag::Concrete, ScalarFraction(Rational(1, 2)));
    CHECK(p.to_string() == "A + (1)/(2)");
}
