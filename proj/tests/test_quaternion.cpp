#include <doctest.h>

#include <random>

#include "qgi/errors.hpp"
#include "qgi/quaternion.hpp"
#include "support/sampling.hpp"

using namespace qgi;

namespace {
Quaternion q(long w, long x, long y, long z) {
    return {Rational(w), Rational(x), Rational(y), Rational(z)};
}
} // namespace

TEST_CASE("basis multiplication table") {
    const Quaternion one(1), i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
    CHECK(i * i == -one);
    CHECK(j * j == -one);
    CHECK(k * k == -one);
    CHECK(i * j * k == -one);
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(j * k == i);
    CHECK(k * j == -i);
    CHECK(k * i == j);
    CHECK(i * k == -j);
}

TEST_CASE("products from the contract") {
    CHECK(Quaternion::i() * Quaternion::j() == Quaternion::k());
    CHECK(q(0, 2, 0, 0) * q(0, -2, 0, 0) == q(4, 0, 0, 0));
    CHECK(q(1, 1, 0, 0) * q(1, 0, 1, 0) == q(1, 1, 1, 1));
}

TEST_CASE("conjugation") {
    CHECK(conj(Quaternion::k()) == -Quaternion::k());
    CHECK(conj(q(1, 1, 1, 1)) == q(1, -1, -1, -1));
    CHECK(conj(Quaternion()) == Quaternion());
}

TEST_CASE("inversion") {
    CHECK(Quaternion::i().inverse() == -Quaternion::i());
    CHECK(q(1, 1, 0, 0).inverse() ==
          Quaternion(Rational(1, 2), Rational(-1, 2), Rational(0), Rational(0)));
    CHECK_THROWS_AS(Quaternion().inverse(), DivisionByZero);
}

TEST_CASE("algebra laws on random samples") {
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        const Quaternion p = sampling::random_quaternion(rng, -3, 3);
        const Quaternion s = sampling::random_quaternion(rng, -3, 3);
        const Quaternion r = sampling::random_quaternion(rng, -3, 3);
        CHECK((p * s) * r == p * (s * r));
        CHECK(p * (s + r) == p * s + p * r);
        CHECK((s + r) * p == s * p + r * p);
        CHECK(conj(conj(p)) == p);
        CHECK(conj(p * s) == conj(s) * conj(p));
        CHECK((p * s).norm2() == p.norm2() * s.norm2());
        if (!p.is_zero()) {
            CHECK(p * p.inverse() == Quaternion(1));
            CHECK(p.inverse() * p == Quaternion(1));
        }
    }
}

TEST_CASE("reals commute with everything") {
    std::mt19937 rng(11);
    for (int t = 0; t < 50; ++t) {
        const Quaternion real(Rational(t - 25));
        const Quaternion p = sampling::random_quaternion(rng, -3, 3);
        CHECK(real * p == p * real);
    }
}

TEST_CASE("norm is positive definite") {
    std::mt19937 rng(13);
    for (int t = 0; t < 100; ++t) {
        const Quaternion p = sampling::random_quaternion(rng, -3, 3);
        CHECK(sgn(p.norm2()) >= 0);
        CHECK((sgn(p.norm2()) == 0) == p.is_zero());
        CHECK(p * conj(p) == Quaternion(p.norm2()));
    }
}

TEST_CASE("rational parsing and canonical emission") {
    CHECK(parse_rational("-6/8") == Rational(-3, 4));
    CHECK(to_string(parse_rational("-6/8")) == "-3/4");
    CHECK(parse_rational("42") == Rational(42));
    CHECK(to_string(parse_rational("+3/3")) == "1");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("2/-3"), ParseError);
    CHECK_THROWS_AS(parse_rational(" 1"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/"), ParseError);
}

TEST_CASE("printing") {
    CHECK(q(0, 0, 0, 0).str() == "0");
    CHECK(q(1, -1, 0, 2).str() == "1 - i + 2k");
    CHECK(Quaternion(Rational(0), Rational(-1, 2), Rational(0), Rational(0)).str() ==
          "-1/2i");
}
