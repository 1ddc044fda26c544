#include <doctest.h>

#include <stdexcept>

#include "framekit/rational.hpp"
#include "framekit/random.hpp"

using framekit::Rational;

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("1/2") == Rational(1, 2));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse(" 4/6 ") == Rational(2, 3));
    CHECK(Rational::parse("0/5").is_zero());
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("1/-2"));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS(Rational::parse(""));

    CHECK(Rational(3).to_string() == "3/1");
    CHECK(Rational(-2, 4).to_string() == "-1/2");
    CHECK(Rational(3).to_short_string() == "3");
    CHECK(Rational(1, 3).to_short_string() == "1/3");
}

TEST_CASE("rational arithmetic") {
    const Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK(Rational(-7, 3).abs() == Rational(7, 3));
    CHECK(Rational(-7, 3).reciprocal() == Rational(-3, 7));
    CHECK(b < a);
    CHECK(max(a, b) == a);
    CHECK(min(a, b) == b);
    CHECK(Rational(4, 2).is_integer());
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("large int64 values survive construction") {
    const std::int64_t big = INT64_MAX;
    CHECK(Rational(big).to_string() == "9223372036854775807/1");
    CHECK(Rational(INT64_MIN).to_string() == "-9223372036854775808/1");
}

TEST_CASE("field axioms on random rationals") {
    framekit::Sampler s(7);
    for (int i = 0; i < 500; ++i) {
        const Rational a = s.small_rational(50, 30), b = s.small_rational(50, 30), c = s.small_rational(50, 30);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("sampler is reproducible") {
    framekit::Sampler a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.uniform(-5, 5) == b.uniform(-5, 5));
    framekit::Sampler c(3);
    for (int i = 0; i < 1000; ++i) {
        const auto v = c.uniform(-2, 2);
        CHECK(v >= -2);
        CHECK(v <= 2);
    }
}
