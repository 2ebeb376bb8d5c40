#include "flatdisc/scalar.hpp"

#include "doctest.h"

#include <random>

using namespace flatdisc;

TEST_SUITE_BEGIN("scalar");

TEST_CASE("field arithmetic in Q[sqrt2]") {
    const Scalar r2 = Scalar::sqrt2();
    CHECK(r2 * r2 == Scalar(2));
    const Scalar x(Rat(3), Rat(-2));  // 3 - 2√2
    const Scalar y = Scalar(1) / x;
    CHECK(x * y == Scalar(1));
    CHECK((x + y) - y == x);
}

TEST_CASE("sign is exact near cancellation") {
    // 169/120 < sqrt(2) < 99/70 (continued-fraction convergents)
    CHECK((Scalar::sqrt2() - Scalar(Rat(99, 70))).sign() < 0);
    CHECK((Scalar::sqrt2() - Scalar(Rat(169, 120))).sign() > 0);
    CHECK(Scalar(0).sign() == 0);
    CHECK((Scalar(Rat(-2)) + Scalar::sqrt2() * Scalar::sqrt2()).sign() == 0);
}

TEST_CASE("doubles embed exactly") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const double v = std::ldexp(static_cast<double>(rng()) / 1e3, -(int)(rng() % 40));
        const Scalar s = Scalar::from_double(v);
        CHECK(s.to_double() == doctest::Approx(v).epsilon(1e-15));
        const Scalar t = Scalar::from_double(-v);
        CHECK((s + t).sign() == 0);
    }
}

TEST_CASE("rational text round-trip") {
    for (const char* txt : {"0", "1", "-3", "0.5", "-0.125", "12.25", "1e3", "2.5e-2", "7/3"}) {
        auto r = parse_rational(txt);
        REQUIRE(r.has_value());
        auto again = parse_rational(rational_to_string(*r));
        REQUIRE(again.has_value());
        CHECK(*again == *r);
    }
    CHECK(rational_to_string(Rat(1, 4)) == "0.25");
    CHECK(rational_to_string(Rat(-1, 2)) == "-0.5");
    CHECK(rational_to_string(Rat(1, 3)) == "1/3");
    CHECK(!parse_rational("abc").has_value());
    CHECK(!parse_rational("1.2.3").has_value());
    CHECK(!parse_rational("").has_value());
}

TEST_SUITE_END();
