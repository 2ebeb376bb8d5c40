#pragma once

// Exact scalar arithmetic for flat-surface geometry.
//
// Scalar models the real quadratic field Q[sqrt(2)]: values a + b*sqrt(2)
// with exact rational a, b. Rational inputs (including every IEEE double,
// which is a dyadic rational) embed with b = 0; the regular octagon lives at
// b != 0. All ring/field operations, sign tests and comparisons are exact,
// which is what the straight-line tracing and flip predicates need.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace flatdisc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class Scalar {
public:
    Scalar() = default;
    Scalar(int v) : a_(v) {}                 // NOLINT: implicit by design
    Scalar(std::int64_t v) : a_(v) {}        // NOLINT
    Scalar(Rat v) : a_(std::move(v)) {}      // NOLINT
    Scalar(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

    static Scalar sqrt2() { return Scalar(Rat(0), Rat(1)); }
    // Exact embedding of an IEEE double (doubles are dyadic rationals).
    static Scalar from_double(double v);

    const Rat& rat_part() const { return a_; }
    const Rat& sqrt2_part() const { return b_; }
    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    double to_double() const;

    // -1, 0, +1; exact.
    int sign() const;

    Scalar operator-() const { return Scalar(-a_, -b_); }
    Scalar& operator+=(const Scalar& o) { a_ += o.a_; b_ += o.b_; return *this; }
    Scalar& operator-=(const Scalar& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
    friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
    friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
    friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }

    friend bool operator==(const Scalar& l, const Scalar& r) {
        return l.a_ == r.a_ && l.b_ == r.b_;
    }
    friend bool operator!=(const Scalar& l, const Scalar& r) { return !(l == r); }
    friend bool operator<(const Scalar& l, const Scalar& r) { return (l - r).sign() < 0; }
    friend bool operator>(const Scalar& l, const Scalar& r) { return (l - r).sign() > 0; }
    friend bool operator<=(const Scalar& l, const Scalar& r) { return (l - r).sign() <= 0; }
    friend bool operator>=(const Scalar& l, const Scalar& r) { return (l - r).sign() >= 0; }

    // "a+b√2" with exact fraction parts, or plain fraction/integer when b=0.
    std::string str() const;

private:
    Rat a_ = 0;
    Rat b_ = 0;
};

inline Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

// Decimal/fraction text for exact rationals.
//
// parse_rational accepts integers, fractions "p/q", decimals with optional
// exponent ("-0.5", "1.25e-3"). Returns nullopt on malformed input.
std::optional<Rat> parse_rational(const std::string& text);

// Canonical text for a rational: exact finite decimal when the denominator
// is of the form 2^a 5^b and needs at most max_decimal_digits digits,
// otherwise "p/q". parse_rational round-trips the result exactly.
std::string rational_to_string(const Rat& v, int max_decimal_digits = 60);

double rat_to_double(const Rat& v);

}  // namespace flatdisc
