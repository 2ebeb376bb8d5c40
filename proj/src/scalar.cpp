#include "flatdisc/scalar.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace flatdisc {

namespace {

// Exact rational from the binary representation of a finite double.
Rat rat_from_double(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite value");
    if (v == 0.0) return Rat(0);
    int exp = 0;
    double frac = std::frexp(v, &exp);  // v = frac * 2^exp, |frac| in [0.5, 1)
    // 53 mantissa bits make frac * 2^53 integral.
    auto mant = static_cast<std::int64_t>(std::ldexp(frac, 53));
    exp -= 53;
    Rat r(mant);
    if (exp >= 0) {
        r *= Rat(Int(1) << exp);
    } else {
        r /= Rat(Int(1) << (-exp));
    }
    return r;
}

}  // namespace

Scalar Scalar::from_double(double v) { return Scalar(rat_from_double(v)); }

double rat_to_double(const Rat& v) { return v.convert_to<double>(); }

double Scalar::to_double() const {
    return rat_to_double(a_) + rat_to_double(b_) * std::sqrt(2.0);
}

int Scalar::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with 2 b^2.
    const Rat a2 = a_ * a_;
    const Rat b2 = b_ * b_ * 2;
    if (a2 == b2) return 0;  // only at a = b = 0, already excluded, but be safe
    return (a2 > b2) ? sa : sb;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    const Rat a = a_ * o.a_ + 2 * b_ * o.b_;
    const Rat b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    // (a+b√2)/(c+d√2) = (a+b√2)(c−d√2)/(c²−2d²)
    const Rat den = o.a_ * o.a_ - 2 * o.b_ * o.b_;
    if (den == 0) {
        if (o.is_zero()) throw std::invalid_argument("division by zero");
        // c² = 2d² with (c,d) rational forces c = d = 0.
        throw std::invalid_argument("division by zero norm");
    }
    Scalar conj(o.a_, -o.b_);
    *this *= conj;
    a_ /= den;
    b_ /= den;
    return *this;
}

std::string Scalar::str() const {
    if (b_ == 0) return rational_to_string(a_);
    std::ostringstream os;
    if (a_ != 0) os << rational_to_string(a_) << (b_ > 0 ? "+" : "");
    os << rational_to_string(b_) << "*sqrt2";
    return os.str();
}

std::optional<Rat> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = (text[i] == '-');
        ++i;
    }
    // Fraction form p/q.
    if (text.find('/') != std::string::npos) {
        const auto slash = text.find('/');
        try {
            Int num(text.substr(0, slash));
            Int den(text.substr(slash + 1));
            if (den == 0) return std::nullopt;
            return Rat(num, den);
        } catch (...) {
            return std::nullopt;
        }
    }
    Int mantissa = 0;
    int frac_digits = 0;
    bool seen_digit = false;
    bool seen_dot = false;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c >= '0' && c <= '9') {
            mantissa = mantissa * 10 + (c - '0');
            if (seen_dot) ++frac_digits;
            seen_digit = true;
        } else if (c == '.') {
            if (seen_dot) return std::nullopt;
            seen_dot = true;
        } else if (c == 'e' || c == 'E') {
            break;
        } else {
            return std::nullopt;
        }
    }
    if (!seen_digit) return std::nullopt;
    long expo = 0;
    if (i < text.size()) {  // exponent part
        try {
            expo = std::stol(text.substr(i + 1));
        } catch (...) {
            return std::nullopt;
        }
    }
    Rat r(mantissa);
    if (neg) r = -r;
    const long shift = expo - frac_digits;
    Int pow10 = 1;
    for (long k = 0; k < std::labs(shift); ++k) pow10 *= 10;
    if (shift >= 0) {
        r *= Rat(pow10);
    } else {
        r /= Rat(pow10);
    }
    return r;
}

std::string rational_to_string(const Rat& v, int max_decimal_digits) {
    Int num = boost::multiprecision::numerator(v);
    Int den = boost::multiprecision::denominator(v);
    // Count the 2s and 5s in the denominator.
    Int d = den;
    int twos = 0;
    int fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    const int digits = std::max(twos, fives);
    if (d != 1 || digits > max_decimal_digits) {
        std::ostringstream os;
        os << num << "/" << den;
        return os.str();
    }
    // Scale to an integer over 10^digits.
    Int scaled = num;
    for (int k = 0; k < digits - twos; ++k) scaled *= 2;
    for (int k = 0; k < digits - fives; ++k) scaled *= 5;
    const bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::ostringstream os;
    os << scaled;
    std::string s = os.str();
    if (digits > 0) {
        if (static_cast<int>(s.size()) <= digits) {
            s.insert(0, digits + 1 - s.size(), '0');
        }
        s.insert(s.size() - digits, ".");
        // Trim trailing zeros but keep at least one fractional digit.
        while (s.back() == '0' && s[s.size() - 2] != '.') s.pop_back();
    }
    return (neg ? "-" : "") + s;
}

}  // namespace flatdisc
