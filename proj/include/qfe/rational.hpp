#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision rationals backed by GMP.
 *
 * The value is always kept canonical: numerator and denominator coprime,
 * denominator positive, zero stored as 0/1. Division by zero throws instead
 * of trapping inside GMP.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "qfe/errors.hpp"

namespace qfe {

class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw DivisionByZero();
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpz_class num, mpz_class den = 1) {
        if (den == 0) throw DivisionByZero();
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p", "-p" or "p/q". Rejects a zero denominator and stray characters.
    static Rational parse(std::string_view text) {
        auto bad = [&](std::size_t at) {
            return ParseError(at, {"integer", "integer/positive-integer"}, "bad rational '" + std::string(text) + "'");
        };
        std::size_t i = 0;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        std::size_t digits_start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == digits_start) throw bad(i);
        std::string num_text(text.substr(0, i));
        if (num_text.front() == '+') num_text.erase(0, 1);
        mpz_class num(num_text, 10);
        if (i == text.size()) return Rational(num);
        if (text[i] != '/') throw bad(i);
        std::size_t den_start = ++i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == den_start || i != text.size()) throw bad(i);
        mpz_class den(std::string(text.substr(den_start)), 10);
        if (den == 0) throw DivisionByZero();
        return Rational(num, den);
    }

    const mpq_class& value() const noexcept { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_one() const noexcept { return v_ == 1; }
    int sign() const noexcept { return sgn(v_); }
    bool is_integer() const noexcept { return v_.get_den() == 1; }

    /// "p/q", or "p" when the denominator is one.
    std::string str() const { return v_.get_str(10); }

    Rational inv() const {
        if (is_zero()) throw DivisionByZero();
        return Rational(mpq_class(1) / v_);
    }

    Rational pow(unsigned e) const {
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), e);
        mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), e);
        return Rational(n, d);
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_{0};
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

}  // namespace qfe

template <>
struct std::hash<qfe::Rational> {
    std::size_t operator()(const qfe::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};
