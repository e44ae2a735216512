#pragma once

/**
 * @file ratfunc.hpp
 * @brief The field Q(q, lambda) of rational functions with canonical forms.
 *
 * Canonical form: num and den coprime, both with integer coefficients whose
 * joint content is one, and the leading coefficient of den (graded lex, q
 * before lambda) positive. Zero is 0/1. Two values are equal exactly when
 * their canonical forms are structurally identical.
 */

#include <string>
#include <utility>

#include "qfe/mpoly.hpp"

namespace qfe {

class RatFunc {
public:
    RatFunc() : den_(Rational(1)) {}
    RatFunc(long c) : RatFunc(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(int c) : RatFunc(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const Rational& c) : num_(c), den_(Rational(1)) { normalize_scale(); }  // NOLINT
    RatFunc(MPoly p) : num_(std::move(p)), den_(Rational(1)) { normalize_scale(); }  // NOLINT

    /// num/den reduced to canonical form.
    RatFunc(MPoly num, MPoly den) {
        if (den.is_zero()) throw DivisionByZero();
        MPoly g = MPoly::gcd(num, den);
        if (g.is_constant()) {
            num_ = std::move(num);
            den_ = std::move(den);
        } else {
            num_ = MPoly::exact_div(std::move(num), g);
            den_ = MPoly::exact_div(std::move(den), g);
        }
        normalize_scale();
    }

    static RatFunc q() { return RatFunc(MPoly::q()); }
    static RatFunc lambda() { return RatFunc(MPoly::lambda()); }

    const MPoly& num() const noexcept { return num_; }
    const MPoly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    /// Substitutes q = q0, lambda = lambda0 into the reduced form.
    Rational evaluate(const Rational& q0, const Rational& lambda0) const {
        Rational d = den_.eval(q0, lambda0);
        if (d.is_zero()) throw PoleAtPoint("q=" + q0.str() + ", lambda=" + lambda0.str());
        return num_.eval(q0, lambda0) / d;
    }

    /// Substitutes lambda = lambda0, leaving a rational function of q alone.
    RatFunc substitute_lambda(const Rational& lambda0) const {
        UPoly d = den_.eval_lambda(lambda0);
        if (d.is_zero()) throw PoleAtPoint("lambda=" + lambda0.str());
        return RatFunc(MPoly(num_.eval_lambda(lambda0)), MPoly(std::move(d)));
    }

    RatFunc inv() const {
        if (is_zero()) throw DivisionByZero();
        RatFunc r;
        r.num_ = den_;
        r.den_ = num_;
        r.normalize_scale();
        return r;
    }

    RatFunc pow(unsigned e) const {
        RatFunc result(1), base = *this;
        while (e) {
            if (e & 1u) result *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return result;
    }

    friend RatFunc operator-(RatFunc a) {
        a.num_ = -a.num_;
        return a;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return add(a, b, false); }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return add(a, b, true); }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_polynomial() && b.is_polynomial()) {
            RatFunc r;
            r.num_ = a.num_ * b.num_;
            r.den_ = MPoly(a.den_.constant_value() * b.den_.constant_value());
            r.normalize_scale();
            return r;
        }
        MPoly g1 = MPoly::gcd(a.num_, b.den_);
        MPoly g2 = MPoly::gcd(b.num_, a.den_);
        RatFunc r;
        r.num_ = div_if_needed(a.num_, g1) * div_if_needed(b.num_, g2);
        r.den_ = div_if_needed(a.den_, g2) * div_if_needed(b.den_, g1);
        r.normalize_scale();
        return r;
    }

    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc&, const RatFunc&) = default;

    /// Re-derives the canonical form from scratch; a no-op on canonical values.
    RatFunc canonicalized() const { return RatFunc(num_, den_); }

private:
    static MPoly div_if_needed(const MPoly& a, const MPoly& g) {
        return g.is_constant() ? a : MPoly::exact_div(a, g);
    }

    static RatFunc add(const RatFunc& a, const RatFunc& b, bool subtract) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return subtract ? -b : b;
        MPoly bn = subtract ? -b.num_ : b.num_;
        if (a.den_ == b.den_) {
            MPoly n = a.num_ + bn;
            return RatFunc(std::move(n), a.den_);
        }
        if (a.is_polynomial() && b.is_polynomial()) {
            // Integer-content normalization keeps constant dens distinct; fold the scalars in.
            return RatFunc(a.num_.scaled(b.den_.constant_value()) + bn.scaled(a.den_.constant_value()),
                           MPoly(a.den_.constant_value() * b.den_.constant_value()));
        }
        MPoly g = MPoly::gcd(a.den_, b.den_);
        if (g.is_constant()) {
            RatFunc r;
            r.num_ = a.num_ * b.den_ + bn * a.den_;
            r.den_ = a.den_ * b.den_;
            if (r.num_.is_zero()) return {};
            r.normalize_scale();
            return r;
        }
        MPoly da = MPoly::exact_div(a.den_, g);
        MPoly db = MPoly::exact_div(b.den_, g);
        MPoly n = a.num_ * db + bn * da;
        if (n.is_zero()) return {};
        MPoly h = MPoly::gcd(n, g);
        RatFunc r;
        if (h.is_constant()) {
            r.num_ = std::move(n);
            r.den_ = da * b.den_;
        } else {
            r.num_ = MPoly::exact_div(std::move(n), h);
            r.den_ = da * MPoly::exact_div(b.den_, h);
        }
        r.normalize_scale();
        return r;
    }

    /// Scales num and den by a common rational so both have coprime integer
    /// coefficients and den has a positive leading coefficient.
    void normalize_scale() {
        if (num_.is_zero()) {
            den_ = MPoly(Rational(1));
            return;
        }
        mpz_class l = 1, g = 0;
        auto visit = [&](const MPoly& p) {
            for (const auto& row : p.rows())
                for (const auto& c : row.coeffs())
                    if (!c.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.value().get_den_mpz_t());
        };
        visit(num_);
        visit(den_);
        auto visit_num = [&](const MPoly& p) {
            for (const auto& row : p.rows())
                for (const auto& c : row.coeffs())
                    if (!c.is_zero()) {
                        mpz_class v = c.value().get_num() * (l / c.value().get_den());
                        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
                    }
        };
        visit_num(num_);
        visit_num(den_);
        Rational scale(l, g);
        if (den_.leading_coefficient().sign() < 0) scale = -scale;
        if (!scale.is_one()) {
            num_ = num_.scaled(scale);
            den_ = den_.scaled(scale);
        }
    }

    MPoly num_;
    MPoly den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

}  // namespace qfe
