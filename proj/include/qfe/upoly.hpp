#pragma once

/**
 * @file upoly.hpp
 * @brief Dense univariate polynomials over the rationals.
 *
 * Building block for the two-variable polynomial ring: an MPoly is a dense
 * list of UPolys in q indexed by the power of lambda. Also used on its own
 * for univariate GCDs in either variable.
 */

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "qfe/rational.hpp"

namespace qfe {

class UPoly {
public:
    UPoly() = default;
    UPoly(Rational c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly monomial(Rational c, std::size_t k) {
        if (c.is_zero()) return {};
        std::vector<Rational> v(k + 1);
        v[k] = std::move(c);
        return UPoly(std::move(v));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    std::size_t size() const noexcept { return c_.size(); }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    const Rational& lead() const { return c_.back(); }

    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    Rational eval(const Rational& x) const {
        Rational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UPoly& operator+=(const UPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator-(UPoly a) {
        for (auto& c : a.c_) c = -c;
        return a;
    }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].value() * b.c_[j].value();
        }
        std::vector<Rational> out;
        out.reserve(acc.size());
        for (auto& v : acc) out.emplace_back(std::move(v));
        return UPoly(std::move(out));
    }

    UPoly scaled(const Rational& s) const {
        if (s.is_zero()) return {};
        UPoly r = *this;
        for (auto& c : r.c_) c *= s;
        return r;
    }

    /// Divides by the leading coefficient; zero stays zero.
    UPoly monic() const {
        if (is_zero() || lead().is_one()) return *this;
        return scaled(lead().inv());
    }

    friend bool operator==(const UPoly&, const UPoly&) = default;

    /// Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) throw DivisionByZero();
        if (a.degree() < b.degree()) return {UPoly{}, a};
        std::vector<mpq_class> rem;
        rem.reserve(a.c_.size());
        for (const auto& c : a.c_) rem.push_back(c.value());
        const std::size_t db = b.c_.size() - 1;
        std::vector<Rational> quot(a.c_.size() - db);
        const mpq_class inv_lead = mpq_class(1) / b.lead().value();
        for (std::size_t k = quot.size(); k-- > 0;) {
            mpq_class f = rem[k + db] * inv_lead;
            if (sgn(f) == 0) continue;
            for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * b.c_[j].value();
            quot[k] = Rational(f);
        }
        rem.resize(db);
        std::vector<Rational> r;
        r.reserve(rem.size());
        for (auto& v : rem) r.emplace_back(std::move(v));
        return {UPoly(std::move(quot)), UPoly(std::move(r))};
    }

    /// Quotient of a division known to be exact.
    static UPoly exact_div(const UPoly& a, const UPoly& b) {
        auto [q, r] = divmod(a, b);
        assert(r.is_zero());
        return q;
    }

    static bool divides(const UPoly& b, const UPoly& a) { return divmod(a, b).second.is_zero(); }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    static UPoly gcd(UPoly a, UPoly b) {
        if (a.degree() < b.degree()) std::swap(a, b);
        if (b.is_zero()) return a.monic();
        if (b.is_constant()) return UPoly(Rational(1));
        while (!b.is_zero()) {
            auto r = divmod(a, b).second;
            a = std::move(b);
            b = r.monic();
        }
        return a.monic();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

}  // namespace qfe
