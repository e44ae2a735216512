#pragma once

/**
 * @file mpoly.hpp
 * @brief Polynomials in the two indeterminates q and lambda over the rationals.
 *
 * Stored recursively dense: row j holds the coefficient of lambda^j as a
 * UPoly in q. The canonical term order used for printing, serialization and
 * leading-coefficient normalization is graded lexicographic with q before
 * lambda: higher total degree first, ties broken by higher q-degree.
 */

#include <algorithm>
#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "qfe/upoly.hpp"

namespace qfe {

struct Term {
    Rational coef;
    std::size_t deg_q = 0;
    std::size_t deg_lambda = 0;

    friend bool operator==(const Term&, const Term&) = default;
};

class MPoly {
public:
    MPoly() = default;
    MPoly(Rational c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) rows_.emplace_back(std::move(c));
    }
    MPoly(UPoly in_q) {  // NOLINT(google-explicit-constructor)
        if (!in_q.is_zero()) rows_.push_back(std::move(in_q));
    }
    explicit MPoly(std::vector<UPoly> rows) : rows_(std::move(rows)) { trim(); }

    static MPoly q() { return MPoly(UPoly::monomial(Rational(1), 1)); }
    static MPoly lambda() { return MPoly(std::vector<UPoly>{UPoly{}, UPoly(Rational(1))}); }

    /// Builds from an arbitrary term list; repeated exponents are summed.
    static MPoly from_terms(const std::vector<Term>& terms) {
        std::vector<std::vector<Rational>> dense;
        for (const auto& t : terms) {
            if (dense.size() <= t.deg_lambda) dense.resize(t.deg_lambda + 1);
            auto& row = dense[t.deg_lambda];
            if (row.size() <= t.deg_q) row.resize(t.deg_q + 1);
            row[t.deg_q] += t.coef;
        }
        std::vector<UPoly> rows;
        rows.reserve(dense.size());
        for (auto& r : dense) rows.emplace_back(std::move(r));
        return MPoly(std::move(rows));
    }

    bool is_zero() const noexcept { return rows_.empty(); }
    /// True when the polynomial is a rational constant.
    bool is_constant() const noexcept { return rows_.empty() || (rows_.size() == 1 && rows_[0].is_constant()); }
    bool is_lambda_free() const noexcept { return rows_.size() <= 1; }
    bool is_q_free() const noexcept {
        return std::all_of(rows_.begin(), rows_.end(), [](const UPoly& r) { return r.is_constant(); });
    }
    bool is_one() const { return rows_.size() == 1 && rows_[0].size() == 1 && rows_[0].lead().is_one(); }

    /// Degree in lambda; -1 for zero.
    long deg_lambda() const noexcept { return static_cast<long>(rows_.size()) - 1; }
    long deg_q() const noexcept {
        long d = -1;
        for (const auto& r : rows_) d = std::max(d, r.degree());
        return d;
    }

    const std::vector<UPoly>& rows() const noexcept { return rows_; }
    const UPoly& row(std::size_t j) const { return rows_[j]; }
    const UPoly& lead_row() const { return rows_.back(); }

    Rational constant_value() const { return rows_.empty() ? Rational(0) : rows_[0].coeff(0); }

    /// Terms in canonical (descending graded-lex, q before lambda) order.
    std::vector<Term> terms() const {
        std::vector<Term> out;
        for (std::size_t j = 0; j < rows_.size(); ++j) {
            const auto& c = rows_[j].coeffs();
            for (std::size_t i = 0; i < c.size(); ++i)
                if (!c[i].is_zero()) out.push_back({c[i], i, j});
        }
        std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
            return std::tuple(a.deg_q + a.deg_lambda, a.deg_q) > std::tuple(b.deg_q + b.deg_lambda, b.deg_q);
        });
        return out;
    }

    /// Coefficient of the leading term in canonical order.
    Rational leading_coefficient() const {
        Rational best;
        std::size_t best_total = 0, best_q = 0;
        bool found = false;
        for (std::size_t j = 0; j < rows_.size(); ++j) {
            const auto& c = rows_[j].coeffs();
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (c[i].is_zero()) continue;
                std::size_t total = i + j;
                if (!found || total > best_total || (total == best_total && i > best_q)) {
                    best = c[i];
                    best_total = total;
                    best_q = i;
                    found = true;
                }
            }
        }
        return best;
    }

    Rational eval(const Rational& q0, const Rational& lambda0) const {
        Rational acc;
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc * lambda0 + it->eval(q0);
        return acc;
    }

    /// Substitutes lambda := lambda0, leaving a polynomial in q.
    UPoly eval_lambda(const Rational& lambda0) const {
        UPoly acc;
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc.scaled(lambda0) + *it;
        return acc;
    }

    /// Coefficient of q^i viewed as a polynomial in lambda.
    UPoly q_slice(std::size_t i) const {
        std::vector<Rational> v(rows_.size());
        for (std::size_t j = 0; j < rows_.size(); ++j) v[j] = rows_[j].coeff(i);
        return UPoly(std::move(v));
    }

    /// Lambda-only polynomial lifted into the two-variable ring.
    static MPoly from_lambda(const UPoly& p) {
        std::vector<UPoly> rows;
        rows.reserve(p.size());
        for (const auto& c : p.coeffs()) rows.emplace_back(c);
        return MPoly(std::move(rows));
    }

    MPoly scaled(const Rational& s) const {
        if (s.is_zero()) return {};
        MPoly r = *this;
        for (auto& row : r.rows_) row = row.scaled(s);
        return r;
    }
    MPoly scaled(const UPoly& s) const {
        if (s.is_zero()) return {};
        MPoly r = *this;
        for (auto& row : r.rows_) row = row * s;
        r.trim();
        return r;
    }

    /// Multiplies by lambda^k.
    MPoly shifted(std::size_t k) const {
        if (is_zero()) return {};
        MPoly r;
        r.rows_.resize(k);
        r.rows_.insert(r.rows_.end(), rows_.begin(), rows_.end());
        return r;
    }

    MPoly& operator+=(const MPoly& o) {
        if (rows_.size() < o.rows_.size()) rows_.resize(o.rows_.size());
        for (std::size_t j = 0; j < o.rows_.size(); ++j) rows_[j] += o.rows_[j];
        trim();
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        if (rows_.size() < o.rows_.size()) rows_.resize(o.rows_.size());
        for (std::size_t j = 0; j < o.rows_.size(); ++j) rows_[j] -= o.rows_[j];
        trim();
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator-(MPoly a) {
        for (auto& r : a.rows_) r = -r;
        return a;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.rows_.size() == 1) return b.scaled(a.rows_[0]);
        if (b.rows_.size() == 1) return a.scaled(b.rows_[0]);
        std::vector<UPoly> rows(a.rows_.size() + b.rows_.size() - 1);
        for (std::size_t i = 0; i < a.rows_.size(); ++i) {
            if (a.rows_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.rows_.size(); ++j) {
                if (b.rows_[j].is_zero()) continue;
                rows[i + j] += a.rows_[i] * b.rows_[j];
            }
        }
        return MPoly(std::move(rows));
    }

    friend bool operator==(const MPoly&, const MPoly&) = default;

    /// Quotient of a division known to be exact in Q[q][lambda]; throws if it is not.
    static MPoly exact_div(MPoly a, const MPoly& b) {
        if (b.is_zero()) throw DivisionByZero();
        if (b.rows_.size() == 1) {
            MPoly out;
            out.rows_.reserve(a.rows_.size());
            for (const auto& r : a.rows_) {
                auto [quot, rem] = UPoly::divmod(r, b.rows_[0]);
                if (!rem.is_zero()) throw Error("MPoly::exact_div: inexact division");
                out.rows_.push_back(std::move(quot));
            }
            out.trim();
            return out;
        }
        const std::size_t db = b.rows_.size() - 1;
        std::vector<UPoly> quot;
        while (!a.is_zero()) {
            if (a.rows_.size() - 1 < db) throw Error("MPoly::exact_div: inexact division");
            std::size_t shift = a.rows_.size() - 1 - db;
            auto [c, rem] = UPoly::divmod(a.lead_row(), b.lead_row());
            if (!rem.is_zero()) throw Error("MPoly::exact_div: inexact division");
            if (quot.size() <= shift) quot.resize(shift + 1);
            quot[shift] = c;
            a -= b.scaled(c).shifted(shift);
        }
        return MPoly(std::move(quot));
    }

    /// Gcd of the lambda-coefficients, monic in q.
    UPoly content() const {
        UPoly g;
        for (const auto& r : rows_) {
            g = UPoly::gcd(g, r);
            if (g.is_constant() && !g.is_zero()) return g;
        }
        return g;
    }

    /// Greatest common divisor up to a rational unit.
    static MPoly gcd(const MPoly& a, const MPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.is_constant() || b.is_constant()) return MPoly(Rational(1));
        if (a.is_lambda_free()) return MPoly(UPoly::gcd(a.rows_[0], b.content()));
        if (b.is_lambda_free()) return MPoly(UPoly::gcd(b.rows_[0], a.content()));
        if (a.is_q_free()) return from_lambda(gcd_with_lambda_poly(a.q_slice(0), b));
        if (b.is_q_free()) return from_lambda(gcd_with_lambda_poly(b.q_slice(0), a));

        UPoly ca = a.content(), cb = b.content();
        UPoly c = UPoly::gcd(ca, cb);
        MPoly pa = a.divided_by_content(ca), pb = b.divided_by_content(cb);
        if (pa.deg_lambda() < pb.deg_lambda()) std::swap(pa, pb);
        // Primitive polynomial remainder sequence.
        while (!pb.is_zero() && pb.deg_lambda() > 0) {
            MPoly r = pseudo_remainder(pa, pb);
            pa = std::move(pb);
            pb = r.is_zero() ? r : r.divided_by_content(r.content());
        }
        if (!pb.is_zero()) return MPoly(c);  // lambda-free remainder: primitive parts are coprime
        return pa.scaled(c);
    }

private:
    static UPoly gcd_with_lambda_poly(UPoly g, const MPoly& other) {
        long dq = other.deg_q();
        for (long i = 0; i <= dq && !g.is_constant(); ++i) g = UPoly::gcd(g, other.q_slice(static_cast<std::size_t>(i)));
        return g.is_constant() ? UPoly(Rational(1)) : g;
    }

    MPoly divided_by_content(const UPoly& c) const {
        if (c.is_constant()) return c.is_zero() ? *this : scaled(c.lead().inv());
        MPoly out;
        out.rows_.reserve(rows_.size());
        for (const auto& r : rows_) out.rows_.push_back(UPoly::exact_div(r, c));
        out.trim();
        return out;
    }

    static MPoly pseudo_remainder(MPoly a, const MPoly& b) {
        const long db = b.deg_lambda();
        const UPoly& lb = b.lead_row();
        while (!a.is_zero() && a.deg_lambda() >= db) {
            auto shift = static_cast<std::size_t>(a.deg_lambda() - db);
            UPoly la = a.lead_row();
            a = a.scaled(lb) - b.scaled(la).shifted(shift);
        }
        return a;
    }

    void trim() {
        while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
    }

    std::vector<UPoly> rows_;
};

}  // namespace qfe
