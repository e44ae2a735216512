#pragma once

/**
 * @file field.hpp
 * @brief Scalar field contract, field configuration and the q-context.
 *
 * Every algorithm in the library is a template over an exact field K. Two
 * fields are provided: Rational (q and lambda fixed to rational values) and
 * RatFunc (q and lambda indeterminates). A QContext<K> carries the values of
 * q and lambda inside K, plus memo tables for q-integers, q-factorials and
 * Gaussian binomials.
 */

#include <concepts>
#include <cstddef>
#include <deque>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qfe/errors.hpp"
#include "qfe/ratfunc.hpp"

namespace qfe {

template <typename K>
concept ExactField = std::regular<K> && requires(K a, K b, Rational r) {
    { K(r) } -> std::same_as<K>;
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { a / b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { is_zero(a) } -> std::convertible_to<bool>;
};

enum class FieldMode { NumericRational, SymbolicQLambda };

struct FieldConfig {
    FieldMode mode = FieldMode::SymbolicQLambda;
    std::optional<Rational> q_value;
    std::optional<Rational> lambda_value;

    static FieldConfig symbolic() { return {}; }
    static FieldConfig numeric(Rational q, Rational lambda) {
        return {FieldMode::NumericRational, std::move(q), std::move(lambda)};
    }

    /// Throws InvalidConfig unless the configuration can be used for every operation.
    void validate() const {
        if (mode == FieldMode::SymbolicQLambda) return;
        if (!q_value || !lambda_value) throw InvalidConfig("numeric mode needs both q and lambda values");
        if (*q_value == Rational(1) || *q_value == Rational(-1))
            throw InvalidConfig("q = " + q_value->str() + " is a root of unity; [n]_q would vanish");
        if (*lambda_value == Rational(1)) throw InvalidConfig("lambda must differ from 1");
    }
};

/// Values of q and lambda in K together with memoized q-combinatorics.
template <ExactField K>
class QContext {
public:
    QContext(K q, K lambda) : q_(std::move(q)), lambda_(std::move(lambda)) {}

    QContext(const QContext& o) : q_(o.q_), lambda_(o.lambda_) {}
    QContext& operator=(const QContext& o) {
        if (this != &o) {
            std::scoped_lock lock(mutex_);
            q_ = o.q_;
            lambda_ = o.lambda_;
            q_pow_.clear();
            q_int_.clear();
            q_fact_.clear();
            binom_rows_.clear();
        }
        return *this;
    }

    const K& q() const noexcept { return q_; }
    const K& lambda() const noexcept { return lambda_; }

    /// q^k.
    const K& q_pow(std::size_t k) const {
        std::scoped_lock lock(mutex_);
        if (q_pow_.empty()) q_pow_.push_back(K(Rational(1)));
        while (q_pow_.size() <= k) q_pow_.push_back(q_pow_.back() * q_);
        return q_pow_[k];
    }

    /// [n]_q = 1 + q + ... + q^{n-1}.
    const K& q_int(std::size_t n) const {
        {
            std::scoped_lock lock(mutex_);
            if (n < q_int_.size()) return q_int_[n];
        }
        for (std::size_t i = 0; i < n; ++i) q_pow(i);
        std::scoped_lock lock(mutex_);
        if (q_int_.empty()) q_int_.push_back(K(Rational(0)));
        while (q_int_.size() <= n) q_int_.push_back(q_int_.back() + q_pow_[q_int_.size() - 1]);
        return q_int_[n];
    }

    /// [n]_q! = [1]_q [2]_q ... [n]_q.
    const K& q_factorial(std::size_t n) const {
        {
            std::scoped_lock lock(mutex_);
            if (n < q_fact_.size()) return q_fact_[n];
        }
        q_int(n);
        std::scoped_lock lock(mutex_);
        if (q_fact_.empty()) q_fact_.push_back(K(Rational(1)));
        while (q_fact_.size() <= n) q_fact_.push_back(q_fact_.back() * q_int_[q_fact_.size()]);
        return q_fact_[n];
    }

    /// Gaussian binomial [n]_q! / ([k]_q! [n-k]_q!); zero outside 0 <= k <= n.
    K q_binomial(std::size_t n, long k) const {
        if (k < 0 || static_cast<std::size_t>(k) > n) return K(Rational(0));
        return binomial_row(n)[static_cast<std::size_t>(k)];
    }

    /// Row n of the Gaussian binomial triangle.
    const std::vector<K>& binomial_row(std::size_t n) const {
        {
            std::scoped_lock lock(mutex_);
            if (n < binom_rows_.size()) return binom_rows_[n];
        }
        q_factorial(n);
        std::scoped_lock lock(mutex_);
        while (binom_rows_.size() <= n) {
            std::size_t m = binom_rows_.size();
            std::vector<K> row(m + 1);
            for (std::size_t k = 0; k <= m / 2; ++k) {
                row[k] = q_fact_[m] / (q_fact_[k] * q_fact_[m - k]);
                row[m - k] = row[k];
            }
            binom_rows_.push_back(std::move(row));
        }
        return binom_rows_[n];
    }

private:
    K q_;
    K lambda_;
    mutable std::mutex mutex_;
    mutable std::deque<K> q_pow_;
    mutable std::deque<K> q_int_;
    mutable std::deque<K> q_fact_;
    mutable std::deque<std::vector<K>> binom_rows_;
};

using NumericContext = QContext<Rational>;
using SymbolicContext = QContext<RatFunc>;

/// Context with q and lambda as indeterminates.
inline SymbolicContext symbolic_context() { return SymbolicContext(RatFunc::q(), RatFunc::lambda()); }

/// Context with q and lambda fixed to validated rational values.
inline NumericContext numeric_context(const Rational& q, const Rational& lambda) {
    FieldConfig::numeric(q, lambda).validate();
    return NumericContext(q, lambda);
}

}  // namespace qfe
