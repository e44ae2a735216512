#pragma once

// Small random generators for property tests. Values are kept tiny so that
// symbolic arithmetic on them stays fast.

#include <random>
#include <vector>

#include "qfe/qfe.hpp"

namespace qfe::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    std::size_t index(std::size_t hi) { return std::uniform_int_distribution<std::size_t>(0, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    Rational rational(long span = 9) { return Rational(integer(-span, span), integer(1, span)); }

    Rational nonzero_rational(long span = 9) {
        Rational r = rational(span);
        while (r.is_zero()) r = rational(span);
        return r;
    }

    /// Random (q, lambda) with q not in {1, -1} and lambda != 1.
    std::pair<Rational, Rational> field_point() {
        Rational q = rational();
        while (q == Rational(1) || q == Rational(-1)) q = rational();
        Rational lambda = rational();
        while (lambda == Rational(1)) lambda = rational();
        return {q, lambda};
    }

    MPoly mpoly(std::size_t max_terms = 3, std::size_t max_deg = 2) {
        std::vector<Term> terms;
        std::size_t count = index(max_terms);
        for (std::size_t i = 0; i < count; ++i) terms.push_back({rational(5), index(max_deg), index(max_deg)});
        return MPoly::from_terms(terms);
    }

    MPoly nonzero_mpoly(std::size_t max_terms = 3, std::size_t max_deg = 2) {
        MPoly p = mpoly(max_terms, max_deg);
        while (p.is_zero()) p = mpoly(max_terms, max_deg);
        return p;
    }

    RatFunc ratfunc() { return RatFunc(mpoly(), nonzero_mpoly()); }

    RatFunc nonzero_ratfunc() { return RatFunc(nonzero_mpoly(), nonzero_mpoly()); }

    template <ExactField K>
    K scalar() {
        if constexpr (std::is_same_v<K, Rational>) return rational();
        else return ratfunc();
    }

    template <ExactField K>
    K nonzero_scalar() {
        if constexpr (std::is_same_v<K, Rational>) return nonzero_rational();
        else return nonzero_ratfunc();
    }

    /// Polynomial in x of degree at most max_degree with small rational coefficients.
    template <ExactField K = Rational>
    Poly<K> poly(std::size_t max_degree) {
        std::vector<K> c(index(max_degree) + 1);
        for (auto& x : c) x = K(rational());
        return Poly<K>(std::move(c));
    }

    template <ExactField K>
    DividedSeries<K> series(std::size_t order, bool invertible = false) {
        std::vector<K> c(order + 1);
        for (auto& x : c) x = K(rational());
        if (invertible) c[0] = K(nonzero_rational());
        return DividedSeries<K>::from_divided(std::move(c));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline RatFunc Q(long p, long q = 1) { return RatFunc(Rational(p, q)); }
inline RatFunc q_sym() { return RatFunc::q(); }
inline RatFunc lambda_sym() { return RatFunc::lambda(); }

}  // namespace qfe::testing
