#pragma once

/**
 * @file verify.hpp
 * @brief Registry of identities and the harness that checks them exactly.
 *
 * Each identity is a pair of independently constructed sides compared by
 * structural equality of canonical forms. Symbolic mode checks every (n, r)
 * in range over Q(q, lambda); numeric mode repeats the same checks at random
 * rational points (q, lambda), still in exact arithmetic.
 *
 * The registry is data: an identity id maps to a check routine, so new
 * identities need no harness change.
 */

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qfe/serialize.hpp"

namespace qfe {

struct CheckOutcome {
    bool pass = true;
    Json witness;  // populated on failure: inputs plus both sides

    static CheckOutcome ok() { return {}; }
};

template <ExactField K>
CheckOutcome expect_equal(const K& lhs, const K& rhs, const std::string& what, Json inputs = Json::object()) {
    if (lhs == rhs) return CheckOutcome::ok();
    inputs["what"] = what;
    inputs["lhs"] = to_json(lhs);
    inputs["rhs"] = to_json(rhs);
    return {false, std::move(inputs)};
}

template <ExactField K>
CheckOutcome expect_equal(const Poly<K>& lhs, const Poly<K>& rhs, const std::string& what,
                          Json inputs = Json::object()) {
    if (lhs == rhs) return CheckOutcome::ok();
    inputs["what"] = what;
    inputs["lhs"] = to_json(lhs);
    inputs["rhs"] = to_json(rhs);
    return {false, std::move(inputs)};
}

/// Lazily computed tables shared by the checks of one identity at one field point.
template <ExactField K>
class Workspace {
public:
    Workspace(QContext<K> ctx, std::size_t max_n, std::uint64_t seed)
        : ctx_(std::move(ctx)), order_(max_n + 2), rng_(seed) {}

    const QContext<K>& ctx() const noexcept { return ctx_; }
    std::size_t order() const noexcept { return order_; }
    std::mt19937_64& rng() noexcept { return rng_; }

    const K& lambda() const { return ctx_.lambda(); }
    K one() const { return K(Rational(1)); }

    const std::vector<K>& H() { return memo(h_, [&] { return frobenius_euler_numbers(ctx_, order_).values; }); }
    /// H^{(r)}_n for r >= 0; r = 0 is the Kronecker sequence.
    const std::vector<K>& H_r(unsigned r) {
        auto it = h_r_.find(r);
        if (it == h_r_.end())
            it = h_r_.emplace(r, frobenius_euler_numbers_order_r(ctx_, order_, r).values).first;
        return it->second;
    }
    const std::vector<K>& B() { return memo(b_, [&] { return q_bernoulli_numbers(ctx_, order_).values; }); }
    const std::vector<K>& E() { return memo(e_, [&] { return q_euler_numbers(ctx_, order_).values; }); }
    const std::vector<K>& B_r(unsigned r) {
        auto it = b_r_.find(r);
        if (it == b_r_.end()) it = b_r_.emplace(r, q_bernoulli_numbers_order_r(ctx_, order_, r).values).first;
        return it->second;
    }

    Poly<K> H_poly(std::size_t n) { return appell_poly(ctx_, H(), n); }
    Poly<K> H_r_poly(std::size_t n, unsigned r) { return appell_poly(ctx_, H_r(r), n); }
    Poly<K> B_poly(std::size_t n) { return appell_poly(ctx_, B(), n); }
    Poly<K> E_poly(std::size_t n) { return appell_poly(ctx_, E(), n); }
    Poly<K> B_r_poly(std::size_t n, unsigned r) { return appell_poly(ctx_, B_r(r), n); }

    /// Small random rational with numerator in [-9, 9] and denominator in [1, 9].
    Rational random_rational() {
        std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
        return Rational(num(rng_), den(rng_));
    }

    /// Random polynomial of exact degree n with small rational coefficients.
    Poly<K> random_poly(std::size_t n) {
        std::vector<K> c(n + 1);
        for (auto& x : c) x = K(random_rational());
        while (is_zero(c[n])) c[n] = K(random_rational());
        return Poly<K>(std::move(c));
    }

private:
    template <typename Fn>
    const std::vector<K>& memo(std::optional<std::vector<K>>& slot, Fn&& fn) {
        if (!slot) slot = fn();
        return *slot;
    }

    QContext<K> ctx_;
    std::size_t order_;
    std::mt19937_64 rng_;
    std::optional<std::vector<K>> h_, b_, e_;
    std::map<unsigned, std::vector<K>> h_r_, b_r_;
};

struct IdentityDef {
    std::string id;
    std::string statement;
    /// Smallest r to check; 0 means the identity does not involve r.
    unsigned min_r = 0;
    bool symbolic_only = false;
    std::function<CheckOutcome(Workspace<RatFunc>&, std::size_t, unsigned)> symbolic;
    std::function<CheckOutcome(Workspace<Rational>&, std::size_t, unsigned)> numeric;

    bool uses_r() const noexcept { return min_r > 0; }
};

/// Wraps a generic check (auto& workspace, n, r) for both fields.
template <typename Check>
IdentityDef make_identity(std::string id, std::string statement, unsigned min_r, bool symbolic_only, Check check) {
    IdentityDef d;
    d.id = std::move(id);
    d.statement = std::move(statement);
    d.min_r = min_r;
    d.symbolic_only = symbolic_only;
    d.symbolic = [check](Workspace<RatFunc>& w, std::size_t n, unsigned r) { return check(w, n, r); };
    d.numeric = [check](Workspace<Rational>& w, std::size_t n, unsigned r) { return check(w, n, r); };
    return d;
}

class IdentityRegistry {
public:
    void add(IdentityDef def) {
        auto it = std::find_if(defs_.begin(), defs_.end(), [&](const IdentityDef& d) { return d.id == def.id; });
        if (it != defs_.end()) *it = std::move(def);
        else defs_.push_back(std::move(def));
    }

    const IdentityDef& find(const std::string& id) const {
        for (const auto& d : defs_)
            if (d.id == id) return d;
        throw UnknownIdentity(id);
    }

    std::vector<std::string> ids() const {
        std::vector<std::string> out;
        for (const auto& d : defs_) out.push_back(d.id);
        return out;
    }

    const std::vector<IdentityDef>& defs() const noexcept { return defs_; }

    /// The catalog of identities shipped with the library.
    static IdentityRegistry builtin();

private:
    std::vector<IdentityDef> defs_;
};

namespace detail {

template <typename W>
auto kron(W& w, bool cond) {
    using K = std::remove_cvref_t<decltype(w.one())>;
    return cond ? K(Rational(1)) : K(Rational(0));
}

/// Coefficients of sum_k coef_k H^{(r)}_k(x) for an Appell sequence with numbers v:
/// (1-lambda)^{-r} sum_{m=0}^{n-k} sum_{l=0}^{r} sum_{i_1+..+i_l=m}
///   binom(r,l) (-lambda)^{r-l} multinom(m; i)_q binom(m+k,m)_q binom(n,m+k)_q v_{n-m-k}.
template <typename W, typename K>
std::vector<K> appell_in_order_r_basis(W& w, const std::vector<K>& v, std::size_t n, unsigned r) {
    const auto& ctx = w.ctx();
    const K one(Rational(1));
    K scale = one;
    for (unsigned i = 0; i < r; ++i) scale = scale * (one - w.lambda());
    // inner[m][l] = sum over weak compositions of m into l parts of multinom(m; i)_q
    std::vector<std::vector<K>> inner(n + 1, std::vector<K>(r + 1, K(Rational(0))));
    for (std::size_t m = 0; m <= n; ++m)
        for (unsigned l = 0; l <= r; ++l)
            for_each_weak_composition(m, l, [&](std::span<const std::size_t> parts) {
                inner[m][l] = inner[m][l] + q_multinomial(ctx, m, parts);
            });
    std::vector<K> coeffs(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        K acc(Rational(0));
        for (std::size_t m = 0; m + k <= n; ++m) {
            Rational binom_r(1);
            for (unsigned l = 0; l <= r; ++l) {
                K neg_lambda_pow = one;
                for (unsigned i = l; i < r; ++i) neg_lambda_pow = neg_lambda_pow * (-w.lambda());
                K term = K(binom_r) * neg_lambda_pow * inner[m][l] * ctx.q_binomial(m + k, static_cast<long>(m)) *
                         ctx.q_binomial(n, static_cast<long>(m + k)) * v[n - m - k];
                acc = acc + term;
                binom_r = binom_r * Rational(static_cast<long>(r - l)) / Rational(static_cast<long>(l + 1));
            }
        }
        coeffs[k] = acc / scale;
    }
    return coeffs;
}

template <typename W, typename K>
Poly<K> combine(const std::vector<K>& coeffs, const std::vector<Poly<K>>& basis) {
    Poly<K> out;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (!is_zero(coeffs[k])) out += basis[k].scaled(coeffs[k]);
    return out;
}

template <typename W>
auto basis_polys(W& w, std::size_t n, unsigned r) {
    using K = std::remove_cvref_t<decltype(w.one())>;
    std::vector<Poly<K>> out;
    for (std::size_t k = 0; k <= n; ++k) out.push_back(r == 1 ? w.H_poly(k) : w.H_r_poly(k, r));
    return out;
}

}  // namespace detail

inline IdentityRegistry IdentityRegistry::builtin() {
    IdentityRegistry reg;
    using detail::kron;

    reg.add(make_identity("fe-boundary", "H_0(lambda) = 1 and H_n(1|lambda) - lambda H_n(lambda) = (1-lambda) delta_{0,n}",
                          0, false, [](auto& w, std::size_t n, unsigned) {
                              if (n == 0) {
                                  auto c = expect_equal(w.H()[0], w.one(), "H_0");
                                  if (!c.pass) return c;
                              }
                              auto lhs = w.H_poly(n).eval(w.one()) - w.lambda() * w.H()[n];
                              auto rhs = (w.one() - w.lambda()) * kron(w, n == 0);
                              return expect_equal(lhs, rhs, "H_n(1) - lambda H_n");
                          }));

    reg.add(make_identity("operator-form",
                          "H_n(x|lambda) = ((1-lambda)/(e_q(t)-lambda)) x^n and D_q H_n = [n]_q H_{n-1}", 0, false,
                          [](auto& w, std::size_t n, unsigned) {
                              const auto& ctx = w.ctx();
                              using K = std::remove_cvref_t<decltype(w.one())>;
                              auto op = series_inverse(ctx, frobenius_kernel(ctx, n));
                              auto lhs = apply_operator(ctx, op, Poly<K>::monomial(w.one(), n));
                              auto c = expect_equal(lhs, w.H_poly(n), "operator applied to x^n");
                              if (!c.pass) return c;
                              Poly<K> shifted = n == 0 ? Poly<K>() : w.H_poly(n - 1).scaled(ctx.q_int(n));
                              return expect_equal(q_derivative(ctx, w.H_poly(n)), shifted, "D_q H_n");
                          }));

    reg.add(make_identity("fe-recurrence", "H_n = (1/(lambda-1)) sum_{l<n} binom(n,l)_q H_l agrees with series inversion",
                          0, false, [](auto& w, std::size_t n, unsigned) {
                              auto rec = frobenius_euler_numbers_by_recurrence(w.ctx(), n).values;
                              return expect_equal(rec[n], w.H()[n], "recurrence vs inversion");
                          }));

    reg.add(make_identity("fe-integral-functional", "<(e_q(t)-1)/t | H_n(x|lambda)> = int_0^1 H_n(u|lambda) d_q u", 0,
                          false, [](auto& w, std::size_t n, unsigned) {
                              auto [lhs, rhs] = functional_bernoulli_identity(w.ctx(), n);
                              return expect_equal(lhs, rhs, "functional vs Jackson integral");
                          }));

    reg.add(make_identity("fe-integral-shift",
                          "int_x^{x+y} H_n(u|lambda) d_q u = (H_{n+1}(x+y|lambda) - H_{n+1}(x|lambda)) / [n+1]_q", 0,
                          false, [](auto& w, std::size_t n, unsigned) {
                              using K = std::remove_cvref_t<decltype(w.one())>;
                              K x0(w.random_rational()), y0(w.random_rational());
                              K lhs = q_integral(w.ctx(), w.H_poly(n), x0, x0 + y0);
                              auto h1 = w.H_poly(n + 1);
                              K rhs = (h1.eval(x0 + y0) - h1.eval(x0)) / w.ctx().q_int(n + 1);
                              return expect_equal(lhs, rhs, "integral over [x, x+y]",
                                                  Json{{"x", to_json(x0)}, {"y", to_json(y0)}});
                          }));

    reg.add(make_identity("orthogonality",
                          "<((e_q(t)-lambda)/(1-lambda))^r t^k | H^{(r)}_n(x|lambda)> = [n]_q! delta_{n,k} for all k <= max n",
                          1, false, [](auto& w, std::size_t n, unsigned r) {
                              const auto& ctx = w.ctx();
                              const std::size_t order = w.order();
                              auto g_r = series_pow(ctx, frobenius_kernel(ctx, order), r);
                              auto h = w.H_r_poly(n, r);
                              for (std::size_t k = 0; k + 2 <= order; ++k) {
                                  auto lhs = apply_functional(series_mul(ctx, g_r, decltype(g_r)::t_power(ctx, k, order)), h);
                                  auto rhs = ctx.q_factorial(n) * kron(w, n == k);
                                  auto c = expect_equal(lhs, rhs, "pairing", Json{{"k", k}});
                                  if (!c.pass) return c;
                              }
                              return CheckOutcome::ok();
                          }));

    reg.add(make_identity("basis-roundtrip", "reconstruct(expand(p)) = p in the H^{(r)} basis for a random p of degree n",
                          1, false, [](auto& w, std::size_t n, unsigned r) {
                              const auto& ctx = w.ctx();
                              auto p = w.random_poly(n);
                              Json in{{"p", to_json(p)}};
                              if (r == 1) {
                                  auto e1 = expand_in_fe(ctx, p);
                                  auto c = expect_equal(reconstruct(ctx, e1), p, "order-1 round trip", in);
                                  if (!c.pass) return c;
                                  auto er = expand_in_fe_order_r(ctx, p, 1);
                                  for (std::size_t k = 0; k <= n; ++k) {
                                      c = expect_equal(e1.coeffs[k], er.coeffs[k], "order reduction", in);
                                      if (!c.pass) return c;
                                  }
                              }
                              return expect_equal(reconstruct(ctx, expand_in_fe_order_r(ctx, p, r)), p,
                                                  "order-r round trip", in);
                          }));

    reg.add(make_identity("bernoulli-in-fe-basis",
                          "B_n(x) = (1/(1-lambda)) sum_k binom(n,k)_q (B_{n-k}(1) - lambda B_{n-k}) H_k(x|lambda)", 0,
                          false, [](auto& w, std::size_t n, unsigned) {
                              using K = std::remove_cvref_t<decltype(w.one())>;
                              const auto& ctx = w.ctx();
                              std::vector<K> coeffs(n + 1);
                              for (std::size_t k = 0; k <= n; ++k) {
                                  auto bp = w.B_poly(n - k);
                                  coeffs[k] = ctx.q_binomial(n, static_cast<long>(k)) *
                                              (bp.eval(w.one()) - w.lambda() * w.B()[n - k]) / (w.one() - w.lambda());
                              }
                              auto rhs = detail::combine<decltype(w)>(coeffs, detail::basis_polys(w, n, 1));
                              auto c = expect_equal(w.B_poly(n), rhs, "B_n(x) expansion");
                              if (!c.pass) return c;
                              auto e = expand_in_fe(ctx, w.B_poly(n));
                              for (std::size_t k = 0; k <= n; ++k) {
                                  c = expect_equal(e.coeffs[k], coeffs[k], "coefficient", Json{{"k", k}});
                                  if (!c.pass) return c;
                              }
                              return c;
                          }));

    reg.add(make_identity("monomial-coefficients",
                          "x^n = sum_k C_k H_k with C_k = binom(n,k)_q/(1-lambda) - lambda/(1-lambda) binom(n,k)_q 0^{n-k}",
                          0, false, [](auto& w, std::size_t n, unsigned) {
                              using K = std::remove_cvref_t<decltype(w.one())>;
                              const auto& ctx = w.ctx();
                              auto e = expand_in_fe(ctx, Poly<K>::monomial(w.one(), n));
                              for (std::size_t k = 0; k <= n; ++k) {
                                  K b = ctx.q_binomial(n, static_cast<long>(k));
                                  K zero_pow = kron(w, k == n);  // 0^0 = 1
                                  K expected = b / (w.one() - w.lambda()) - w.lambda() / (w.one() - w.lambda()) * b * zero_pow;
                                  auto c = expect_equal(e.coeffs[k], expected, "C_k", Json{{"k", k}});
                                  if (!c.pass) return c;
                              }
                              return CheckOutcome::ok();
                          }));

    reg.add(make_identity("monomial-in-fe-basis",
                          "x^n = (1/(1-lambda)) sum_{k<n} binom(n,k)_q H_k(x|lambda) + H_n(x|lambda)", 0, false,
                          [](auto& w, std::size_t n, unsigned) {
                              using K = std::remove_cvref_t<decltype(w.one())>;
                              const auto& ctx = w.ctx();
                              Poly<K> rhs = w.H_poly(n);
                              for (std::size_t k = 0; k < n; ++k)
                                  rhs += w.H_poly(k).scaled(ctx.q_binomial(n, static_cast<long>(k)) / (w.one() - w.lambda()));
                              return expect_equal(Poly<K>::monomial(w.one(), n), rhs, "x^n expansion");
                          }));

    reg.add(make_identity("euler-in-fe-basis",
                          "E_n(x) = (1/(1-lambda)) sum_k binom(n,k)_q (E_{n-k}(1) - lambda E_{n-k}) H_k(x|lambda)", 0,
                          false, [](auto& w, std::size_t n, unsigned) {
                              using K = std::remove_cvref_t<decltype(w.one())>;
                              const auto& ctx = w.ctx();
                              std::vector<K> coeffs(n + 1);
                              for (std::size_t k = 0; k <= n; ++k) {
                                  auto ep = w.E_poly(n - k);
                                  coeffs[k] = ctx.q_binomial(n, static_cast<long>(k)) *
                                              (ep.eval(w.one()) - w.lambda() * w.E()[n - k]) / (w.one() - w.lambda());
                              }
                              auto rhs = detail::combine<decltype(w)>(coeffs, detail::basis_polys(w, n, 1));
                              return expect_equal(w.E_poly(n), rhs, "E_n(x) expansion");
                          }));

    reg.add(make_identity("order-r-dual-expansion",
                          "H^{(r)} basis coefficients: umbral functional route = weak-composition route", 1, false,
                          [](auto& w, std::size_t n, unsigned r) {
                              const auto& ctx = w.ctx();
                              auto p = w.random_poly(n);
                              auto a = expand_in_fe_order_r(ctx, p, r);
                              auto b = expand_in_fe_order_r_multinomial(ctx, p, r);
                              for (std::size_t k = 0; k <= n; ++k) {
                                  auto c = expect_equal(a.coeffs[k], b.coeffs[k], "C^r_k",
                                                        Json{{"k", k}, {"p", to_json(p)}});
                                  if (!c.pass) return c;
                              }
                              return CheckOutcome::ok();
                          }));

    reg.add(make_identity("order-r-convolution",
                          "H^{(r)}_n = sum_{i_1+..+i_r=n} multinom(n; i)_q H_{i_1} .. H_{i_r}", 1, false,
                          [](auto& w, std::size_t n, unsigned r) {
                              auto conv = frobenius_euler_numbers_order_r_by_convolution(w.ctx(), n, r).values;
                              return expect_equal(w.H_r(r)[n], conv[n], "series power vs convolution");
                          }));

    reg.add(make_identity("order-r-boundary",
                          "H^{(r)}_n(1|lambda) - lambda H^{(r)}_n(lambda) = (1-lambda) H^{(r-1)}_n(lambda)", 1, false,
                          [](auto& w, std::size_t n, unsigned r) {
                              auto lhs = w.H_r_poly(n, r).eval(w.one()) - w.lambda() * w.H_r(r)[n];
                              auto rhs = (w.one() - w.lambda()) * w.H_r(r - 1)[n];
                              return expect_equal(lhs, rhs, "order reduction at x = 1");
                          }));

    reg.add(make_identity("order-r-in-fe-basis",
                          "H^{(r)}_n(x|lambda) = sum_k binom(n,k)_q H^{(r-1)}_{n-k}(lambda) H_k(x|lambda)", 1, false,
                          [](auto& w, std::size_t n, unsigned r) {
                              using K = std::remove_cvref_t<decltype(w.one())>;
                              const auto& ctx = w.ctx();
                              std::vector<K> coeffs(n + 1);
                              for (std::size_t k = 0; k <= n; ++k)
                                  coeffs[k] = ctx.q_binomial(n, static_cast<long>(k)) * w.H_r(r - 1)[n - k];
                              BasisExpansion<K> e{{FamilyKind::QFrobeniusEuler, 1}, coeffs};
                              return expect_equal(w.H_r_poly(n, r), reconstruct(ctx, e), "H^{(r)}_n expansion");
                          }));

    reg.add(make_identity("fe-in-order-r-basis",
                          "H_n(x|lambda) in the H^{(r)} basis via the closed multinomial coefficient formula", 1, false,
                          [](auto& w, std::size_t n, unsigned r) {
                              auto coeffs = detail::appell_in_order_r_basis(w, w.H(), n, r);
                              auto rhs = detail::combine<decltype(w)>(coeffs, detail::basis_polys(w, n, r));
                              auto c = expect_equal(w.H_poly(n), rhs, "H_n(x) expansion");
                              if (!c.pass) return c;
                              auto e = expand_in_fe_order_r(w.ctx(), w.H_poly(n), r);
                              for (std::size_t k = 0; k <= n; ++k) {
                                  c = expect_equal(e.coeffs[k], coeffs[k], "coefficient", Json{{"k", k}});
                                  if (!c.pass) return c;
                              }
                              return c;
                          }));

    reg.add(make_identity("bernoulli-order-r-in-order-r-basis",
                          "B^{(r)}_n(x) in the H^{(r)} basis via the closed multinomial coefficient formula "
                          "(B^{(r)} from (t/(e_q(t)-1))^r e_q(xt))",
                          1, false, [](auto& w, std::size_t n, unsigned r) {
                              auto coeffs = detail::appell_in_order_r_basis(w, w.B_r(r), n, r);
                              auto rhs = detail::combine<decltype(w)>(coeffs, detail::basis_polys(w, n, r));
                              return expect_equal(w.B_r_poly(n, r), rhs, "B^{(r)}_n(x) expansion");
                          }));

    reg.add(make_identity("euler-degeneration", "H_n(x|-1) = E_n(x)", 0, false, [](auto& w, std::size_t n, unsigned) {
        using K = std::remove_cvref_t<decltype(w.one())>;
        QContext<K> at_minus_one(w.ctx().q(), K(Rational(-1)));
        return expect_equal(frobenius_euler_poly(at_minus_one, n), w.E_poly(n), "lambda = -1");
    }));

    reg.add(make_identity("bernoulli-boundary", "B_n(1) - B_n = delta_{n,1}", 0, false,
                          [](auto& w, std::size_t n, unsigned) {
                              return expect_equal(w.B_poly(n).eval(w.one()) - w.B()[n], kron(w, n == 1), "B_n(1) - B_n");
                          }));

    reg.add(make_identity("euler-boundary", "E_n(1) + E_n = 2 delta_{n,0}", 0, false,
                          [](auto& w, std::size_t n, unsigned) {
                              using K = std::remove_cvref_t<decltype(w.one())>;
                              return expect_equal(w.E_poly(n).eval(w.one()) + w.E()[n], K(Rational(2)) * kron(w, n == 0),
                                                  "E_n(1) + E_n");
                          }));

    reg.add(make_identity("carlitz-dual-route",
                          "beta_n(x) closed form = sum_l binom(n,l) q^{lx} beta_l [x]_q^{n-l}", 0, false,
                          [](auto& w, std::size_t n, unsigned) {
                              return expect_equal(carlitz_poly(w.ctx(), n).in_y, carlitz_poly_via_numbers(w.ctx(), n).in_y,
                                                  "y-coefficients");
                          }));

    reg.add(make_identity("carlitz-basis-solve",
                          "sum_k C_k beta_k(x) = p([x]_q) for the triangular-solve coefficients of a random p", 0, false,
                          [](auto& w, std::size_t n, unsigned) {
                              const auto& ctx = w.ctx();
                              using K = std::remove_cvref_t<decltype(w.one())>;
                              QBracketPoly<K> p{w.random_poly(n)};
                              auto c = expand_in_carlitz_basis(ctx, p);
                              return expect_equal(reconstruct_carlitz(ctx, c), to_y_form(ctx, p), "reconstruction",
                                                  Json{{"p", to_json(p.in_bracket)}});
                          }));

    reg.add(make_identity("carlitz-classical-limit", "beta_{n,q} at q = 1 equals the classical Bernoulli number B_n", 0,
                          true, [](auto& w, std::size_t n, unsigned) {
                              using K = std::remove_cvref_t<decltype(w.one())>;
                              if constexpr (std::is_same_v<K, RatFunc>) {
                                  auto beta = carlitz_numbers(w.ctx(), n);
                                  return expect_equal(beta[n].evaluate(Rational(1), Rational(0)),
                                                      classical_bernoulli(n)[n], "q -> 1");
                              } else {
                                  return CheckOutcome::ok();
                              }
                          }));

    reg.add(make_identity("bernoulli-classical-limit", "B_{n,q} at q = 1 equals the classical Bernoulli number B_n", 0,
                          true, [](auto& w, std::size_t n, unsigned) {
                              using K = std::remove_cvref_t<decltype(w.one())>;
                              if constexpr (std::is_same_v<K, RatFunc>) {
                                  return expect_equal(w.B()[n].evaluate(Rational(1), Rational(0)),
                                                      classical_bernoulli(n)[n], "q -> 1");
                              } else {
                                  return CheckOutcome::ok();
                              }
                          }));
    return reg;
}

// ---------------------------------------------------------------------------
// Harness

struct VerifyOptions {
    std::size_t max_n = 6;
    unsigned max_r = 3;
    FieldMode mode = FieldMode::SymbolicQLambda;
    std::size_t trials = 5;  // numeric mode: random (q, lambda) points per identity
    std::uint64_t seed = 1;
    unsigned threads = 0;    // 0: hardware concurrency
};

struct VerificationReport {
    std::string identity;
    std::size_t n = 0;
    std::optional<unsigned> r;
    FieldMode mode = FieldMode::SymbolicQLambda;
    std::optional<std::size_t> trial;
    std::optional<std::pair<Rational, Rational>> point;  // (q, lambda) in numeric mode
    bool pass = true;
    Json witness;
    double elapsed_ms = 0.0;
};

inline Json to_json(const VerificationReport& rep) {
    Json params{{"n", rep.n}, {"mode", rep.mode == FieldMode::SymbolicQLambda ? "symbolic" : "numeric"}};
    params["r"] = rep.r ? Json(*rep.r) : Json(nullptr);
    if (rep.trial) params["trial"] = *rep.trial;
    if (rep.point) params["point"] = Json{{"q", rep.point->first.str()}, {"lambda", rep.point->second.str()}};
    Json j{{"identity", rep.identity},
           {"params", params},
           {"status", rep.pass ? "ExactPass" : "Fail"},
           {"elapsed_ms", rep.elapsed_ms}};
    if (!rep.pass) j["witness"] = rep.witness;
    return j;
}

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, const std::string& id, std::uint64_t trial) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : id) h = (h ^ c) * 1099511628211ULL;
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                      static_cast<std::uint32_t>(trial)};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

/// Random numeric field point with q not in {1, -1} and lambda != 1.
inline std::pair<Rational, Rational> random_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    auto draw = [&] { return Rational(num(rng), den(rng)); };
    Rational q = draw();
    while (q == Rational(1) || q == Rational(-1)) q = draw();
    Rational lambda = draw();
    while (lambda == Rational(1)) lambda = draw();
    return {q, lambda};
}

template <ExactField K, typename CheckFn>
void run_block(const IdentityDef& def, Workspace<K>& ws, const VerifyOptions& opt, CheckFn& check,
               VerificationReport base, std::vector<VerificationReport>& out) {
    unsigned r_lo = def.uses_r() ? def.min_r : 1;
    unsigned r_hi = def.uses_r() ? std::max(opt.max_r, def.min_r) : 1;
    for (unsigned r = r_lo; r <= r_hi; ++r) {
        for (std::size_t n = 0; n <= opt.max_n; ++n) {
            VerificationReport rep = base;
            rep.n = n;
            if (def.uses_r()) rep.r = r;
            auto t0 = std::chrono::steady_clock::now();
            CheckOutcome outcome;
            try {
                outcome = check(ws, n, r);
            } catch (const Error& e) {
                outcome = {false, Json{{"error", e.what()}}};
            }
            rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            rep.pass = outcome.pass;
            if (!outcome.pass) {
                rep.witness = std::move(outcome.witness);
                rep.witness["n"] = n;
                if (def.uses_r()) rep.witness["r"] = r;
            }
            out.push_back(std::move(rep));
        }
    }
}

/// One job: an identity in symbolic mode, or an identity at one numeric trial point.
inline std::vector<VerificationReport> run_job(const IdentityDef& def, const VerifyOptions& opt, std::size_t trial) {
    std::vector<VerificationReport> out;
    VerificationReport base;
    base.identity = def.id;
    base.mode = opt.mode;
    std::uint64_t seed = mix_seed(opt.seed, def.id, trial);
    if (opt.mode == FieldMode::SymbolicQLambda) {
        Workspace<RatFunc> ws(symbolic_context(), opt.max_n, seed);
        run_block(def, ws, opt, def.symbolic, base, out);
    } else {
        std::mt19937_64 point_rng(seed);
        auto [q, lambda] = random_point(point_rng);
        base.trial = trial;
        base.point = std::make_pair(q, lambda);
        Workspace<Rational> ws(numeric_context(q, lambda), opt.max_n, point_rng());
        run_block(def, ws, opt, def.numeric, base, out);
    }
    return out;
}

}  // namespace detail

/// Checks one identity over the configured range.
inline std::vector<VerificationReport> verify_identity(const IdentityRegistry& reg, const std::string& id,
                                                       const VerifyOptions& opt) {
    const auto& def = reg.find(id);
    std::vector<VerificationReport> out;
    if (opt.mode == FieldMode::NumericRational && def.symbolic_only) return out;
    std::size_t jobs = opt.mode == FieldMode::SymbolicQLambda ? 1 : opt.trials;
    for (std::size_t t = 0; t < jobs; ++t) {
        auto part = detail::run_job(def, opt, t);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

/// Checks a list of identities (empty list: the whole registry), in parallel.
/// Reports come back in registry order, independent of scheduling.
inline std::vector<VerificationReport> verify_suite(const IdentityRegistry& reg, std::vector<std::string> ids,
                                                    const VerifyOptions& opt) {
    if (ids.empty()) ids = reg.ids();
    struct Job {
        const IdentityDef* def;
        std::size_t trial;
    };
    std::vector<Job> jobs;
    for (const auto& id : ids) {
        const auto& def = reg.find(id);
        if (opt.mode == FieldMode::NumericRational && def.symbolic_only) continue;
        std::size_t trials = opt.mode == FieldMode::SymbolicQLambda ? 1 : opt.trials;
        for (std::size_t t = 0; t < trials; ++t) jobs.push_back({&def, t});
    }
    std::vector<std::vector<VerificationReport>> results(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = detail::run_job(*jobs[i].def, opt, jobs[i].trial);
    };
    unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::vector<VerificationReport> out;
    for (auto& r : results) out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    return out;
}

inline bool all_pass(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.pass; });
}

}  // namespace qfe
