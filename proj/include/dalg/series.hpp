#ifndef DALG_SERIES_HPP
#define DALG_SERIES_HPP

// Truncated sequences f(0..N) over a coefficient algebra, in two flavors:
//
//   hurwitz: (fg)(n) = sum_k binom(n,k) f(k) g(n-k),   D(f)(n) = f(n+1)
//   power:   (fg)(n) = sum_k f(k) g(n-k),              D(f)(n) = (n+1) f(n+1)
//
// A series of order N knows indices 0..N. Products keep the order, each
// derivation consumes one index. Component n of any of the operations here
// depends only on components <= n (+1 for derivations), so the window is
// exact, not an approximation.

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <dalg/errors.hpp>
#include <dalg/free_diff.hpp>
#include <dalg/poly.hpp>
#include <dalg/scalars.hpp>

namespace dalg
{

enum class flavor { hurwitz, power };

inline const char *flavor_name(flavor f) { return f == flavor::hurwitz ? "hurwitz" : "power"; }

template <typename T>
class series
{
public:
    // The order-0 Hurwitz zero.
    series() : coeffs_(1, T{}), kind_(flavor::hurwitz) {}

    series(std::vector<T> coeffs, flavor kind) : coeffs_(std::move(coeffs)), kind_(kind)
    {
        if (coeffs_.empty()) {
            throw order_exhausted("a series needs at least the 0-th coefficient");
        }
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    flavor kind() const { return kind_; }
    const std::vector<T> &coeffs() const & { return coeffs_; }
    std::vector<T> coeffs() && { return std::move(coeffs_); }
    const T &operator[](std::size_t n) const { return coeffs_[n]; }

    // Component n, or order_exhausted when n is outside the window.
    const T &at(std::size_t n) const
    {
        if (n > order()) {
            throw order_exhausted("series of order " + std::to_string(order()) + " has no component "
                                  + std::to_string(n));
        }
        return coeffs_[n];
    }

    series truncated(std::size_t new_order) const
    {
        if (new_order > order()) {
            throw order_exhausted("cannot extend a series of order " + std::to_string(order()));
        }
        return series(std::vector<T>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(new_order) + 1),
                      kind_);
    }

    series with_kind(flavor k) const { return series(coeffs_, k); }

    friend bool operator==(const series &, const series &) = default;

private:
    std::vector<T> coeffs_;
    flavor kind_;
};

// Grid g[m][n] = f(m + n): the truncated comultiplication. Row m is a series.
template <typename T>
struct series_grid {
    std::vector<series<T>> rows;

    const T &at(std::size_t m, std::size_t n) const { return rows.at(m).at(n); }
    std::size_t row_count() const { return rows.size(); }

    series<T> column(std::size_t n) const
    {
        std::vector<T> out;
        for (const auto &r : rows) {
            out.push_back(r.at(n));
        }
        return series<T>(std::move(out), rows.front().kind());
    }
};

namespace detail
{

template <typename T>
void require_compatible(const series<T> &f, const series<T> &g)
{
    if (f.kind() != g.kind()) {
        throw flavor_mismatch(std::string("cannot combine ") + flavor_name(f.kind()) + " and " + flavor_name(g.kind())
                              + " series");
    }
    if (f.order() != g.order()) {
        throw order_mismatch("series orders differ: " + std::to_string(f.order()) + " vs "
                             + std::to_string(g.order()));
    }
}

template <typename T>
void require_flavor(const series<T> &f, flavor k)
{
    if (f.kind() != k) {
        throw flavor_mismatch(std::string("expected a ") + flavor_name(k) + " series");
    }
}

} // namespace detail

template <typename T>
series<T> sadd(const series<T> &f, const series<T> &g)
{
    detail::require_compatible(f, g);
    std::vector<T> out(f.coeffs());
    for (std::size_t n = 0; n <= f.order(); ++n) {
        out[n] = out[n] + g[n];
    }
    return series<T>(std::move(out), f.kind());
}

template <typename T>
series<T> sscale(const Rational &s, const series<T> &f)
{
    std::vector<T> out;
    out.reserve(f.order() + 1);
    for (const auto &c : f.coeffs()) {
        out.push_back(s * c);
    }
    return series<T>(std::move(out), f.kind());
}

template <typename T>
series<T> smul(const series<T> &f, const series<T> &g)
{
    detail::require_compatible(f, g);
    const bool weighted = f.kind() == flavor::hurwitz;
    std::vector<T> out(f.order() + 1, T{});
    for (std::size_t n = 0; n <= f.order(); ++n) {
        T acc{};
        for (std::size_t k = 0; k <= n; ++k) {
            T prod = f[k] * g[n - k];
            if (weighted) {
                prod = Rational(binom(n, k)) * prod;
            }
            acc = acc + prod;
        }
        out[n] = std::move(acc);
    }
    return series<T>(std::move(out), f.kind());
}

// (1, 0, ..., 0) in either flavor.
template <typename T = Rational>
series<T> sunit(std::size_t order, flavor kind)
{
    std::vector<T> out(order + 1, T{});
    out[0] = T(1);
    return series<T>(std::move(out), kind);
}

template <typename T = Rational>
series<T> szero(std::size_t order, flavor kind)
{
    return series<T>(std::vector<T>(order + 1, T{}), kind);
}

// Hurwitz: shift. Power: shift scaled by n+1 at slot n. The order drops by 1.
template <typename T>
series<T> sderive(const series<T> &f)
{
    if (f.order() == 0) {
        throw order_exhausted("cannot differentiate a series of order 0");
    }
    std::vector<T> out;
    out.reserve(f.order());
    for (std::size_t n = 0; n < f.order(); ++n) {
        if (f.kind() == flavor::hurwitz) {
            out.push_back(f[n + 1]);
        } else {
            out.push_back(Rational(static_cast<long>(n + 1)) * f[n + 1]);
        }
    }
    return series<T>(std::move(out), f.kind());
}

// True when both series have the same flavor and agree on every index both
// of them know.
template <typename T>
bool agree_on_window(const series<T> &f, const series<T> &g)
{
    if (f.kind() != g.kind()) {
        return false;
    }
    const auto n = std::min(f.order(), g.order());
    for (std::size_t i = 0; i <= n; ++i) {
        if (!(f[i] == g[i])) {
            return false;
        }
    }
    return true;
}

namespace detail
{

// The component recursion behind omega_eval and delta_eval:
//   e(q, 0)   = q evaluated at the 0-th components
//   e(q, k+1) = sum_{i<=k} w(k,i) sum_j e(dq/dx_j, i) * env(x_j)[k-i+1]
// Hurwitz: w(k,i) = binom(k,i).
// Power:   w(k,i) = (k-i+1)/(k+1), read off from the chain rule for the
//          scaled shift (k+1) c_{k+1} = sum_i c_i(dq/dx_j) (k-i+1) x_j[k-i+1].
//          With w = 1 the recursion coincides with the Hurwitz one up to
//          k = 1 and is not the Cauchy product from index 2 on.
template <typename T>
class component_evaluator
{
public:
    component_evaluator(const std::map<var_name, series<T>> &env, flavor kind) : env_(env), kind_(kind) {}

    T eval(const poly &q, std::size_t n)
    {
        auto key = std::make_pair(q, n);
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        T out{};
        if (n == 0) {
            for (const auto &[m, c] : q.terms()) {
                T t = T(1);
                for (const auto &[v, e] : m.factors()) {
                    const T &x0 = env_.at(v).at(0);
                    for (unsigned i = 0; i < e; ++i) {
                        t = t * x0;
                    }
                }
                out = out + c * t;
            }
        } else {
            const std::size_t k = n - 1;
            for (const auto &[x, dq] : partials(q)) {
                const auto &s = env_.at(x);
                for (std::size_t i = 0; i <= k; ++i) {
                    T term = eval(dq, i) * s.at(k - i + 1);
                    if (kind_ == flavor::hurwitz) {
                        term = Rational(binom(k, i)) * term;
                    } else {
                        term = Rational(Integer(static_cast<long>(k - i + 1)), Integer(static_cast<long>(k + 1)))
                               * term;
                    }
                    out = out + term;
                }
            }
        }
        memo_.emplace(std::move(key), out);
        return out;
    }

private:
    const std::map<var_name, poly> &partials(const poly &q)
    {
        auto it = partials_.find(q);
        if (it == partials_.end()) {
            it = partials_.emplace(q, derive(q).by_variable()).first;
        }
        return it->second;
    }

    const std::map<var_name, series<T>> &env_;
    flavor kind_;
    std::map<std::pair<poly, std::size_t>, T> memo_;
    std::map<poly, std::map<var_name, poly>> partials_;
};

template <typename T>
void require_env(const poly &p, const std::map<var_name, series<T>> &env, std::size_t n, flavor kind)
{
    for (const auto &v : p.variables()) {
        auto it = env.find(v);
        if (it == env.end()) {
            throw unbound_variable("no series bound to variable " + v);
        }
        require_flavor(it->second, kind);
        if (n > it->second.order()) {
            throw order_exhausted("component " + std::to_string(n) + " requested but " + v + " has order "
                                  + std::to_string(it->second.order()));
        }
    }
}

} // namespace detail

// Component n of p(env) in the Hurwitz ring, computed by the binomially
// weighted recursion over partial derivatives (memoized per call).
template <typename T>
T omega_eval(const poly &p, const std::map<var_name, series<T>> &env, std::size_t n)
{
    detail::require_env(p, env, n, flavor::hurwitz);
    detail::component_evaluator<T> ev(env, flavor::hurwitz);
    return ev.eval(p, n);
}

// Component n of p(env) in the power-series ring (Cauchy product), computed
// by the power-series analogue of the omega recursion.
template <typename T>
T delta_eval(const poly &p, const std::map<var_name, series<T>> &env, std::size_t n)
{
    detail::require_env(p, env, n, flavor::power);
    detail::component_evaluator<T> ev(env, flavor::power);
    return ev.eval(p, n);
}

// (a, D(a), ..., D^order(a)) as a Hurwitz series.
template <typename T, typename Derivation>
series<T> diamond(Derivation &&derivation, const T &a, std::size_t order)
{
    return series<T>(natural_map(std::forward<Derivation>(derivation), a, order), flavor::hurwitz);
}

// g[m][n] = f(m + n) for m <= rows, n <= order - rows.
template <typename T>
series_grid<T> comul(const series<T> &f, std::size_t rows)
{
    detail::require_flavor(f, flavor::hurwitz);
    if (rows > f.order()) {
        throw order_exhausted("comul needs rows <= order");
    }
    const std::size_t cols = f.order() - rows;
    series_grid<T> grid;
    for (std::size_t m = 0; m <= rows; ++m) {
        std::vector<T> row(f.coeffs().begin() + static_cast<std::ptrdiff_t>(m),
                           f.coeffs().begin() + static_cast<std::ptrdiff_t>(m + cols) + 1);
        grid.rows.emplace_back(std::move(row), flavor::hurwitz);
    }
    return grid;
}

// Power -> Hurwitz: component n multiplied by n!.
template <typename T>
series<T> psi(const series<T> &f)
{
    detail::require_flavor(f, flavor::power);
    std::vector<T> out;
    for (std::size_t n = 0; n <= f.order(); ++n) {
        out.push_back(Rational(factorial(n)) * f[n]);
    }
    return series<T>(std::move(out), flavor::hurwitz);
}

// Hurwitz -> power: component n divided by n!.
template <typename T>
series<T> psi_inv(const series<T> &f)
{
    detail::require_flavor(f, flavor::hurwitz);
    std::vector<T> out;
    for (std::size_t n = 0; n <= f.order(); ++n) {
        out.push_back(Rational(Integer(1), factorial(n)) * f[n]);
    }
    return series<T>(std::move(out), flavor::power);
}

// The cofree extension of a ring map f along a derivation D:
// (f(p), f(D p), ..., f(D^order p)).
template <typename T, typename U, typename Derivation>
series<U> colift(const std::function<U(const T &)> &f, Derivation &&derivation, const T &p, std::size_t order)
{
    std::vector<U> out;
    T current = p;
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0) {
            current = derivation(current);
        }
        out.push_back(f(current));
    }
    return series<U>(std::move(out), flavor::hurwitz);
}

} // namespace dalg

#endif
