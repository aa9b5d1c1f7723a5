#ifndef DALG_DIFF_LAWS_HPP
#define DALG_DIFF_LAWS_HPP

// Seeded, deterministic checks of the derivation laws against any
// diff_carrier. Each trial draws from its own stream rng.split(trial), so a
// (seed, trials) pair always reproduces the same report.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <dalg/carrier.hpp>
#include <dalg/poly.hpp>
#include <dalg/rng.hpp>

namespace dalg
{

struct counterexample {
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string lhs;
    std::string rhs;
};

struct law_report {
    std::string law;
    std::string carrier;
    std::size_t trials = 0;
    bool pass = true;
    // Set when a precondition failed and the law itself was not evaluated.
    bool skipped = false;
    std::uint64_t seed = 0;
    std::optional<counterexample> failure;
    std::string note;

    void fail(counterexample cex)
    {
        if (!failure) {
            failure = std::move(cex);
            pass = false;
        }
    }
};

namespace detail
{

template <typename T>
counterexample make_cex(const diff_carrier<T> &c, std::vector<std::pair<std::string, T>> inputs, const T &lhs,
                        const T &rhs)
{
    counterexample cex;
    for (auto &[name, v] : inputs) {
        cex.inputs.emplace_back(name, c.show(v));
    }
    cex.lhs = c.show(lhs);
    cex.rhs = c.show(rhs);
    return cex;
}

inline law_report start(std::string law, const std::string &carrier, std::uint64_t seed)
{
    law_report r;
    r.law = std::move(law);
    r.carrier = carrier;
    r.seed = seed;
    return r;
}

// Variables X1..Xm used by the sampled outer polynomials.
inline std::vector<var_name> outer_vars(std::size_t m)
{
    std::vector<var_name> out;
    for (std::size_t i = 1; i <= m; ++i) {
        out.push_back("X" + std::to_string(i));
    }
    return out;
}

} // namespace detail

// Random polynomial over `vars`: up to max_terms terms of total degree at most
// max_degree, coefficients p/q with |p| <= 9, 1 <= q <= 4.
inline poly random_poly(splitmix64 &rng, const std::vector<var_name> &vars, std::size_t max_terms,
                        unsigned max_degree)
{
    poly p;
    const auto n_terms = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_terms)));
    for (std::size_t t = 0; t < n_terms; ++t) {
        const auto deg = static_cast<unsigned>(rng.uniform(0, max_degree));
        std::vector<monomial::factor> factors;
        for (unsigned i = 0; i < deg; ++i) {
            factors.emplace_back(vars[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(vars.size()) - 1))], 1);
        }
        p.add_term(monomial(std::move(factors)), rng.small_nonzero_rational());
    }
    return p;
}

// D(1) = 0. A single deterministic check.
template <typename T>
law_report check_constant_rule(const diff_carrier<T> &c, std::size_t trials, std::uint64_t seed)
{
    auto r = detail::start("constant_rule", c.name, seed);
    r.trials = trials == 0 ? 0 : 1;
    const T lhs = c.derive(c.one);
    if (!c.equal(lhs, c.zero)) {
        r.fail(detail::make_cex<T>(c, {{"a", c.one}}, lhs, c.zero));
    }
    return r;
}

// D(ab) = a D(b) + D(a) b.
template <typename T>
law_report check_leibniz(const diff_carrier<T> &c, std::size_t trials, std::uint64_t seed)
{
    auto r = detail::start("leibniz", c.name, seed);
    r.trials = trials;
    const splitmix64 root(seed);
    for (std::size_t t = 0; t < trials && r.pass; ++t) {
        auto rng = root.split(t);
        const T a = c.sample(rng, 4);
        const T b = c.sample(rng, 4);
        const T lhs = c.derive(c.mul(a, b));
        const T rhs = c.add(c.mul(a, c.derive(b)), c.mul(c.derive(a), b));
        if (!c.equal(lhs, rhs)) {
            r.fail(detail::make_cex<T>(c, {{"a", a}, {"b", b}}, lhs, rhs));
        }
    }
    return r;
}

// D^n(ab) = sum_k binom(n,k) D^k(a) D^(n-k)(b) for every n <= n_max.
template <typename T>
law_report check_higher_leibniz(const diff_carrier<T> &c, std::size_t n_max, std::size_t trials, std::uint64_t seed)
{
    auto r = detail::start("higher_leibniz", c.name, seed);
    r.trials = trials;
    r.note = "n <= " + std::to_string(n_max);
    const splitmix64 root(seed);
    for (std::size_t t = 0; t < trials && r.pass; ++t) {
        auto rng = root.split(t);
        const T a = c.sample(rng, 3);
        const T b = c.sample(rng, 3);
        auto da = std::vector<T>{a};
        auto db = std::vector<T>{b};
        for (std::size_t k = 1; k <= n_max; ++k) {
            da.push_back(c.derive(da.back()));
            db.push_back(c.derive(db.back()));
        }
        T dab = c.mul(a, b);
        for (std::size_t n = 0; n <= n_max && r.pass; ++n) {
            if (n > 0) {
                dab = c.derive(dab);
            }
            T rhs = c.zero;
            for (std::size_t k = 0; k <= n; ++k) {
                rhs = c.add(rhs, c.scale(Rational(binom(n, k)), c.mul(da[k], db[n - k])));
            }
            if (!c.equal(dab, rhs)) {
                auto cex = detail::make_cex<T>(c, {{"a", a}, {"b", b}}, dab, rhs);
                cex.inputs.emplace_back("n", std::to_string(n));
                r.fail(std::move(cex));
            }
        }
    }
    return r;
}

// Both sides of the higher-order chain rule at one n:
//   D^(n+1)(p(a)) and sum_k binom(n,k) sum_j D^k((dp/dx_j)(a)) D^(n-k+1)(a_j).
template <typename T>
std::pair<T, T> faa_di_bruno_sides(const std::map<var_name, T> &env, const poly &p, std::size_t n,
                                   const diff_carrier<T> &c)
{
    const T lhs = c.derive_n(evaluate(p, env, c), n + 1);
    T rhs = c.zero;
    for (const auto &[x, dp] : derive(p).by_variable()) {
        const T inner = evaluate(dp, env, c);
        std::vector<T> da{env.at(x)};
        for (std::size_t j = 1; j <= n + 1; ++j) {
            da.push_back(c.derive(da.back()));
        }
        T dk_inner = inner;
        for (std::size_t k = 0; k <= n; ++k) {
            if (k > 0) {
                dk_inner = c.derive(dk_inner);
            }
            const T term = c.mul(dk_inner, da[n - k + 1]);
            rhs = c.add(rhs, c.scale(Rational(binom(n, k)), term));
        }
    }
    return {lhs, rhs};
}

namespace detail
{

template <typename T>
std::vector<std::pair<std::string, T>> env_inputs(const std::map<var_name, T> &env)
{
    std::vector<std::pair<std::string, T>> out;
    for (const auto &[x, a] : env) {
        out.emplace_back(x, a);
    }
    return out;
}

inline std::string poly_summary(const poly &p)
{
    std::string s;
    for (const auto &[m, c] : p.terms()) {
        if (!s.empty()) {
            s += " + ";
        }
        s += c.str();
        for (const auto &[v, e] : m.factors()) {
            s += "*" + v + (e > 1 ? "^" + std::to_string(e) : "");
        }
    }
    return s.empty() ? "0" : s;
}

} // namespace detail

// Faa di Bruno for 0 <= n < n_max on one (env, p) instance.
template <typename T>
law_report check_faa_di_bruno(const std::map<var_name, T> &env, const poly &p, std::size_t n_max,
                              const diff_carrier<T> &c)
{
    require_bound(p, env);
    auto r = detail::start("faa_di_bruno", c.name, 0);
    r.trials = 1;
    for (std::size_t n = 0; n < n_max && r.pass; ++n) {
        auto [lhs, rhs] = faa_di_bruno_sides(env, p, n, c);
        if (!c.equal(lhs, rhs)) {
            auto cex = detail::make_cex<T>(c, detail::env_inputs(env), lhs, rhs);
            cex.inputs.emplace_back("p", detail::poly_summary(p));
            cex.inputs.emplace_back("n", std::to_string(n));
            r.fail(std::move(cex));
        }
    }
    return r;
}

// D(p(a)) = sum_j (dp/dx_j)(a) D(a_j).
template <typename T>
std::pair<T, T> chain_rule_sides(const std::map<var_name, T> &env, const poly &p, const diff_carrier<T> &c)
{
    const T lhs = c.derive(evaluate(p, env, c));
    T rhs = c.zero;
    for (const auto &[x, dp] : derive(p).by_variable()) {
        rhs = c.add(rhs, c.mul(evaluate(dp, env, c), c.derive(env.at(x))));
    }
    return {lhs, rhs};
}

template <typename T>
law_report check_chain_rule(const std::map<var_name, T> &env, const poly &p, const diff_carrier<T> &c)
{
    require_bound(p, env);
    auto r = detail::start("chain_rule", c.name, 0);
    r.trials = 1;
    auto [lhs, rhs] = chain_rule_sides(env, p, c);
    if (!c.equal(lhs, rhs)) {
        auto cex = detail::make_cex<T>(c, detail::env_inputs(env), lhs, rhs);
        cex.inputs.emplace_back("p", detail::poly_summary(p));
        r.fail(std::move(cex));
    }
    return r;
}

namespace detail
{

// A random outer polynomial over X1..X3 (degree <= 3) and carrier values for
// its variables.
template <typename T>
std::pair<poly, std::map<var_name, T>> sample_instance(const diff_carrier<T> &c, splitmix64 &rng)
{
    const auto vars = outer_vars(3);
    poly p = random_poly(rng, vars, 4, 3);
    std::map<var_name, T> env;
    for (const auto &x : vars) {
        env.emplace(x, c.sample(rng, 2));
    }
    return {p, env};
}

template <typename T>
law_report merge_random(std::string law, const diff_carrier<T> &c, std::size_t trials, std::uint64_t seed,
                        const std::function<law_report(const poly &, const std::map<var_name, T> &)> &one)
{
    auto r = start(std::move(law), c.name, seed);
    r.trials = trials;
    const splitmix64 root(seed);
    for (std::size_t t = 0; t < trials && r.pass; ++t) {
        auto rng = root.split(t);
        auto [p, env] = sample_instance(c, rng);
        auto single = one(p, env);
        if (!single.pass) {
            r.fail(*single.failure);
        }
    }
    return r;
}

} // namespace detail

template <typename T>
law_report check_chain_rule_random(const diff_carrier<T> &c, std::size_t trials, std::uint64_t seed)
{
    return detail::merge_random<T>("chain_rule", c, trials, seed, [&](const poly &p, const std::map<var_name, T> &env) {
        return check_chain_rule(env, p, c);
    });
}

template <typename T>
law_report check_faa_di_bruno_random(const diff_carrier<T> &c, std::size_t n_max, std::size_t trials,
                                     std::uint64_t seed)
{
    auto r = detail::merge_random<T>("faa_di_bruno", c, trials, seed,
                                     [&](const poly &p, const std::map<var_name, T> &env) {
                                         return check_faa_di_bruno(env, p, n_max, c);
                                     });
    r.note = "n < " + std::to_string(n_max);
    return r;
}

// For a, b in the kernel of D: D(ab) = 0 (and D(1) = 0).
template <typename T>
law_report check_kernel_closure(const diff_carrier<T> &c, std::size_t trials, std::uint64_t seed)
{
    auto r = detail::start("kernel_closure", c.name, seed);
    r.trials = trials;
    if (!c.sample_constant) {
        r.skipped = true;
        r.note = "carrier has no kernel sampler";
        return r;
    }
    const T d1 = c.derive(c.one);
    if (!c.equal(d1, c.zero)) {
        r.fail(detail::make_cex<T>(c, {{"a", c.one}}, d1, c.zero));
        return r;
    }
    const splitmix64 root(seed);
    for (std::size_t t = 0; t < trials && r.pass; ++t) {
        auto rng = root.split(t);
        const T a = c.sample_constant(rng);
        const T b = c.sample_constant(rng);
        if (!c.equal(c.derive(a), c.zero) || !c.equal(c.derive(b), c.zero)) {
            r.skipped = true;
            r.note = "kernel sampler produced an element outside the kernel";
            return r;
        }
        const T lhs = c.derive(c.mul(a, b));
        if (!c.equal(lhs, c.zero)) {
            r.fail(detail::make_cex<T>(c, {{"a", a}, {"b", b}}, lhs, c.zero));
        }
    }
    return r;
}

// If D1 and D2 satisfy the chain rule on the sampled instances then so do
// D1 + D2 and the zero map. A precondition failure marks the report skipped
// and carries the summand's counterexample; the sum is not evaluated.
template <typename T>
law_report check_derivation_monoid(const diff_carrier<T> &c, const std::function<T(const T &)> &d1,
                                   const std::function<T(const T &)> &d2, std::size_t trials, std::uint64_t seed)
{
    auto r = detail::start("derivation_monoid", c.name, seed);
    r.trials = trials;
    const auto c1 = c.with_derivation(c.name + "/D1", d1);
    const auto c2 = c.with_derivation(c.name + "/D2", d2);
    const auto sum = c.with_derivation(c.name + "/D1+D2", [&](const T &a) { return c.add(d1(a), d2(a)); });
    const auto zero = c.with_derivation(c.name + "/0", [&](const T &) { return c.zero; });

    const splitmix64 root(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = root.split(t);
        auto [p, env] = detail::sample_instance(c, rng);
        for (const auto *summand : {&c1, &c2}) {
            auto pre = check_chain_rule(env, p, *summand);
            if (!pre.pass) {
                r.skipped = true;
                r.note = "precondition failed: " + summand->name + " is not a derivation (trial " + std::to_string(t)
                         + ")";
                r.fail(*pre.failure);
                return r;
            }
        }
    }
    for (std::size_t t = 0; t < trials && r.pass; ++t) {
        auto rng = root.split(t);
        auto [p, env] = detail::sample_instance(c, rng);
        for (const auto *carrier : {&sum, &zero}) {
            auto single = check_chain_rule(env, p, *carrier);
            if (!single.pass) {
                single.failure->inputs.emplace_back("derivation", carrier->name);
                r.fail(*single.failure);
                break;
            }
        }
    }
    return r;
}

} // namespace dalg

#endif
