#ifndef DALG_TESTS_ORACLES_HPP
#define DALG_TESTS_ORACLES_HPP

// Independent reference implementations used only by the tests. They work on
// raw GMP values and plain containers and share no code paths with the
// library beyond converting inputs and outputs.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include <dalg/free_diff.hpp>
#include <dalg/poly.hpp>
#include <dalg/rota_baxter.hpp>

namespace oracle
{

using Q = mpq_class;
using Z = mpz_class;

inline Z fact(std::size_t n)
{
    Z out = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        out *= static_cast<unsigned long>(i);
    }
    return out;
}

// Row-by-row Pascal triangle.
inline Z pascal(std::size_t n, std::size_t k)
{
    if (k > n) {
        return 0;
    }
    std::vector<Z> row{1};
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<Z> next(i + 1, 1);
        for (std::size_t j = 1; j < i; ++j) {
            next[j] = row[j - 1] + row[j];
        }
        row = std::move(next);
    }
    return row[k];
}

inline Q q(const dalg::Rational &r) { return r.raw(); }
inline dalg::Rational r(const Q &v) { return dalg::Rational(v); }

// Dense polynomial over a fixed, ordered variable list.
struct dense {
    std::vector<std::string> vars;
    std::map<std::vector<unsigned>, Q> coeffs;

    void add(const std::vector<unsigned> &e, const Q &c)
    {
        auto &slot = coeffs[e];
        slot += c;
        if (slot == 0) {
            coeffs.erase(e);
        }
    }
};

inline dense from_poly(const dalg::poly &p, const std::vector<std::string> &vars)
{
    dense out{vars, {}};
    for (const auto &[m, c] : p.terms()) {
        std::vector<unsigned> e(vars.size(), 0);
        for (const auto &[v, k] : m.factors()) {
            const auto pos = std::find(vars.begin(), vars.end(), v) - vars.begin();
            e.at(static_cast<std::size_t>(pos)) += k;
        }
        out.add(e, q(c));
    }
    return out;
}

inline dalg::poly to_poly(const dense &d)
{
    dalg::poly out;
    for (const auto &[e, c] : d.coeffs) {
        dalg::poly t(r(c));
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (unsigned k = 0; k < e[i]; ++k) {
                t = t * dalg::poly::variable(d.vars[i]);
            }
        }
        out += t;
    }
    return out;
}

inline dense constant(const std::vector<std::string> &vars, const Q &c)
{
    dense out{vars, {}};
    out.add(std::vector<unsigned>(vars.size(), 0), c);
    return out;
}

inline dense add(const dense &a, const dense &b)
{
    dense out = a;
    for (const auto &[e, c] : b.coeffs) {
        out.add(e, c);
    }
    return out;
}

inline dense mul(const dense &a, const dense &b)
{
    dense out{a.vars, {}};
    for (const auto &[ea, ca] : a.coeffs) {
        for (const auto &[eb, cb] : b.coeffs) {
            std::vector<unsigned> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            out.add(e, ca * cb);
        }
    }
    return out;
}

inline dense partial(const dense &a, std::size_t i)
{
    dense out{a.vars, {}};
    for (const auto &[e, c] : a.coeffs) {
        if (e[i] > 0) {
            auto f = e;
            f[i] -= 1;
            out.add(f, c * e[i]);
        }
    }
    return out;
}

// p(images) where images[i] replaces p.vars[i]; images share one variable list.
inline dense compose(const dense &p, const std::vector<dense> &images, const std::vector<std::string> &target_vars)
{
    dense out{target_vars, {}};
    for (const auto &[e, c] : p.coeffs) {
        dense t = constant(target_vars, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (unsigned k = 0; k < e[i]; ++k) {
                t = mul(t, images[i]);
            }
        }
        out = add(out, t);
    }
    return out;
}

// Differential monomials as sorted lists with repetition: x^2 x' is
// [(x,0), (x,0), (x,1)].
using factor_list = std::vector<std::pair<std::string, std::size_t>>;
using list_poly = std::map<factor_list, Q>;

inline list_poly from_diff_poly(const dalg::diff_poly &p)
{
    list_poly out;
    for (const auto &[m, c] : p.terms()) {
        factor_list f;
        for (const auto &[v, e] : m.factors()) {
            for (unsigned k = 0; k < e; ++k) {
                f.emplace_back(v.base, v.order);
            }
        }
        std::sort(f.begin(), f.end());
        out[f] += q(c);
    }
    return out;
}

inline dalg::diff_poly to_diff_poly(const list_poly &p)
{
    dalg::diff_poly out;
    for (const auto &[f, c] : p) {
        dalg::diff_poly t(r(c));
        for (const auto &[base, order] : f) {
            t = t * dalg::dv(base, order);
        }
        out += t;
    }
    return out;
}

// Leibniz by positions: every occurrence in the list is bumped once.
inline list_poly bump_each(const list_poly &p)
{
    list_poly out;
    for (const auto &[f, c] : p) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            auto g = f;
            g[i].second += 1;
            std::sort(g.begin(), g.end());
            out[g] += c;
        }
    }
    std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
    return out;
}

using seq = std::vector<Q>;

inline seq hurwitz_mul(const seq &a, const seq &b)
{
    seq out(a.size(), 0);
    for (std::size_t n = 0; n < a.size(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            out[n] += Q(fact(n) / (fact(k) * fact(n - k))) * a[k] * b[n - k];
        }
    }
    return out;
}

inline seq cauchy_mul(const seq &a, const seq &b)
{
    seq out(a.size(), 0);
    for (std::size_t n = 0; n < a.size(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            out[n] += a[k] * b[n - k];
        }
    }
    return out;
}

// p evaluated in the series ring term by term, with powers by repeated
// multiplication.
inline seq ring_eval(const dense &p, const std::vector<seq> &env, bool hurwitz, std::size_t len)
{
    seq out(len, 0);
    for (const auto &[e, c] : p.coeffs) {
        seq t(len, 0);
        t[0] = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (unsigned k = 0; k < e[i]; ++k) {
                t = hurwitz ? hurwitz_mul(t, env[i]) : cauchy_mul(t, env[i]);
            }
        }
        for (std::size_t n = 0; n < len; ++n) {
            out[n] += t[n];
        }
    }
    return out;
}

// All interleavings of u and v, enumerated by the set of positions taken by
// u (a bitmask with |u| bits out of |u| + |v|).
inline std::map<dalg::rb_word, long> shuffle_by_masks(const dalg::rb_word &u, const dalg::rb_word &v)
{
    std::map<dalg::rb_word, long> out;
    const std::size_t n = u.size() + v.size();
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountl(mask)) != u.size()) {
            continue;
        }
        dalg::rb_word w;
        std::size_t i = 0;
        std::size_t j = 0;
        for (std::size_t pos = 0; pos < n; ++pos) {
            w.push_back(((mask >> pos) & 1UL) ? u[i++] : v[j++]);
        }
        out[w] += 1;
    }
    return out;
}

} // namespace oracle

#endif
