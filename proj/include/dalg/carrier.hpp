#ifndef DALG_CARRIER_HPP
#define DALG_CARRIER_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <string>

#include <dalg/errors.hpp>
#include <dalg/poly.hpp>
#include <dalg/rng.hpp>
#include <dalg/scalars.hpp>

namespace dalg
{

// A commutative Q-algebra with a distinguished endomorphism D, packaged as a
// bundle of operations so that the law checks can run against any carrier.
//
// `equal` is the carrier's comparison on its valid window: truncated series
// compare only the indices both operands still know, since each derivation
// consumes one order of precision.
template <typename T>
struct diff_carrier {
    std::string name;
    T zero;
    T one;
    std::function<T(const T &, const T &)> add;
    std::function<T(const T &, const T &)> mul;
    std::function<T(const Rational &, const T &)> scale;
    std::function<T(const T &)> derive;
    // Random element; `size` bounds the number of terms and the degree.
    std::function<T(splitmix64 &, std::size_t size)> sample;
    // Random element of the kernel of D. May be empty.
    std::function<T(splitmix64 &)> sample_constant;
    std::function<bool(const T &, const T &)> equal;
    std::function<std::string(const T &)> show;

    T power(const T &a, unsigned e) const
    {
        T r = one;
        for (unsigned i = 0; i < e; ++i) {
            r = mul(r, a);
        }
        return r;
    }

    T derive_n(T a, std::size_t n) const
    {
        for (std::size_t i = 0; i < n; ++i) {
            a = derive(a);
        }
        return a;
    }

    // Same carrier with another derivation.
    diff_carrier with_derivation(std::string new_name, std::function<T(const T &)> d) const
    {
        auto out = *this;
        out.name = std::move(new_name);
        out.derive = std::move(d);
        return out;
    }
};

// The carrier's algebra structure applied to a polynomial: p(a_1, ..., a_m)
// computed with the carrier's own add/mul/scale.
template <typename Var, typename T>
T evaluate(const basic_poly<Var> &p, const std::map<Var, T> &env, const diff_carrier<T> &c)
{
    std::map<std::pair<Var, unsigned>, T> powers;
    T out = c.zero;
    for (const auto &[m, coeff] : p.terms()) {
        T t = c.scale(coeff, c.one);
        for (const auto &[v, e] : m.factors()) {
            auto key = std::make_pair(v, e);
            auto it = powers.find(key);
            if (it == powers.end()) {
                auto found = env.find(v);
                if (found == env.end()) {
                    throw unbound_variable("environment has no value for a variable of the polynomial");
                }
                it = powers.emplace(key, c.power(found->second, e)).first;
            }
            t = c.mul(t, it->second);
        }
        out = c.add(out, t);
    }
    return out;
}

template <typename Var, typename T>
void require_bound(const basic_poly<Var> &p, const std::map<Var, T> &env)
{
    for (const auto &v : p.variables()) {
        if (!env.contains(v)) {
            throw unbound_variable("environment has no value for a variable of the polynomial");
        }
    }
}

} // namespace dalg

#endif
