#ifndef DALG_FREE_DIFF_HPP
#define DALG_FREE_DIFF_HPP

// The free differential algebra on a set of generators: polynomials in the
// derivative-indexed variables (x, n), with the derivation that bumps one
// index per Leibniz summand.

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <dalg/carrier.hpp>
#include <dalg/errors.hpp>
#include <dalg/poly.hpp>

namespace dalg
{

// (x, n) stands for the n-th derivative of the generator x; (x, 0) is x.
struct dvar {
    std::string base;
    std::size_t order = 0;

    dvar bumped(std::size_t by = 1) const { return dvar{base, order + by}; }

    friend bool operator==(const dvar &, const dvar &) = default;
    friend auto operator<=>(const dvar &, const dvar &) = default;
};

using diff_monomial = basic_monomial<dvar>;
using diff_poly = basic_poly<dvar>;
using diff_tensor = basic_tensor<dvar>;

inline diff_poly dv(const std::string &base, std::size_t order = 0) { return diff_poly::variable(dvar{base, order}); }

// Derivation by direct Leibniz expansion: every occurrence of (x, n) with
// exponent e contributes e * (..., (x, n)^(e-1), (x, n+1), ...).
diff_poly d_shift(const diff_poly &p);

// n-fold d_shift.
diff_poly d_shift_n(const diff_poly &p, std::size_t n);

// The same derivation by the categorical recipe b-sharp = d ; (1 (x) b) ; d°,
// where b sends (x, n) to (x, n+1).
diff_poly d_shift_via_sharp(const diff_poly &p);

// Algebra inclusion x -> (x, 0).
diff_poly alpha(const poly &p);

// Sum of order * exponent over a monomial.
std::size_t order_weight(const diff_monomial &m);

// Nested elements of B(B(A)) are differential polynomials whose base names
// carry a serialized inner differential polynomial. The encoding is compact
// JSON of the inner term list and is canonical, so equal inner polynomials
// give equal names.
std::string encode_nested(const diff_poly &inner);

// Throws malformed_nesting when the name is not a valid encoding.
diff_poly decode_nested(const std::string &name);

// alpha at B(A): q -> the generator (enc(q), 0).
diff_poly nest_generator(const diff_poly &inner);

// B(f) for f acting on inner polynomials: (enc(q), n) -> (enc(f(q)), n).
diff_poly map_nested(const diff_poly &outer, const std::function<diff_poly(const diff_poly &)> &f);

// B(alpha): (x, n) -> (enc((x, 0)), n).
diff_poly map_alpha(const diff_poly &p);

// Monad multiplication: replaces each outer variable (enc(q), n) by
// d_shift^n(q) and expands.
diff_poly beta(const diff_poly &outer);

// [a, D(a), ..., D^n_max(a)]: the first summands of the map out of the
// countable coproduct induced by D.
template <typename T, typename Derivation>
std::vector<T> natural_map(Derivation &&derivation, const T &a, std::size_t n_max)
{
    std::vector<T> out;
    out.reserve(n_max + 1);
    out.push_back(a);
    for (std::size_t n = 1; n <= n_max; ++n) {
        out.push_back(derivation(out.back()));
    }
    return out;
}

// The differential-algebra morphism out of the free algebra determined by
// values on generators: (x, n) -> D^n(f(x)), then the carrier's own
// polynomial evaluation.
template <typename T>
T extend(const std::map<var_name, T> &f, const diff_carrier<T> &c, const diff_poly &p)
{
    std::map<std::string, std::vector<T>> derivatives;
    std::map<dvar, T> env;
    for (const auto &v : p.variables()) {
        auto it = derivatives.find(v.base);
        if (it == derivatives.end()) {
            auto value = f.find(v.base);
            if (value == f.end()) {
                throw unbound_variable("extend: no value for generator " + v.base);
            }
            it = derivatives.emplace(v.base, std::vector<T>{value->second}).first;
        }
        auto &chain = it->second;
        while (chain.size() <= v.order) {
            chain.push_back(c.derive(chain.back()));
        }
        env.emplace(v, chain[v.order]);
    }
    return evaluate(p, env, c);
}

} // namespace dalg

#endif
