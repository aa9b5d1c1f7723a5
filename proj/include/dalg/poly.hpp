#ifndef DALG_POLY_HPP
#define DALG_POLY_HPP

// Sparse multivariate polynomials over Q: the symmetric algebra on a free
// module with a chosen basis, together with its deriving transformation
//
//   d(p) = sum_i dp/dx_i (x) x_i   in Sym(M) (x) M,
//
// the coderiving transformation (multiply the tensor back in), and the maps
// built from them (Euler operator, flat, sharp).
//
// Everything is templated on the variable type so that plain polynomials
// (variables are names) and differential polynomials (variables are
// (name, order) pairs) share one representation. Values are canonical at
// all times: no zero exponents, no zero coefficients, sorted keys.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include <dalg/errors.hpp>
#include <dalg/scalars.hpp>

namespace dalg
{

template <typename Var>
class basic_monomial
{
public:
    using factor = std::pair<Var, unsigned>;

    basic_monomial() = default;

    explicit basic_monomial(std::vector<factor> factors) : factors_(std::move(factors))
    {
        std::sort(factors_.begin(), factors_.end(),
                  [](const factor &a, const factor &b) { return a.first < b.first; });
        std::vector<factor> merged;
        for (auto &f : factors_) {
            if (!merged.empty() && merged.back().first == f.first) {
                merged.back().second += f.second;
            } else {
                merged.push_back(std::move(f));
            }
        }
        std::erase_if(merged, [](const factor &f) { return f.second == 0; });
        factors_ = std::move(merged);
    }

    static basic_monomial of(const Var &v, unsigned exponent = 1)
    {
        basic_monomial m;
        if (exponent > 0) {
            m.factors_.emplace_back(v, exponent);
        }
        return m;
    }

    const std::vector<factor> &factors() const & { return factors_; }
    std::vector<factor> factors() && { return std::move(factors_); }
    bool is_one() const { return factors_.empty(); }

    unsigned degree() const
    {
        unsigned d = 0;
        for (const auto &f : factors_) {
            d += f.second;
        }
        return d;
    }

    unsigned exponent(const Var &v) const
    {
        auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                                   [](const factor &f, const Var &x) { return f.first < x; });
        return (it != factors_.end() && it->first == v) ? it->second : 0;
    }

    // Multiplies by v^delta (delta may be negative as long as the result stays
    // non-negative).
    basic_monomial with_exponent_shift(const Var &v, int delta) const
    {
        auto out = *this;
        auto it = std::lower_bound(out.factors_.begin(), out.factors_.end(), v,
                                   [](const factor &f, const Var &x) { return f.first < x; });
        if (it != out.factors_.end() && it->first == v) {
            it->second = static_cast<unsigned>(static_cast<int>(it->second) + delta);
            if (it->second == 0) {
                out.factors_.erase(it);
            }
        } else if (delta > 0) {
            out.factors_.insert(it, factor{v, static_cast<unsigned>(delta)});
        }
        return out;
    }

    friend basic_monomial operator*(const basic_monomial &a, const basic_monomial &b)
    {
        basic_monomial out;
        out.factors_.reserve(a.factors_.size() + b.factors_.size());
        auto i = a.factors_.begin();
        auto j = b.factors_.begin();
        while (i != a.factors_.end() || j != b.factors_.end()) {
            if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
                out.factors_.push_back(*i++);
            } else if (i == a.factors_.end() || j->first < i->first) {
                out.factors_.push_back(*j++);
            } else {
                out.factors_.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        return out;
    }

    friend bool operator==(const basic_monomial &, const basic_monomial &) = default;
    friend auto operator<=>(const basic_monomial &a, const basic_monomial &b) { return a.factors_ <=> b.factors_; }

private:
    std::vector<factor> factors_;
};

template <typename Var>
class basic_poly
{
public:
    using variable_type = Var;
    using monomial = basic_monomial<Var>;
    using term_map = std::map<monomial, Rational>;

    basic_poly() = default;
    basic_poly(const Rational &c) { add_term(monomial{}, c); }
    basic_poly(long c) : basic_poly(Rational(c)) {}

    static basic_poly variable(const Var &v) { return term(Rational(1), monomial::of(v)); }

    static basic_poly term(const Rational &c, const monomial &m)
    {
        basic_poly p;
        p.add_term(m, c);
        return p;
    }

    const term_map &terms() const & { return terms_; }
    term_map terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const monomial &m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Constant part, i.e. the coefficient of the monomial 1.
    Rational constant_term() const { return coefficient(monomial{}); }

    void add_term(const monomial &m, const Rational &c)
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    std::set<Var> variables() const
    {
        std::set<Var> out;
        for (const auto &[m, c] : terms_) {
            for (const auto &f : m.factors()) {
                out.insert(f.first);
            }
        }
        return out;
    }

    // Total degree; 0 for the zero polynomial.
    unsigned degree() const
    {
        unsigned d = 0;
        for (const auto &[m, c] : terms_) {
            d = std::max(d, m.degree());
        }
        return d;
    }

    basic_poly &operator+=(const basic_poly &o)
    {
        for (const auto &[m, c] : o.terms_) {
            add_term(m, c);
        }
        return *this;
    }

    basic_poly &operator-=(const basic_poly &o)
    {
        for (const auto &[m, c] : o.terms_) {
            add_term(m, -c);
        }
        return *this;
    }

    basic_poly operator-() const
    {
        basic_poly out;
        for (const auto &[m, c] : terms_) {
            out.terms_.emplace(m, -c);
        }
        return out;
    }

    friend basic_poly operator+(basic_poly a, const basic_poly &b) { return a += b; }
    friend basic_poly operator-(basic_poly a, const basic_poly &b) { return a -= b; }

    friend basic_poly operator*(const basic_poly &a, const basic_poly &b)
    {
        basic_poly out;
        for (const auto &[ma, ca] : a.terms_) {
            for (const auto &[mb, cb] : b.terms_) {
                out.add_term(ma * mb, ca * cb);
            }
        }
        return out;
    }

    friend basic_poly operator*(const Rational &s, const basic_poly &p)
    {
        basic_poly out;
        if (s.is_zero()) {
            return out;
        }
        for (const auto &[m, c] : p.terms_) {
            out.terms_.emplace(m, s * c);
        }
        return out;
    }

    basic_poly &operator*=(const basic_poly &o) { return *this = *this * o; }

    friend bool operator==(const basic_poly &, const basic_poly &) = default;
    friend bool operator<(const basic_poly &a, const basic_poly &b)
    {
        return std::lexicographical_compare(
            a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(), [](const auto &x, const auto &y) {
                if (x.first != y.first) {
                    return x.first < y.first;
                }
                return x.second < y.second;
            });
    }

private:
    term_map terms_;
};

template <typename Var>
basic_poly<Var> pow(const basic_poly<Var> &p, unsigned e)
{
    basic_poly<Var> result(1);
    basic_poly<Var> base = p;
    while (e > 0) {
        if (e & 1U) {
            result *= base;
        }
        e >>= 1U;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

// An element of Sym(M) (x) M: finite sum of c * (m (x) v).
template <typename Var>
class basic_tensor
{
public:
    using monomial = basic_monomial<Var>;
    using key = std::pair<monomial, Var>;
    using term_map = std::map<key, Rational>;

    basic_tensor() = default;

    // p (x) v
    static basic_tensor pure(const basic_poly<Var> &p, const Var &v)
    {
        basic_tensor t;
        for (const auto &[m, c] : p.terms()) {
            t.add_term(m, v, c);
        }
        return t;
    }

    const term_map &terms() const & { return terms_; }
    term_map terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const monomial &m, const Var &v, const Rational &c)
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(key{m, v}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    // The Sym(M) component attached to each basis vector.
    std::map<Var, basic_poly<Var>> by_variable() const
    {
        std::map<Var, basic_poly<Var>> out;
        for (const auto &[k, c] : terms_) {
            out[k.second].add_term(k.first, c);
        }
        return out;
    }

    basic_tensor &operator+=(const basic_tensor &o)
    {
        for (const auto &[k, c] : o.terms_) {
            add_term(k.first, k.second, c);
        }
        return *this;
    }

    friend basic_tensor operator+(basic_tensor a, const basic_tensor &b) { return a += b; }

    // Multiplies the Sym(M) factor: q * (p (x) v) = (q p) (x) v.
    friend basic_tensor operator*(const basic_poly<Var> &q, const basic_tensor &t)
    {
        basic_tensor out;
        for (const auto &[k, c] : t.terms_) {
            for (const auto &[m, cq] : q.terms()) {
                out.add_term(m * k.first, k.second, c * cq);
            }
        }
        return out;
    }

    friend bool operator==(const basic_tensor &, const basic_tensor &) = default;

private:
    term_map terms_;
};

// An element of Sym(M) (x) M (x) M, the codomain of applying d twice.
template <typename Var>
class basic_tensor2
{
public:
    using monomial = basic_monomial<Var>;
    using key = std::tuple<monomial, Var, Var>;
    using term_map = std::map<key, Rational>;

    const term_map &terms() const & { return terms_; }
    term_map terms() && { return std::move(terms_); }

    void add_term(const monomial &m, const Var &first, const Var &second, const Rational &c)
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(key{m, first, second}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    // Applies the symmetry to the two M slots.
    basic_tensor2 swap_slots() const
    {
        basic_tensor2 out;
        for (const auto &[k, c] : terms_) {
            out.add_term(std::get<0>(k), std::get<2>(k), std::get<1>(k), c);
        }
        return out;
    }

    friend bool operator==(const basic_tensor2 &, const basic_tensor2 &) = default;

private:
    term_map terms_;
};

// Images of basis vectors; a variable without an entry maps to itself.
template <typename Var>
using basic_linear_map = std::map<Var, basic_poly<Var>>;

using var_name = std::string;
using monomial = basic_monomial<var_name>;
using poly = basic_poly<var_name>;
using tensor_elem = basic_tensor<var_name>;
using tensor2_elem = basic_tensor2<var_name>;
using linear_map = basic_linear_map<var_name>;

template <typename Var>
basic_poly<Var> add(const basic_poly<Var> &p, const basic_poly<Var> &q)
{
    return p + q;
}

template <typename Var>
basic_poly<Var> mul(const basic_poly<Var> &p, const basic_poly<Var> &q)
{
    return p * q;
}

inline poly unit_poly() { return poly(1); }

template <typename Var>
basic_poly<Var> eta(const Var &v)
{
    return basic_poly<Var>::variable(v);
}

inline poly eta(const char *v) { return poly::variable(var_name(v)); }

// Partial derivative dp/dv.
template <typename Var>
basic_poly<Var> partial(const basic_poly<Var> &p, const Var &v)
{
    basic_poly<Var> out;
    for (const auto &[m, c] : p.terms()) {
        const unsigned e = m.exponent(v);
        if (e > 0) {
            out.add_term(m.with_exponent_shift(v, -1), c * Rational(static_cast<long>(e)));
        }
    }
    return out;
}

// Simultaneous substitution followed by full expansion. When the target
// variable type equals the source type, variables missing from env are left
// in place; otherwise a missing variable is an unbound_variable error.
template <typename Var, typename Target>
basic_poly<Target> substitute(const basic_poly<Var> &p, const std::map<Var, basic_poly<Target>> &env)
{
    std::map<std::pair<Var, unsigned>, basic_poly<Target>> powers;
    auto image_power = [&](const Var &v, unsigned e) -> const basic_poly<Target> & {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it != powers.end()) {
            return it->second;
        }
        basic_poly<Target> base;
        auto found = env.find(v);
        if (found != env.end()) {
            base = found->second;
        } else if constexpr (std::is_same_v<Var, Target>) {
            base = basic_poly<Target>::variable(v);
        } else {
            throw unbound_variable("substitution has no image for a variable");
        }
        return powers.emplace(key, pow(base, e)).first->second;
    };
    basic_poly<Target> out;
    for (const auto &[m, c] : p.terms()) {
        basic_poly<Target> t(c);
        for (const auto &[v, e] : m.factors()) {
            t *= image_power(v, e);
        }
        out += t;
    }
    return out;
}

template <typename Var>
void require_linear(const basic_linear_map<Var> &f)
{
    for (const auto &[v, image] : f) {
        for (const auto &[m, c] : image.terms()) {
            if (m.degree() != 1) {
                throw non_linear_image("linear map image has a term of degree " + std::to_string(m.degree()));
            }
        }
    }
}

// T(f) for a linear f: substitutes the images and expands.
template <typename Var>
basic_poly<Var> map_linear(const basic_poly<Var> &p, const basic_linear_map<Var> &f)
{
    require_linear(f);
    return substitute(p, f);
}

// (1 (x) f): applies a linear map to the M slot of a tensor.
template <typename Var>
basic_tensor<Var> map_tensor_slot(const basic_tensor<Var> &t, const basic_linear_map<Var> &f)
{
    require_linear(f);
    basic_tensor<Var> out;
    for (const auto &[k, c] : t.terms()) {
        auto it = f.find(k.second);
        if (it == f.end()) {
            out.add_term(k.first, k.second, c);
            continue;
        }
        for (const auto &[m, cm] : it->second.terms()) {
            out.add_term(k.first, m.factors().front().first, c * cm);
        }
    }
    return out;
}

// T(f) (x) f on Sym(M) (x) M.
template <typename Var>
basic_tensor<Var> map_tensor(const basic_tensor<Var> &t, const basic_linear_map<Var> &f)
{
    basic_tensor<Var> out;
    for (const auto &[v, component] : map_tensor_slot(t, f).by_variable()) {
        out += basic_tensor<Var>::pure(map_linear(component, f), v);
    }
    return out;
}

// The deriving transformation: sum_i dp/dx_i (x) x_i.
template <typename Var>
basic_tensor<Var> derive(const basic_poly<Var> &p)
{
    basic_tensor<Var> out;
    for (const auto &[m, c] : p.terms()) {
        for (const auto &[v, e] : m.factors()) {
            out.add_term(m.with_exponent_shift(v, -1), v, c * Rational(static_cast<long>(e)));
        }
    }
    return out;
}

// d applied to the Sym(M) factor of d(p): sum dp/dx_i dx_j (x) x_j (x) x_i.
template <typename Var>
basic_tensor2<Var> derive2(const basic_poly<Var> &p)
{
    basic_tensor2<Var> out;
    const auto dp = derive(p);
    for (const auto &[k, c] : dp.terms()) {
        for (const auto &[v, e] : k.first.factors()) {
            out.add_term(k.first.with_exponent_shift(v, -1), v, k.second, c * Rational(static_cast<long>(e)));
        }
    }
    return out;
}

// The coderiving transformation: multiplies each M slot back in.
template <typename Var>
basic_poly<Var> coderive(const basic_tensor<Var> &t)
{
    basic_poly<Var> out;
    for (const auto &[k, c] : t.terms()) {
        out.add_term(k.first.with_exponent_shift(k.second, 1), c);
    }
    return out;
}

// L = d ; d°, equal to sum_i x_i dp/dx_i.
template <typename Var>
basic_poly<Var> euler(const basic_poly<Var> &p)
{
    return coderive(derive(p));
}

// f-flat := d ; (1 (x) f) ; m for an arbitrary assignment of polynomials to
// variables. Every variable of p must have an image.
template <typename Var>
basic_poly<Var> flat(const std::map<Var, basic_poly<Var>> &f, const basic_poly<Var> &p)
{
    basic_poly<Var> out;
    const auto dp = derive(p);
    for (const auto &[k, c] : dp.terms()) {
        auto it = f.find(k.second);
        if (it == f.end()) {
            throw unbound_variable("flat: no image for a variable of the polynomial");
        }
        out += basic_poly<Var>::term(c, k.first) * it->second;
    }
    return out;
}

// g-sharp := d ; (1 (x) g) ; d° for a linear endomorphism g.
template <typename Var>
basic_poly<Var> sharp(const basic_linear_map<Var> &g, const basic_poly<Var> &p)
{
    return coderive(map_tensor_slot(derive(p), g));
}

} // namespace dalg

#endif
