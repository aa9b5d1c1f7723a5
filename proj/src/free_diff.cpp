#include <dalg/free_diff.hpp>

#include <json.hpp>

namespace dalg
{

diff_poly d_shift(const diff_poly &p)
{
    diff_poly out;
    for (const auto &[m, c] : p.terms()) {
        for (const auto &[v, e] : m.factors()) {
            auto bumped = m.with_exponent_shift(v, -1).with_exponent_shift(v.bumped(), 1);
            out.add_term(bumped, c * Rational(static_cast<long>(e)));
        }
    }
    return out;
}

diff_poly d_shift_n(const diff_poly &p, std::size_t n)
{
    diff_poly out = p;
    for (std::size_t i = 0; i < n; ++i) {
        out = d_shift(out);
    }
    return out;
}

diff_poly d_shift_via_sharp(const diff_poly &p)
{
    basic_linear_map<dvar> b;
    for (const auto &v : p.variables()) {
        b.emplace(v, diff_poly::variable(v.bumped()));
    }
    return sharp(b, p);
}

diff_poly alpha(const poly &p)
{
    std::map<var_name, diff_poly> env;
    for (const auto &v : p.variables()) {
        env.emplace(v, dv(v, 0));
    }
    return substitute(p, env);
}

std::size_t order_weight(const diff_monomial &m)
{
    std::size_t w = 0;
    for (const auto &[v, e] : m.factors()) {
        w += v.order * e;
    }
    return w;
}

std::string encode_nested(const diff_poly &inner)
{
    auto terms = nlohmann::json::array();
    for (const auto &[m, c] : inner.terms()) {
        auto factors = nlohmann::json::array();
        for (const auto &[v, e] : m.factors()) {
            factors.push_back({v.base, v.order, e});
        }
        terms.push_back({c.str(), std::move(factors)});
    }
    return terms.dump();
}

diff_poly decode_nested(const std::string &name)
{
    try {
        auto terms = nlohmann::json::parse(name);
        if (!terms.is_array()) {
            throw malformed_nesting("nested name is not a term list: " + name);
        }
        diff_poly out;
        for (const auto &t : terms) {
            if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_array()) {
                throw malformed_nesting("malformed nested term in: " + name);
            }
            std::vector<diff_monomial::factor> factors;
            for (const auto &f : t[1]) {
                if (!f.is_array() || f.size() != 3 || !f[0].is_string() || !f[1].is_number_unsigned()
                    || !f[2].is_number_unsigned()) {
                    throw malformed_nesting("malformed nested factor in: " + name);
                }
                factors.emplace_back(dvar{f[0].get<std::string>(), f[1].get<std::size_t>()}, f[2].get<unsigned>());
            }
            out.add_term(diff_monomial(std::move(factors)), Rational::parse(t[0].get<std::string>()));
        }
        return out;
    } catch (const nlohmann::json::exception &) {
        throw malformed_nesting("nested name is not valid JSON: " + name);
    } catch (const std::invalid_argument &) {
        throw malformed_nesting("nested coefficient is not a rational: " + name);
    }
}

diff_poly nest_generator(const diff_poly &inner) { return dv(encode_nested(inner), 0); }

diff_poly map_nested(const diff_poly &outer, const std::function<diff_poly(const diff_poly &)> &f)
{
    std::map<dvar, diff_poly> env;
    for (const auto &v : outer.variables()) {
        env.emplace(v, dv(encode_nested(f(decode_nested(v.base))), v.order));
    }
    return substitute(outer, env);
}

diff_poly map_alpha(const diff_poly &p)
{
    std::map<dvar, diff_poly> env;
    for (const auto &v : p.variables()) {
        env.emplace(v, dv(encode_nested(dv(v.base, 0)), v.order));
    }
    return substitute(p, env);
}

diff_poly beta(const diff_poly &outer)
{
    std::map<dvar, diff_poly> env;
    for (const auto &v : outer.variables()) {
        env.emplace(v, d_shift_n(decode_nested(v.base), v.order));
    }
    return substitute(outer, env);
}

} // namespace dalg
