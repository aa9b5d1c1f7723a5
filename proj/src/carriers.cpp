#include <dalg/carriers.hpp>

#include <algorithm>

#include <dalg/diff_laws.hpp>
#include <dalg/text.hpp>

namespace dalg
{

namespace
{

const std::vector<std::string> generator_names = {"x", "y", "z"};

template <typename T>
series<T> truncate_to(const series<T> &f, std::size_t order)
{
    return f.order() == order ? f : f.truncated(order);
}

diff_poly square(const diff_poly &a) { return a * a; }

} // namespace

diff_poly random_diff_poly(splitmix64 &rng, std::size_t size)
{
    std::vector<dvar> vars;
    for (int i = 0; i < 4; ++i) {
        vars.push_back(dvar{generator_names[static_cast<std::size_t>(rng.uniform(0, 2))],
                            static_cast<std::size_t>(rng.uniform(0, 2))});
    }
    const auto max_terms = static_cast<std::int64_t>(std::max<std::size_t>(size, 1));
    diff_poly p;
    const auto n_terms = rng.uniform(1, max_terms);
    for (std::int64_t t = 0; t < n_terms; ++t) {
        const auto deg = rng.uniform(0, static_cast<std::int64_t>(size));
        std::vector<diff_monomial::factor> factors;
        for (std::int64_t i = 0; i < deg; ++i) {
            factors.emplace_back(vars[static_cast<std::size_t>(rng.uniform(0, 3))], 1);
        }
        p.add_term(diff_monomial(std::move(factors)), rng.small_nonzero_rational());
    }
    return p;
}

series<Rational> random_series(splitmix64 &rng, std::size_t order, flavor kind)
{
    std::vector<Rational> coeffs;
    for (std::size_t n = 0; n <= order; ++n) {
        coeffs.push_back(rng.small_rational());
    }
    return series<Rational>(std::move(coeffs), kind);
}

diff_carrier<diff_poly> diffpoly_carrier()
{
    diff_carrier<diff_poly> c;
    c.name = "diffpoly";
    c.zero = diff_poly{};
    c.one = diff_poly(1);
    c.add = [](const diff_poly &a, const diff_poly &b) { return a + b; };
    c.mul = [](const diff_poly &a, const diff_poly &b) { return a * b; };
    c.scale = [](const Rational &s, const diff_poly &a) { return s * a; };
    c.derive = [](const diff_poly &a) { return d_shift(a); };
    c.sample = [](splitmix64 &rng, std::size_t size) { return random_diff_poly(rng, size); };
    c.sample_constant = [](splitmix64 &rng) { return diff_poly(rng.small_rational()); };
    c.equal = [](const diff_poly &a, const diff_poly &b) { return a == b; };
    c.show = [](const diff_poly &a) { return to_string(a); };
    return c;
}

linear_map default_sharp_map()
{
    return linear_map{
        {"w", parse_poly("x - y")},
        {"x", parse_poly("2*y + z")},
        {"y", parse_poly("w")},
        {"z", parse_poly("-1/2*x")},
    };
}

diff_carrier<poly> poly_sharp_carrier(const linear_map &g)
{
    require_linear(g);
    diff_carrier<poly> c;
    c.name = "poly_sharp";
    c.zero = poly{};
    c.one = poly(1);
    c.add = [](const poly &a, const poly &b) { return a + b; };
    c.mul = [](const poly &a, const poly &b) { return a * b; };
    c.scale = [](const Rational &s, const poly &a) { return s * a; };
    c.derive = [g](const poly &a) { return sharp(g, a); };
    c.sample = [](splitmix64 &rng, std::size_t size) {
        static const std::vector<var_name> vars = {"w", "x", "y", "z"};
        return random_poly(rng, vars, std::max<std::size_t>(size, 1), static_cast<unsigned>(size));
    };
    c.sample_constant = [](splitmix64 &rng) { return poly(rng.small_rational()); };
    c.equal = [](const poly &a, const poly &b) { return a == b; };
    c.show = [](const poly &a) { return to_string(a); };
    return c;
}

diff_carrier<series<Rational>> series_carrier(std::size_t order, flavor kind)
{
    using S = series<Rational>;
    diff_carrier<S> c;
    c.name = std::string(flavor_name(kind)) + "_series";
    c.zero = szero(order, kind);
    c.one = sunit(order, kind);
    c.add = [](const S &a, const S &b) {
        const auto n = std::min(a.order(), b.order());
        return sadd(truncate_to(a, n), truncate_to(b, n));
    };
    c.mul = [](const S &a, const S &b) {
        const auto n = std::min(a.order(), b.order());
        return smul(truncate_to(a, n), truncate_to(b, n));
    };
    c.scale = [](const Rational &s, const S &a) { return sscale(s, a); };
    c.derive = [](const S &a) { return sderive(a); };
    c.sample = [order, kind](splitmix64 &rng, std::size_t) { return random_series(rng, order, kind); };
    c.sample_constant = [order, kind](splitmix64 &rng) {
        auto out = szero(order, kind);
        std::vector<Rational> coeffs = out.coeffs();
        coeffs[0] = rng.small_rational();
        return S(std::move(coeffs), kind);
    };
    c.equal = [](const S &a, const S &b) { return agree_on_window(a, b); };
    c.show = [](const S &a) { return std::string(flavor_name(a.kind())) + to_string(a.coeffs()); };
    return c;
}

diff_carrier<diff_poly> identity_derivation_carrier()
{
    return diffpoly_carrier().with_derivation("diffpoly/identity", [](const diff_poly &a) { return a; });
}

diff_carrier<diff_poly> squaring_derivation_carrier()
{
    return diffpoly_carrier().with_derivation("diffpoly/squaring", square);
}

} // namespace dalg
