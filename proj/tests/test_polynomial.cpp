#include <doctest.h>

#include <dalg/diff_laws.hpp>
#include <dalg/law_suite.hpp>
#include <dalg/poly.hpp>
#include <dalg/text.hpp>

#include "oracles.hpp"

using namespace dalg;

namespace
{

poly P(const char *s) { return parse_poly(s); }

tensor_elem pure(const char *p, const char *v) { return tensor_elem::pure(P(p), v); }

const std::vector<var_name> vars4 = {"w", "x", "y", "z"};

} // namespace

TEST_CASE("add")
{
    CHECK(add(P("x + 1"), P("-1")) == P("x"));
    CHECK(add(poly{}, P("x*y - 3")) == P("x*y - 3"));
    CHECK(add(P("x^2"), P("x^2")) == P("2*x^2"));
    CHECK(add(P("x"), P("-x")).is_zero());
}

TEST_CASE("mul")
{
    CHECK(mul(P("x + 1"), P("x - 1")) == P("x^2 - 1"));
    CHECK(mul(unit_poly(), P("3*x*y^2 + z")) == P("3*x*y^2 + z"));
    CHECK(mul(P("x + y"), P("x + y")) == P("x^2 + 2*x*y + y^2"));
    CHECK(to_string(mul(P("x + y"), P("x + y"))) == "x^2 + 2*x*y + y^2");
    CHECK(mul(P("x"), poly{}).is_zero());
}

TEST_CASE("unit and eta")
{
    CHECK(unit_poly() == poly(1));
    CHECK(mul(unit_poly(), eta("x")) == P("x"));
    CHECK(derive(unit_poly()).is_zero());
    CHECK(eta("x") == P("x"));
    CHECK(derive(eta("x")) == pure("1", "x"));
    CHECK(substitute(P("X"), std::map<var_name, poly>{{"X", P("2*a - b")}}) == P("2*a - b"));
}

TEST_CASE("substitute")
{
    CHECK(substitute(P("X^2"), std::map<var_name, poly>{{"X", P("x + y")}}) == P("x^2 + 2*x*y + y^2"));
    const auto p = P("3*x^2*y - z + 1/2");
    CHECK(substitute(p, std::map<var_name, poly>{{"x", P("x")}, {"y", P("y")}, {"z", P("z")}}) == p);
    CHECK(substitute(p, std::map<var_name, poly>{}) == p);
    CHECK(substitute(P("X*Y"), std::map<var_name, poly>{{"X", P("2")}, {"Y", P("z")}}) == P("2*z"));
    CHECK_THROWS_AS(substitute(P("X*Y"), std::map<var_name, diff_poly>{{"X", dv("x")}}), unbound_variable);
}

TEST_CASE("map_linear")
{
    const linear_map f{{"x", P("u + v")}, {"y", P("u")}};
    CHECK(map_linear(P("x^2*y"), f) == P("u^3 + 2*u^2*v + u*v^2"));
    const linear_map id{{"x", P("x")}, {"y", P("y")}};
    CHECK(map_linear(P("x^2*y - 4*y"), id) == P("x^2*y - 4*y"));
    CHECK(map_linear(P("x"), linear_map{{"x", poly{}}}).is_zero());
    CHECK_THROWS_AS(map_linear(P("x"), linear_map{{"x", P("y^2")}}), non_linear_image);
    CHECK_THROWS_AS(map_linear(P("x"), linear_map{{"x", P("y + 1")}}), non_linear_image);
}

TEST_CASE("derive")
{
    CHECK(derive(P("x^2*y")) == pure("2*x*y", "x") + pure("x^2", "y"));
    CHECK(derive(P("7")).is_zero());
    CHECK(derive(P("x")) == pure("1", "x"));
    CHECK(to_string(derive(P("x^2*y"))) == "2*x*y (x) x + x^2 (x) y");
    CHECK(to_string(derive(P("x^2 - x*y"))) == "(2*x - y) (x) x + (-x) (x) y");
}

TEST_CASE("coderive")
{
    CHECK(coderive(pure("x + y", "x")) == P("x^2 + x*y"));
    CHECK(coderive(tensor_elem{}).is_zero());
    CHECK(coderive(pure("1", "x") + pure("1", "y")) == P("x + y"));
}

TEST_CASE("euler")
{
    CHECK(euler(P("x^2*y")) == P("3*x^2*y"));
    CHECK(euler(P("5/3")).is_zero());
    CHECK(euler(P("x + y")) == P("x + y"));
    CHECK(euler(P("x^3 + y")) == P("3*x^3 + y"));
}

TEST_CASE("flat")
{
    CHECK(flat(std::map<var_name, poly>{{"x", P("1")}}, P("x^2")) == P("2*x"));
    CHECK(flat(std::map<var_name, poly>{{"x", P("y^5 - 2")}}, P("4")).is_zero());
    CHECK(flat(std::map<var_name, poly>{{"x", P("x")}}, P("x^3")) == P("3*x^3"));
    CHECK(flat(std::map<var_name, poly>{{"x", P("x")}}, P("x^3")) == euler(P("x^3")));
    CHECK_THROWS_AS(flat(std::map<var_name, poly>{{"x", P("1")}}, P("x*y")), unbound_variable);
}

TEST_CASE("sharp")
{
    const linear_map id{{"x", P("x")}, {"y", P("y")}};
    CHECK(sharp(id, P("x^2*y")) == P("3*x^2*y"));
    CHECK(sharp(linear_map{{"x", P("y")}, {"y", P("x")}}, P("x^2")) == P("2*x*y"));
    CHECK(sharp(linear_map{{"x", poly{}}, {"y", poly{}}}, P("x^2*y + y")).is_zero());
    CHECK_THROWS_AS(sharp(linear_map{{"x", P("x^2")}}, P("x")), non_linear_image);
}

TEST_CASE("partial derivatives and products agree with the dense oracle")
{
    const splitmix64 root(11);
    for (std::uint64_t t = 0; t < 200; ++t) {
        auto rng = root.split(t);
        const auto p = random_poly(rng, vars4, 5, 4);
        const auto q = random_poly(rng, vars4, 5, 4);
        INFO("p = " << to_string(p) << ", q = " << to_string(q));
        const auto dp = oracle::from_poly(p, vars4);
        CHECK(p * q == oracle::to_poly(oracle::mul(dp, oracle::from_poly(q, vars4))));
        const auto parts = derive(p).by_variable();
        for (std::size_t i = 0; i < vars4.size(); ++i) {
            const auto expected = oracle::to_poly(oracle::partial(dp, i));
            auto it = parts.find(vars4[i]);
            CHECK((it == parts.end() ? poly{} : it->second) == expected);
            CHECK(partial(p, vars4[i]) == expected);
        }
    }
}

TEST_CASE("substitution agrees with the dense oracle")
{
    const std::vector<var_name> outer = {"X1", "X2", "X3"};
    const splitmix64 root(12);
    for (std::uint64_t t = 0; t < 100; ++t) {
        auto rng = root.split(t);
        const auto p = random_poly(rng, outer, 4, 3);
        std::map<var_name, poly> env;
        std::vector<oracle::dense> images;
        for (const auto &x : outer) {
            env.emplace(x, random_poly(rng, vars4, 3, 2));
            images.push_back(oracle::from_poly(env.at(x), vars4));
        }
        INFO("p = " << to_string(p));
        CHECK(substitute(p, env) == oracle::to_poly(oracle::compose(oracle::from_poly(p, outer), images, vars4)));
    }
}

TEST_CASE("euler is degree times identity on every monomial up to degree 6")
{
    const auto r = check_euler_exhaustive(6, 3);
    CHECK(r.pass);
    CHECK(r.trials == 84);
}

TEST_CASE("codifferential axioms and naturality on random polynomials")
{
    for (const auto &r : {check_d1_constant(50, 3), check_d2_leibniz(50, 3), check_d3_linear(50, 3),
                          check_d4_chain(50, 3), check_d5_interchange(50, 3), check_derive_naturality(50, 3),
                          check_flat_sharp(50, 3)}) {
        INFO(r.law);
        CHECK(r.pass);
        CHECK_FALSE(r.failure);
    }
}

TEST_CASE("the interchange rule sees a non-symmetric second derivative")
{
    // The twice-derived object of x*y has the two slots (x, y) and (y, x)
    // once each; dropping one of them breaks the symmetry.
    const auto d2 = derive2(P("x*y"));
    CHECK(d2.terms().size() == 2);
    CHECK(d2 == d2.swap_slots());
    tensor2_elem lopsided;
    lopsided.add_term(monomial{}, "x", "y", Rational(1));
    CHECK_FALSE(lopsided == lopsided.swap_slots());
}
