#include <doctest.h>

#include <dalg/carriers.hpp>
#include <dalg/law_suite.hpp>
#include <dalg/series.hpp>
#include <dalg/text.hpp>

#include "oracles.hpp"

using namespace dalg;

namespace
{

using S = series<Rational>;

S H(std::vector<Rational> c) { return S(std::move(c), flavor::hurwitz); }
S Pw(std::vector<Rational> c) { return S(std::move(c), flavor::power); }

oracle::seq seq_of(const S &s)
{
    oracle::seq out;
    for (const auto &c : s.coeffs()) {
        out.push_back(oracle::q(c));
    }
    return out;
}

// The component recursion with every weight equal to 1.
Rational unweighted(const poly &q, const std::map<var_name, S> &env, std::size_t n)
{
    if (n == 0) {
        Rational out;
        for (const auto &[m, c] : q.terms()) {
            Rational t = c;
            for (const auto &[v, e] : m.factors()) {
                for (unsigned i = 0; i < e; ++i) {
                    t = t * env.at(v)[0];
                }
            }
            out = out + t;
        }
        return out;
    }
    Rational out;
    for (const auto &[x, dq] : derive(q).by_variable()) {
        for (std::size_t i = 0; i < n; ++i) {
            out = out + unweighted(dq, env, i) * env.at(x)[n - i];
        }
    }
    return out;
}

} // namespace

TEST_CASE("smul")
{
    const S ones_h = H({1, 1, 1, 1, 1});
    const S ones_p = Pw({1, 1, 1, 1, 1});
    CHECK(smul(ones_h, ones_h) == H({1, 2, 4, 8, 16}));
    CHECK(smul(ones_p, ones_p) == Pw({1, 2, 3, 4, 5}));
    const S f = H({3, Rational(1, 2), -2, 0, 7});
    CHECK(smul(sunit(4, flavor::hurwitz), f) == f);
    CHECK(smul(sunit(4, flavor::power), f.with_kind(flavor::power)) == f.with_kind(flavor::power));
    CHECK_THROWS_AS(smul(ones_h, ones_p), flavor_mismatch);
    CHECK_THROWS_AS(smul(ones_h, H({1, 1})), order_mismatch);
    CHECK_THROWS_AS(sadd(ones_h, ones_p), flavor_mismatch);
}

TEST_CASE("sunit")
{
    CHECK(sunit(0, flavor::hurwitz) == H({1}));
    CHECK(sunit(3, flavor::hurwitz) == H({1, 0, 0, 0}));
    CHECK(sderive(sunit(3, flavor::hurwitz)) == H({0, 0, 0}));
    CHECK(sderive(sunit(3, flavor::power)) == Pw({0, 0, 0}));
}

TEST_CASE("sderive")
{
    CHECK(sderive(H({5, 6, 7, 8})) == H({6, 7, 8}));
    CHECK(sderive(Pw({5, 6, 7, 8})) == Pw({6, 14, 24}));
    CHECK_THROWS_AS(sderive(H({1})), order_exhausted);
    CHECK_THROWS_AS(H({1, 2}).at(2), order_exhausted);
    CHECK_THROWS_AS(H({1, 2}).truncated(3), order_exhausted);
    CHECK_THROWS_AS(S({}, flavor::hurwitz), order_exhausted);
}

TEST_CASE("products agree with the factorial and Cauchy oracles")
{
    const splitmix64 root(31);
    for (std::uint64_t t = 0; t < 100; ++t) {
        auto rng = root.split(t);
        const auto f = random_series(rng, 8, flavor::hurwitz);
        const auto g = random_series(rng, 8, flavor::hurwitz);
        CHECK(seq_of(smul(f, g)) == oracle::hurwitz_mul(seq_of(f), seq_of(g)));
        const auto fp = f.with_kind(flavor::power);
        const auto gp = g.with_kind(flavor::power);
        CHECK(seq_of(smul(fp, gp)) == oracle::cauchy_mul(seq_of(fp), seq_of(gp)));
    }
}

TEST_CASE("omega_eval")
{
    const std::map<var_name, S> env{{"X", H({2, 3, 5, 7})}, {"Y", H({11, 13, 17, 19})}};
    CHECK(omega_eval(parse_poly("X*Y"), env, 1) == Rational(2 * 13 + 3 * 11));
    CHECK(omega_eval(parse_poly("-4/3"), env, 0) == Rational(Integer(-4), Integer(3)));
    for (std::size_t n = 1; n <= 3; ++n) {
        CHECK(omega_eval(parse_poly("-4/3"), env, n).is_zero());
        CHECK(omega_eval(parse_poly("X"), env, n) == env.at("X")[n]);
    }
    CHECK_THROWS_AS(omega_eval(parse_poly("Z"), env, 0), unbound_variable);
    CHECK_THROWS_AS(omega_eval(parse_poly("X"), env, 4), order_exhausted);
    CHECK_THROWS_AS(omega_eval(parse_poly("X"), std::map<var_name, S>{{"X", Pw({1, 1})}}, 1), flavor_mismatch);
}

TEST_CASE("delta_eval")
{
    const std::map<var_name, S> env{{"X", Pw({2, 3, 5, 7})}, {"Y", Pw({11, 13, 17, 19})}};
    CHECK(delta_eval(parse_poly("X*Y"), env, 1) == Rational(2 * 13 + 3 * 11));
    CHECK(delta_eval(parse_poly("X^2"), std::map<var_name, S>{{"X", Pw({1, 1, 1})}}, 2) == Rational(3));
    CHECK(delta_eval(parse_poly("1"), env, 0) == Rational(1));
    CHECK_THROWS_AS(delta_eval(parse_poly("X"), std::map<var_name, S>{{"X", H({1, 1})}}, 1), flavor_mismatch);
}

TEST_CASE("the unweighted power recursion is the Hurwitz product, not the Cauchy product")
{
    const std::map<var_name, S> ones{{"X", Pw({1, 1, 1})}};
    const auto sq = parse_poly("X^2");
    CHECK(unweighted(sq, ones, 0) == delta_eval(sq, ones, 0));
    CHECK(unweighted(sq, ones, 1) == delta_eval(sq, ones, 1));
    CHECK(unweighted(sq, ones, 2) == Rational(4));
    CHECK(delta_eval(sq, ones, 2) == Rational(3));
    CHECK(smul(ones.at("X"), ones.at("X"))[2] == Rational(3));
}

TEST_CASE("component recursions agree with ring evaluation")
{
    const auto vars = detail::outer_vars(3);
    const splitmix64 root(32);
    for (std::uint64_t t = 0; t < 100; ++t) {
        auto rng = root.split(t);
        const auto p = random_poly(rng, vars, 4, 3);
        for (const auto kind : {flavor::hurwitz, flavor::power}) {
            std::map<var_name, S> env;
            std::vector<oracle::seq> raw;
            for (const auto &x : vars) {
                env.emplace(x, random_series(rng, 8, kind));
                raw.push_back(seq_of(env.at(x)));
            }
            const auto expected = oracle::ring_eval(oracle::from_poly(p, vars), raw, kind == flavor::hurwitz, 9);
            for (std::size_t n = 0; n <= 6; ++n) {
                INFO("p = " << to_string(p) << ", n = " << n << ", " << flavor_name(kind));
                const auto got = kind == flavor::hurwitz ? omega_eval(p, env, n) : delta_eval(p, env, n);
                CHECK(oracle::q(got) == expected[n]);
            }
        }
    }
    CHECK(check_omega_oracle(30, 5, 8, 6).pass);
    CHECK(check_delta_oracle(30, 5, 8, 6).pass);
    CHECK(check_omega_clauses(30, 5, 8, 6).pass);
}

TEST_CASE("diamond")
{
    CHECK(diamond(d_shift, dv("x"), 2) == series<diff_poly>({dv("x"), dv("x", 1), dv("x", 2)}, flavor::hurwitz));
    const auto zero = diamond([](const diff_poly &) { return diff_poly{}; }, parse_diff_poly("x*y"), 2);
    CHECK(zero == series<diff_poly>({parse_diff_poly("x*y"), diff_poly{}, diff_poly{}}, flavor::hurwitz));
    const auto a = parse_diff_poly("x + y'");
    const auto b = parse_diff_poly("x*y");
    CHECK(diamond(d_shift, a * b, 5) == smul(diamond(d_shift, a, 5), diamond(d_shift, b, 5)));
    CHECK(check_diamond_multiplicative(30, 2, 6).pass);
}

TEST_CASE("comul")
{
    const S f = H({2, 3, 5});
    const auto grid = comul(f, 1);
    REQUIRE(grid.row_count() == 2);
    CHECK(grid.rows[0] == H({2, 3}));
    CHECK(grid.rows[1] == H({3, 5}));
    CHECK(grid.rows[0] == f.truncated(1));
    CHECK(grid.column(0) == f.truncated(1));
    const auto unit = comul(sunit(4, flavor::hurwitz), 2);
    for (std::size_t m = 0; m <= 2; ++m) {
        for (std::size_t n = 0; n <= 2; ++n) {
            CHECK(unit.at(m, n) == Rational(m == 0 && n == 0 ? 1 : 0));
        }
    }
    CHECK_THROWS_AS(comul(f, 3), order_exhausted);
    CHECK_THROWS_AS(comul(f.with_kind(flavor::power), 1), flavor_mismatch);
    CHECK(check_comonad_counit(20, 3, 10).pass);
    CHECK(check_comonad_coassoc(20, 3, 10).pass);
}

TEST_CASE("psi")
{
    CHECK(psi(Pw({1, 1, 1, 1, 1})) == H({1, 1, 2, 6, 24}));
    CHECK(psi_inv(H({1, 1, 2, 6, 24})) == Pw({1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(psi(H({1})), flavor_mismatch);
    CHECK_THROWS_AS(psi_inv(Pw({1})), flavor_mismatch);
    const splitmix64 root(33);
    for (std::uint64_t t = 0; t < 100; ++t) {
        auto rng = root.split(t);
        const auto f = random_series(rng, 8, flavor::power);
        const auto g = random_series(rng, 8, flavor::power);
        const auto image = psi(f);
        for (std::size_t n = 0; n <= 8; ++n) {
            CHECK(oracle::q(image[n]) == oracle::q(f[n]) * oracle::fact(n));
        }
        CHECK(psi_inv(image) == f);
        CHECK(psi(smul(f, g)) == smul(psi(f), psi(g)));
        CHECK(psi(sderive(f)) == sderive(psi(f)));
    }
}

TEST_CASE("colift")
{
    const std::function<Rational(const diff_poly &)> at_zero = [](const diff_poly &p) {
        // Sends (x, 0) to 1 and every (x, n > 0) to 0.
        std::map<dvar, diff_poly> env;
        for (const auto &v : p.variables()) {
            env.emplace(v, v.order == 0 ? diff_poly(1) : diff_poly{});
        }
        return substitute(p, env).constant_term();
    };
    const auto lifted = colift(at_zero, d_shift, parse_diff_poly("x^3"), 4);
    CHECK(lifted == H({1, 0, 0, 0, 0}));
    const std::function<diff_poly(const diff_poly &)> id = [](const diff_poly &p) { return p; };
    const auto p = parse_diff_poly("x*y' - z");
    CHECK(colift(id, d_shift, p, 4) == diamond(d_shift, p, 4));
    CHECK(colift(at_zero, d_shift, parse_diff_poly("2*x + x'"), 3)[0] == at_zero(parse_diff_poly("2*x + x'")));
}

TEST_CASE("series laws through the carrier interface")
{
    for (const auto kind : {flavor::hurwitz, flavor::power}) {
        const auto c = series_carrier(8, kind);
        CHECK(check_chain_rule_random(c, 50, 6).pass);
        CHECK(check_faa_di_bruno_random(c, 5, 50, 6).pass);
        CHECK(check_higher_leibniz(c, 5, 50, 6).pass);
    }
}
