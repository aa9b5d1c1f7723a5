#include <dalg/law_suite.hpp>

#include <functional>

#include <dalg/carriers.hpp>
#include <dalg/rota_baxter.hpp>
#include <dalg/series.hpp>
#include <dalg/text.hpp>

namespace dalg
{

namespace
{

const std::vector<var_name> sym_vars = {"w", "x", "y", "z"};

std::string show(const tensor2_elem &t)
{
    std::string out;
    for (const auto &[k, c] : t.terms()) {
        if (!out.empty()) {
            out += " + ";
        }
        out += to_string(poly::term(c, std::get<0>(k))) + " (x) " + std::get<1>(k) + " (x) " + std::get<2>(k);
    }
    return out.empty() ? "0" : out;
}

std::string show(const series<Rational> &s) { return std::string(flavor_name(s.kind())) + to_string(s.coeffs()); }

std::string show(const std::map<var_name, poly> &f)
{
    std::string out = "{";
    for (const auto &[v, image] : f) {
        if (out.size() > 1) {
            out += ", ";
        }
        out += v + " -> " + to_string(image);
    }
    return out + "}";
}

std::string show(const std::map<var_name, series<Rational>> &env)
{
    std::string out = "{";
    for (const auto &[v, s] : env) {
        if (out.size() > 1) {
            out += ", ";
        }
        out += v + " -> " + show(s);
    }
    return out + "}";
}

law_report start(std::string law, std::string carrier, std::size_t trials, std::uint64_t seed)
{
    law_report r;
    r.law = std::move(law);
    r.carrier = std::move(carrier);
    r.trials = trials;
    r.seed = seed;
    return r;
}

// Runs body(rng, report) once per trial on the split streams until the
// first failure.
law_report run_trials(law_report r, const std::function<void(splitmix64 &, law_report &)> &body)
{
    const splitmix64 root(r.seed);
    for (std::size_t t = 0; t < r.trials && r.pass; ++t) {
        auto rng = root.split(t);
        body(rng, r);
    }
    return r;
}

poly sym_sample(splitmix64 &rng) { return random_poly(rng, sym_vars, 5, 4); }

linear_map random_linear(splitmix64 &rng)
{
    linear_map f;
    for (const auto &v : sym_vars) {
        poly image;
        for (const auto &u : sym_vars) {
            if (rng.coin()) {
                image.add_term(monomial::of(u, 1), rng.small_rational());
            }
        }
        f.emplace(v, std::move(image));
    }
    return f;
}

std::map<var_name, series<Rational>> random_env(splitmix64 &rng, const std::vector<var_name> &vars, std::size_t order,
                                                flavor kind)
{
    std::map<var_name, series<Rational>> env;
    for (const auto &v : vars) {
        env.emplace(v, random_series(rng, order, kind));
    }
    return env;
}

} // namespace

law_report check_d1_constant(std::size_t trials, std::uint64_t seed)
{
    return run_trials(start("d1_constant", "poly", trials, seed), [](splitmix64 &rng, law_report &r) {
        const poly p(rng.small_rational());
        const auto lhs = derive(p);
        if (!lhs.is_zero()) {
            r.fail(counterexample{{{"p", to_string(p)}}, to_string(lhs), "0"});
        }
    });
}

law_report check_d2_leibniz(std::size_t trials, std::uint64_t seed)
{
    return run_trials(start("d2_leibniz", "poly", trials, seed), [](splitmix64 &rng, law_report &r) {
        const auto p = sym_sample(rng);
        const auto q = sym_sample(rng);
        const auto lhs = derive(p * q);
        const auto rhs = p * derive(q) + q * derive(p);
        if (!(lhs == rhs)) {
            r.fail(counterexample{{{"p", to_string(p)}, {"q", to_string(q)}}, to_string(lhs), to_string(rhs)});
        }
    });
}

law_report check_d3_linear(std::size_t trials, std::uint64_t seed)
{
    return run_trials(start("d3_linear", "poly", trials, seed), [](splitmix64 &rng, law_report &r) {
        const auto &v = sym_vars[static_cast<std::size_t>(rng.uniform(0, 3))];
        const auto c = rng.small_rational();
        const auto lhs = derive(c * eta(v));
        const auto rhs = tensor_elem::pure(poly(c), v);
        if (!(lhs == rhs)) {
            r.fail(counterexample{{{"v", v}, {"c", c.str()}}, to_string(lhs), to_string(rhs)});
        }
    });
}

law_report check_d4_chain(std::size_t trials, std::uint64_t seed)
{
    const auto outer = detail::outer_vars(4);
    return run_trials(start("d4_chain", "poly", trials, seed), [&](splitmix64 &rng, law_report &r) {
        const auto p = random_poly(rng, outer, 4, 4);
        std::map<var_name, poly> env;
        for (const auto &x : outer) {
            env.emplace(x, random_poly(rng, sym_vars, 3, 2));
        }
        const auto lhs = derive(substitute(p, env));
        tensor_elem rhs;
        for (const auto &[x, dp] : derive(p).by_variable()) {
            rhs = rhs + substitute(dp, env) * derive(env.at(x));
        }
        if (!(lhs == rhs)) {
            r.fail(counterexample{{{"p", to_string(p)}, {"env", show(env)}}, to_string(lhs), to_string(rhs)});
        }
    });
}

law_report check_d5_interchange(std::size_t trials, std::uint64_t seed)
{
    return run_trials(start("d5_interchange", "poly", trials, seed), [](splitmix64 &rng, law_report &r) {
        const auto p = sym_sample(rng);
        const auto lhs = derive2(p);
        const auto rhs = lhs.swap_slots();
        if (!(lhs == rhs)) {
            r.fail(counterexample{{{"p", to_string(p)}}, show(lhs), show(rhs)});
        }
    });
}

law_report check_derive_naturality(std::size_t trials, std::uint64_t seed)
{
    return run_trials(start("derive_naturality", "poly", trials, seed), [](splitmix64 &rng, law_report &r) {
        const auto p = sym_sample(rng);
        const auto f = random_linear(rng);
        const auto lhs = derive(map_linear(p, f));
        const auto rhs = map_tensor(derive(p), f);
        if (!(lhs == rhs)) {
            r.fail(counterexample{{{"p", to_string(p)}, {"f", show(f)}}, to_string(lhs), to_string(rhs)});
        }
    });
}

law_report check_euler_exhaustive(unsigned max_degree, std::size_t n_vars)
{
    auto r = start("euler", "poly", 0, 0);
    std::vector<var_name> vars;
    for (std::size_t i = 0; i < n_vars; ++i) {
        vars.push_back("x" + std::to_string(i + 1));
    }
    std::vector<unsigned> exps(n_vars, 0);
    std::function<void(std::size_t, unsigned)> visit = [&](std::size_t i, unsigned left) {
        if (!r.pass) {
            return;
        }
        if (i == n_vars) {
            std::vector<monomial::factor> factors;
            unsigned deg = 0;
            for (std::size_t j = 0; j < n_vars; ++j) {
                if (exps[j] > 0) {
                    factors.emplace_back(vars[j], exps[j]);
                }
                deg += exps[j];
            }
            const auto m = poly::term(Rational(1), monomial(std::move(factors)));
            const auto lhs = euler(m);
            const auto rhs = Rational(static_cast<long>(deg)) * m;
            ++r.trials;
            if (!(lhs == rhs)) {
                r.fail(counterexample{{{"m", to_string(m)}}, to_string(lhs), to_string(rhs)});
            }
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            exps[i] = e;
            visit(i + 1, left - e);
        }
        exps[i] = 0;
    };
    visit(0, max_degree);
    r.note = "degree <= " + std::to_string(max_degree) + " in " + std::to_string(n_vars) + " variables";
    return r;
}

law_report check_flat_sharp(std::size_t trials, std::uint64_t seed)
{
    return run_trials(start("flat_sharp", "poly", trials, seed), [](splitmix64 &rng, law_report &r) {
        std::map<var_name, poly> f;
        for (const auto &v : sym_vars) {
            f.emplace(v, random_poly(rng, sym_vars, 3, 2));
        }
        const auto p = random_poly(rng, sym_vars, 4, 3);
        const auto q = random_poly(rng, sym_vars, 4, 3);
        const auto fail = [&](const std::string &clause, const poly &lhs, const poly &rhs) {
            r.fail(counterexample{{{"clause", clause}, {"f", show(f)}, {"p", to_string(p)}, {"q", to_string(q)}},
                                  to_string(lhs),
                                  to_string(rhs)});
        };
        for (const auto &v : sym_vars) {
            const auto lhs = flat(f, eta(v));
            if (!(lhs == f.at(v))) {
                return fail("flat(f, " + v + ") = f(" + v + ")", lhs, f.at(v));
            }
        }
        {
            const auto lhs = flat(f, p * q);
            const auto rhs = p * flat(f, q) + q * flat(f, p);
            if (!(lhs == rhs)) {
                return fail("flat(f, pq) = p flat(f, q) + q flat(f, p)", lhs, rhs);
            }
        }
        {
            const auto outer = detail::outer_vars(3);
            const auto big = random_poly(rng, outer, 3, 3);
            std::map<var_name, poly> env;
            for (const auto &x : outer) {
                env.emplace(x, random_poly(rng, sym_vars, 3, 2));
            }
            const auto lhs = flat(f, substitute(big, env));
            poly rhs;
            for (const auto &[x, dp] : derive(big).by_variable()) {
                rhs += substitute(dp, env) * flat(f, env.at(x));
            }
            if (!(lhs == rhs)) {
                return fail("flat(f, P(q)) = sum_j (dP/dX_j)(q) flat(f, q_j) with P = " + to_string(big) + ", q = "
                                + show(env),
                            lhs,
                            rhs);
            }
        }
        {
            linear_map id;
            for (const auto &v : sym_vars) {
                id.emplace(v, eta(v));
            }
            const auto lhs = sharp(id, p);
            const auto rhs = euler(p);
            if (!(lhs == rhs)) {
                return fail("sharp(1, p) = L(p)", lhs, rhs);
            }
        }
        {
            const auto g = random_linear(rng);
            const auto lhs = sharp(g, p);
            const auto rhs = flat(g, p);
            if (!(lhs == rhs)) {
                return fail("sharp(g, p) = flat(g, p) with g = " + show(g), lhs, rhs);
            }
        }
    });
}

law_report check_dshift_oracle(std::size_t trials, std::uint64_t seed)
{
    return run_trials(start("d_shift_vs_sharp", "diffpoly", trials, seed), [](splitmix64 &rng, law_report &r) {
        const auto p = random_diff_poly(rng, 4);
        const auto lhs = d_shift(p);
        const auto rhs = d_shift_via_sharp(p);
        if (!(lhs == rhs)) {
            r.fail(counterexample{{{"p", to_string(p)}}, to_string(lhs), to_string(rhs)});
        }
    });
}

law_report check_dshift_grading(std::size_t trials, std::uint64_t seed)
{
    return run_trials(start("d_shift_grading", "diffpoly", trials, seed), [](splitmix64 &rng, law_report &r) {
        const auto p = random_diff_poly(rng, 4);
        for (const auto &[m, c] : p.terms()) {
            const auto shifted = d_shift(diff_poly::term(c, m));
            for (const auto &[n, cn] : shifted.terms()) {
                if (n.degree() != m.degree() || order_weight(n) != order_weight(m) + 1) {
                    r.fail(counterexample{{{"monomial", to_string(diff_poly::term(c, m))}},
                                          to_string(diff_poly::term(cn, n)),
                                          "degree " + std::to_string(m.degree()) + ", weight "
                                              + std::to_string(order_weight(m) + 1)});
                    return;
                }
            }
        }
    });
}

diff_poly random_nested(splitmix64 &rng, std::size_t depth)
{
    if (depth <= 1) {
        return random_diff_poly(rng, 2);
    }
    std::vector<dvar> vars;
    for (int i = 0; i < 2; ++i) {
        vars.push_back(dvar{encode_nested(random_nested(rng, depth - 1)), static_cast<std::size_t>(rng.uniform(0, 2))});
    }
    diff_poly out;
    const auto n_terms = rng.uniform(1, 2);
    for (std::int64_t t = 0; t < n_terms; ++t) {
        const auto deg = rng.uniform(1, 2);
        std::vector<diff_monomial::factor> factors;
        for (std::int64_t i = 0; i < deg; ++i) {
            factors.emplace_back(vars[static_cast<std::size_t>(rng.uniform(0, 1))], 1);
        }
        out.add_term(diff_monomial(std::move(factors)), rng.small_nonzero_rational());
    }
    return out;
}

law_report check_monad_left_unit(std::size_t trials, std::uint64_t seed)
{
    return run_trials(start("monad_alpha_beta", "diffpoly", trials, seed), [](splitmix64 &rng, law_report &r) {
        for (std::size_t depth : {1, 2}) {
            const auto q = random_nested(rng, depth);
            const auto lhs = beta(nest_generator(q));
            if (!(lhs == q)) {
                r.fail(counterexample{{{"q", to_string(q)}, {"depth", std::to_string(depth)}}, to_string(lhs),
                                      to_string(q)});
                return;
            }
        }
    });
}

law_report check_monad_right_unit(std::size_t trials, std::uint64_t seed)
{
    return run_trials(start("monad_B_alpha_beta", "diffpoly", trials, seed), [](splitmix64 &rng, law_report &r) {
        for (std::size_t depth : {1, 2}) {
            const auto q = random_nested(rng, depth);
            const auto lifted = depth == 1 ? map_alpha(q) : map_nested(q, nest_generator);
            const auto lhs = beta(lifted);
            if (!(lhs == q)) {
                r.fail(counterexample{{{"q", to_string(q)}, {"depth", std::to_string(depth)}}, to_string(lhs),
                                      to_string(q)});
                return;
            }
        }
    });
}

law_report check_monad_assoc(std::size_t trials, std::uint64_t seed)
{
    return run_trials(start("monad_assoc", "diffpoly", trials, seed), [](splitmix64 &rng, law_report &r) {
        const auto q = random_nested(rng, 3);
        const auto lhs = beta(map_nested(q, beta));
        const auto rhs = beta(beta(q));
        if (!(lhs == rhs)) {
            r.fail(counterexample{{{"q", to_string(q)}}, to_string(lhs), to_string(rhs)});
        }
    });
}

law_report check_extend_morphism(std::size_t trials, std::uint64_t seed)
{
    const auto c = series_carrier(8, flavor::hurwitz);
    return run_trials(start("extend_morphism", c.name, trials, seed), [&](splitmix64 &rng, law_report &r) {
        const auto f = random_env(rng, {"x", "y", "z"}, 8, flavor::hurwitz);
        const auto p = random_diff_poly(rng, 3);
        const auto q = random_diff_poly(rng, 3);
        const auto fail = [&](const std::string &clause, const series<Rational> &lhs, const series<Rational> &rhs) {
            r.fail(counterexample{{{"clause", clause}, {"f", show(f)}, {"p", to_string(p)}, {"q", to_string(q)}},
                                  show(lhs),
                                  show(rhs)});
        };
        const auto ep = extend(f, c, p);
        {
            const auto lhs = extend(f, c, d_shift(p));
            const auto rhs = sderive(ep);
            if (!c.equal(lhs, rhs)) {
                return fail("extend(D p) = D extend(p)", lhs, rhs);
            }
        }
        {
            const auto lhs = extend(f, c, p * q);
            const auto rhs = c.mul(ep, extend(f, c, q));
            if (!c.equal(lhs, rhs)) {
                return fail("extend(p q) = extend(p) extend(q)", lhs, rhs);
            }
        }
        for (const auto &[x, s] : f) {
            const auto lhs = extend(f, c, dv(x));
            if (!c.equal(lhs, s)) {
                return fail("extend((" + x + ", 0)) = f(" + x + ")", lhs, s);
            }
        }
    });
}

namespace
{

law_report component_oracle(const std::string &law, flavor kind, std::size_t trials, std::uint64_t seed,
                            std::size_t order, std::size_t n_max)
{
    const auto c = series_carrier(order, kind);
    auto r = start(law, c.name, trials, seed);
    r.note = "n <= " + std::to_string(n_max) + ", order " + std::to_string(order);
    const auto vars = detail::outer_vars(3);
    return run_trials(r, [&](splitmix64 &rng, law_report &rep) {
        const auto p = random_poly(rng, vars, 4, 3);
        const auto env = random_env(rng, vars, order, kind);
        const auto ring = evaluate(p, env, c);
        for (std::size_t n = 0; n <= n_max; ++n) {
            const auto lhs = kind == flavor::hurwitz ? omega_eval(p, env, n) : delta_eval(p, env, n);
            if (!(lhs == ring[n])) {
                rep.fail(counterexample{{{"p", to_string(p)}, {"env", show(env)}, {"n", std::to_string(n)}},
                                        lhs.str(),
                                        ring[n].str()});
                return;
            }
        }
    });
}

} // namespace

law_report check_omega_oracle(std::size_t trials, std::uint64_t seed, std::size_t order, std::size_t n_max)
{
    return component_oracle("omega_vs_ring", flavor::hurwitz, trials, seed, order, n_max);
}

law_report check_delta_oracle(std::size_t trials, std::uint64_t seed, std::size_t order, std::size_t n_max)
{
    return component_oracle("delta_vs_ring", flavor::power, trials, seed, order, n_max);
}

law_report check_omega_clauses(std::size_t trials, std::uint64_t seed, std::size_t order, std::size_t n_max)
{
    auto r = start("component_clauses", "hurwitz_series+power_series", trials, seed);
    r.note = "unit, generator and product clauses for n <= " + std::to_string(n_max);
    const auto vars = detail::outer_vars(3);
    return run_trials(r, [&](splitmix64 &rng, law_report &rep) {
        for (const auto kind : {flavor::hurwitz, flavor::power}) {
            const auto env = random_env(rng, vars, order, kind);
            const auto p = random_poly(rng, vars, 3, 2);
            const auto q = random_poly(rng, vars, 3, 2);
            const auto eval = [&](const poly &e, std::size_t n) {
                return kind == flavor::hurwitz ? omega_eval(e, env, n) : delta_eval(e, env, n);
            };
            const auto fail = [&](const std::string &clause, std::size_t n, const Rational &lhs, const Rational &rhs) {
                rep.fail(counterexample{{{"clause", clause},
                                         {"flavor", flavor_name(kind)},
                                         {"env", show(env)},
                                         {"p", to_string(p)},
                                         {"q", to_string(q)},
                                         {"n", std::to_string(n)}},
                                        lhs.str(),
                                        rhs.str()});
            };
            for (std::size_t n = 0; n <= n_max; ++n) {
                const auto unit = eval(poly(1), n);
                const Rational unit_expected(n == 0 ? 1 : 0);
                if (!(unit == unit_expected)) {
                    return fail("unit", n, unit, unit_expected);
                }
                for (const auto &x : vars) {
                    const auto gen = eval(eta(x), n);
                    if (!(gen == env.at(x)[n])) {
                        return fail("generator " + x, n, gen, env.at(x)[n]);
                    }
                }
                const auto prod = eval(p * q, n);
                Rational expected;
                for (std::size_t k = 0; k <= n; ++k) {
                    auto t = eval(p, k) * eval(q, n - k);
                    if (kind == flavor::hurwitz) {
                        t = Rational(binom(n, k)) * t;
                    }
                    expected = expected + t;
                }
                if (!(prod == expected)) {
                    return fail("product", n, prod, expected);
                }
            }
        }
    });
}

law_report check_psi_roundtrip(std::size_t trials, std::uint64_t seed, std::size_t order)
{
    return run_trials(start("psi_roundtrip", "power_series", trials, seed), [&](splitmix64 &rng, law_report &r) {
        const auto f = random_series(rng, order, flavor::power);
        const auto h = random_series(rng, order, flavor::hurwitz);
        const auto back = psi_inv(psi(f));
        if (!(back == f)) {
            r.fail(counterexample{{{"f", show(f)}}, show(back), show(f)});
            return;
        }
        const auto forth = psi(psi_inv(h));
        if (!(forth == h)) {
            r.fail(counterexample{{{"h", show(h)}}, show(forth), show(h)});
        }
    });
}

law_report check_psi_multiplicative(std::size_t trials, std::uint64_t seed, std::size_t order)
{
    return run_trials(start("psi_multiplicative", "power_series", trials, seed), [&](splitmix64 &rng, law_report &r) {
        const auto f = random_series(rng, order, flavor::power);
        const auto g = random_series(rng, order, flavor::power);
        const auto lhs = psi(smul(f, g));
        const auto rhs = smul(psi(f), psi(g));
        if (!(lhs == rhs)) {
            r.fail(counterexample{{{"f", show(f)}, {"g", show(g)}}, show(lhs), show(rhs)});
            return;
        }
        const auto unit = psi(sunit(order, flavor::power));
        if (!(unit == sunit(order, flavor::hurwitz))) {
            r.fail(counterexample{{{"f", "1"}}, show(unit), show(sunit(order, flavor::hurwitz))});
        }
    });
}

law_report check_psi_intertwines(std::size_t trials, std::uint64_t seed, std::size_t order)
{
    return run_trials(start("psi_intertwines", "power_series", trials, seed), [&](splitmix64 &rng, law_report &r) {
        const auto f = random_series(rng, order, flavor::power);
        const auto lhs = psi(sderive(f));
        const auto rhs = sderive(psi(f));
        if (!(lhs == rhs)) {
            r.fail(counterexample{{{"f", show(f)}}, show(lhs), show(rhs)});
        }
    });
}

law_report check_comonad_counit(std::size_t trials, std::uint64_t seed, std::size_t order)
{
    return run_trials(start("comonad_counit", "hurwitz_series", trials, seed), [&](splitmix64 &rng, law_report &r) {
        const auto f = random_series(rng, order, flavor::hurwitz);
        for (std::size_t rows = 0; rows <= order; ++rows) {
            const auto grid = comul(f, rows);
            const auto first_row = grid.rows.front();
            const auto first_col = grid.column(0);
            if (!(first_row == f.truncated(order - rows))) {
                r.fail(counterexample{{{"f", show(f)}, {"rows", std::to_string(rows)}, {"side", "row 0"}},
                                      show(first_row),
                                      show(f.truncated(order - rows))});
                return;
            }
            if (!(first_col == f.truncated(rows))) {
                r.fail(counterexample{{{"f", show(f)}, {"rows", std::to_string(rows)}, {"side", "column 0"}},
                                      show(first_col),
                                      show(f.truncated(rows))});
                return;
            }
        }
    });
}

// Both composites give h[i][j][k] = f(i + j + k) on i <= a, j <= b,
// k <= order - a - b: comultiply, then comultiply each row, versus
// comultiply with a + b rows, then comultiply the series of rows.
law_report check_comonad_coassoc(std::size_t trials, std::uint64_t seed, std::size_t order)
{
    return run_trials(start("comonad_coassoc", "hurwitz_series", trials, seed), [&](splitmix64 &rng, law_report &r) {
        const auto f = random_series(rng, order, flavor::hurwitz);
        for (std::size_t a = 0; a <= order; ++a) {
            for (std::size_t b = 0; a + b <= order; ++b) {
                const auto outer = comul(f, a);
                std::vector<series_grid<Rational>> by_rows;
                for (const auto &row : outer.rows) {
                    by_rows.push_back(comul(row, b));
                }
                const series<series<Rational>> row_series(comul(f, a + b).rows, flavor::hurwitz);
                const auto nested = comul(row_series, a);
                for (std::size_t i = 0; i <= a; ++i) {
                    for (std::size_t j = 0; j <= b; ++j) {
                        for (std::size_t k = 0; k + a + b <= order; ++k) {
                            const auto &lhs = by_rows[i].at(j, k);
                            const auto &rhs = nested.at(i, j).at(k);
                            if (!(lhs == rhs)) {
                                r.fail(counterexample{{{"f", show(f)},
                                                       {"a", std::to_string(a)},
                                                       {"b", std::to_string(b)},
                                                       {"index", std::to_string(i) + "," + std::to_string(j) + ","
                                                                     + std::to_string(k)}},
                                                      lhs.str(),
                                                      rhs.str()});
                                return;
                            }
                        }
                    }
                }
            }
        }
    });
}

law_report check_diamond_multiplicative(std::size_t trials, std::uint64_t seed, std::size_t order)
{
    return run_trials(start("diamond_multiplicative", "diffpoly", trials, seed), [&](splitmix64 &rng, law_report &r) {
        const auto a = random_diff_poly(rng, 2);
        const auto b = random_diff_poly(rng, 2);
        const auto lhs = diamond(d_shift, a * b, order);
        const auto rhs = smul(diamond(d_shift, a, order), diamond(d_shift, b, order));
        for (std::size_t n = 0; n <= order; ++n) {
            if (!(lhs[n] == rhs[n])) {
                r.fail(counterexample{{{"a", to_string(a)}, {"b", to_string(b)}, {"n", std::to_string(n)}},
                                      to_string(lhs[n]),
                                      to_string(rhs[n])});
                return;
            }
        }
    });
}

law_report check_shuffle_counts(std::size_t max_len)
{
    auto r = start("shuffle_count", "rota_baxter", 0, 0);
    r.note = "|u|, |v| <= " + std::to_string(max_len);
    for (std::size_t lu = 0; lu <= max_len && r.pass; ++lu) {
        for (std::size_t lv = 0; lv <= max_len && r.pass; ++lv) {
            ++r.trials;
            rb_word u;
            rb_word v;
            rb_word repeated_u(lu, monomial::of("x", 1));
            rb_word repeated_v(lv, monomial::of("x", 1));
            for (std::size_t i = 0; i < lu; ++i) {
                u.push_back(monomial::of("a" + std::to_string(i), 1));
            }
            for (std::size_t i = 0; i < lv; ++i) {
                v.push_back(monomial::of("b" + std::to_string(i), 1));
            }
            const Rational expected(binom(lu + lv, lu));
            const auto distinct = shuffle(u, v);
            const auto repeated = shuffle(repeated_u, repeated_v);
            const Rational distinct_terms(static_cast<long>(distinct.terms().size()));
            const auto inputs = std::vector<std::pair<std::string, std::string>>{{"|u|", std::to_string(lu)},
                                                                               {"|v|", std::to_string(lv)}};
            if (!(distinct_terms == expected) || !(distinct.total_weight() == expected)) {
                r.fail(counterexample{inputs, distinct_terms.str() + " terms, weight " + distinct.total_weight().str(),
                                      expected.str()});
            } else if (repeated.terms().size() != 1 || !(repeated.total_weight() == expected)) {
                r.fail(counterexample{inputs, to_string(repeated), expected.str() + " * (x^" + std::to_string(lu + lv)
                                                                        + ")"});
            }
        }
    }
    return r;
}

namespace
{

template <typename T>
void carrier_checks(std::vector<law_report> &out, const diff_carrier<T> &c, std::uint64_t seed, std::size_t trials,
                    bool with_chain_rule)
{
    out.push_back(check_constant_rule(c, trials, seed));
    out.push_back(check_leibniz(c, trials, seed));
    out.push_back(check_higher_leibniz(c, 5, trials, seed));
    if (with_chain_rule) {
        out.push_back(check_chain_rule_random(c, trials, seed));
        out.push_back(check_faa_di_bruno_random(c, 5, trials, seed));
        out.push_back(check_derivation_monoid<T>(c, c.derive, c.derive, trials, seed));
    }
    out.push_back(check_kernel_closure(c, trials, seed));
}

} // namespace

std::vector<law_report> run_law_suite(std::uint64_t seed, std::size_t trials)
{
    std::vector<law_report> out;
    carrier_checks(out, diffpoly_carrier(), seed, trials, true);
    carrier_checks(out, poly_sharp_carrier(default_sharp_map()), seed, trials, true);
    carrier_checks(out, series_carrier(8, flavor::hurwitz), seed, trials, true);
    carrier_checks(out, series_carrier(8, flavor::power), seed, trials, true);
    carrier_checks(out, rb_carrier(), seed, trials, false);

    out.push_back(check_d1_constant(trials, seed));
    out.push_back(check_d2_leibniz(trials, seed));
    out.push_back(check_d3_linear(trials, seed));
    out.push_back(check_d4_chain(trials, seed));
    out.push_back(check_d5_interchange(trials, seed));
    out.push_back(check_derive_naturality(trials, seed));
    out.push_back(check_flat_sharp(trials, seed));
    out.push_back(check_euler_exhaustive(6, 3));

    out.push_back(check_dshift_oracle(trials, seed));
    out.push_back(check_dshift_grading(trials, seed));
    out.push_back(check_monad_left_unit(trials, seed));
    out.push_back(check_monad_right_unit(trials, seed));
    out.push_back(check_monad_assoc(trials, seed));
    out.push_back(check_extend_morphism(trials, seed));

    out.push_back(check_omega_oracle(trials, seed, 8, 6));
    out.push_back(check_delta_oracle(trials, seed, 8, 6));
    out.push_back(check_omega_clauses(trials, seed, 8, 6));
    out.push_back(check_psi_roundtrip(trials, seed, 8));
    out.push_back(check_psi_multiplicative(trials, seed, 8));
    out.push_back(check_psi_intertwines(trials, seed, 8));
    out.push_back(check_comonad_counit(trials, seed, 10));
    out.push_back(check_comonad_coassoc(trials, seed, 10));
    out.push_back(check_diamond_multiplicative(trials, seed, 6));

    out.push_back(check_rota_baxter(trials, seed));
    out.push_back(check_d_after_p(trials, seed));
    out.push_back(check_raw_leibniz(trials, seed));
    out.push_back(check_shuffle_counts(4));
    return out;
}

} // namespace dalg
