#include <dalg/cli.hpp>

#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <dalg/carriers.hpp>
#include <dalg/json_io.hpp>
#include <dalg/law_suite.hpp>
#include <dalg/rota_baxter.hpp>
#include <dalg/series.hpp>
#include <dalg/text.hpp>

namespace dalg::cli
{

namespace
{

using json = nlohmann::json;

struct usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct options {
    std::size_t n = 1;
    std::size_t order = 8;
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    std::string format = "text";
    std::string from;
    std::string to;
    std::string env;
    bool nested = false;
    std::vector<std::string> args;
};

struct context {
    const options &opt;
    std::istream &in;
    std::ostream &out;

    bool as_json() const { return opt.format == "json"; }

    // Positional i, with "-" read from stdin.
    std::string arg(std::size_t i, const char *what) const
    {
        if (i >= opt.args.size()) {
            throw usage(std::string("missing ") + what);
        }
        if (opt.args[i] != "-") {
            return opt.args[i];
        }
        std::string s{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
        while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) {
            s.pop_back();
        }
        return s;
    }

    void expect_args(std::size_t lo, std::size_t hi) const
    {
        if (opt.args.size() < lo || opt.args.size() > hi) {
            throw usage("expected " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi))
                        + " arguments, got " + std::to_string(opt.args.size()));
        }
    }

    void emit(const json &j) const
    {
        json doc = {{"schema", json_schema_version}};
        doc.update(j);
        out << doc.dump() << '\n';
    }
};

flavor flavor_from(const std::string &name)
{
    if (name == "hurwitz") {
        return flavor::hurwitz;
    }
    if (name == "power") {
        return flavor::power;
    }
    throw usage("unknown series flavor '" + name + "' (expected hurwitz or power)");
}

json parse_json(const std::string &text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw usage(std::string("invalid JSON: ") + e.what());
    }
}

int do_diff(const context &c)
{
    c.expect_args(1, 1);
    const auto input = c.arg(0, "expression");
    const diff_poly p = c.opt.nested ? beta(nested_from_json(parse_json(input))) : parse_diff_poly(input);
    const auto result = d_shift_n(p, c.opt.n);
    if (c.as_json()) {
        c.emit({{"input", to_string(p)}, {"n", c.opt.n}, {"result", to_string(result)}});
    } else {
        c.out << to_string(result) << '\n';
    }
    return ok;
}

int do_mul(const context &c)
{
    if (c.opt.args.empty()) {
        throw usage("mul needs at least one expression");
    }
    diff_poly result(1);
    for (std::size_t i = 0; i < c.opt.args.size(); ++i) {
        result *= parse_diff_poly(c.arg(i, "expression"));
    }
    if (c.as_json()) {
        c.emit({{"result", to_string(result)}});
    } else {
        c.out << to_string(result) << '\n';
    }
    return ok;
}

// eval EXPR ENV: ENV maps variable names to series objects (or bare lists,
// read in the flavor given by --from, default hurwitz).
int do_eval(const context &c)
{
    c.expect_args(1, 2);
    const auto p = parse_poly(c.arg(0, "expression"));
    const auto env_text = c.opt.args.size() == 2 ? c.arg(1, "environment") : c.opt.env;
    if (env_text.empty()) {
        throw usage("eval needs a JSON environment (second argument or --env)");
    }
    const auto env_json = parse_json(env_text);
    if (!env_json.is_object()) {
        throw usage("the environment must be a JSON object");
    }
    const auto default_kind = c.opt.from.empty() ? flavor::hurwitz : flavor_from(c.opt.from);
    std::map<var_name, series<Rational>> env;
    for (const auto &[name, value] : env_json.items()) {
        if (value.is_array()) {
            std::vector<Rational> coeffs;
            for (const auto &v : value) {
                coeffs.push_back(rational_from_json(v));
            }
            env.emplace(name, series<Rational>(std::move(coeffs), default_kind));
        } else {
            env.emplace(name, series_from_json(value));
        }
    }
    flavor kind = default_kind;
    std::size_t top = c.opt.order;
    bool first = true;
    for (const auto &[name, s] : env) {
        if (first) {
            kind = s.kind();
            first = false;
        } else if (s.kind() != kind) {
            throw flavor_mismatch("environment mixes hurwitz and power series");
        }
        top = std::min(top, s.order());
    }
    for (auto &[name, s] : env) {
        s = s.truncated(top);
    }
    const auto ring = evaluate(p, env, series_carrier(top, kind));
    json components = json::array();
    bool agree = true;
    for (std::size_t n = 0; n <= top; ++n) {
        const auto rec = kind == flavor::hurwitz ? omega_eval(p, env, n) : delta_eval(p, env, n);
        agree = agree && rec == ring[n];
        components.push_back({{"n", n}, {"recursion", rec.str()}, {"ring", ring[n].str()}});
    }
    if (c.as_json()) {
        c.emit({{"flavor", flavor_name(kind)}, {"order", top}, {"components", components}, {"agree", agree}});
    } else {
        for (const auto &row : components) {
            c.out << "n=" << row["n"].get<std::size_t>() << " recursion=" << row["recursion"].get<std::string>()
                  << " ring=" << row["ring"].get<std::string>() << '\n';
        }
    }
    return ok;
}

series<Rational> series_arg(const context &c, std::size_t i, flavor kind)
{
    auto coeffs = parse_rational_list(c.arg(i, "series"));
    if (coeffs.size() > c.opt.order + 1) {
        coeffs.resize(c.opt.order + 1);
    }
    return series<Rational>(std::move(coeffs), kind);
}

void print_series(const context &c, const series<Rational> &s)
{
    if (c.as_json()) {
        c.emit(to_json(s));
    } else {
        c.out << to_string(s.coeffs()) << '\n';
    }
}

// hurwitz|power OP ARGS: add A B, mul A B, derive A, scale C A.
int do_series(const context &c, flavor kind)
{
    if (c.opt.args.empty()) {
        throw usage("missing series operation (add, mul, derive, scale)");
    }
    const auto &op = c.opt.args[0];
    const auto shorter = [](const series<Rational> &a, const series<Rational> &b) {
        const auto n = std::min(a.order(), b.order());
        return std::make_pair(a.truncated(n), b.truncated(n));
    };
    if (op == "add" || op == "mul") {
        c.expect_args(3, 3);
        const auto [a, b] = shorter(series_arg(c, 1, kind), series_arg(c, 2, kind));
        print_series(c, op == "add" ? sadd(a, b) : smul(a, b));
    } else if (op == "derive") {
        c.expect_args(2, 2);
        auto s = series_arg(c, 1, kind);
        for (std::size_t i = 0; i < c.opt.n; ++i) {
            s = sderive(s);
        }
        print_series(c, s);
    } else if (op == "scale") {
        c.expect_args(3, 3);
        print_series(c, sscale(Rational::parse(c.arg(1, "scalar")), series_arg(c, 2, kind)));
    } else {
        throw usage("unknown series operation '" + op + "'");
    }
    return ok;
}

int do_psi(const context &c)
{
    c.expect_args(1, 1);
    if (c.opt.from.empty() && c.opt.to.empty()) {
        throw usage("psi needs --from or --to");
    }
    const auto from = !c.opt.from.empty() ? flavor_from(c.opt.from)
                                          : (flavor_from(c.opt.to) == flavor::power ? flavor::hurwitz : flavor::power);
    if (!c.opt.to.empty() && flavor_from(c.opt.to) == from) {
        throw usage("--from and --to name the same flavor");
    }
    const series<Rational> s(parse_rational_list(c.arg(0, "series")), from);
    print_series(c, from == flavor::power ? psi(s) : psi_inv(s));
    return ok;
}

int do_laws(const context &c)
{
    c.expect_args(0, 0);
    const auto reports = run_law_suite(c.opt.seed, c.opt.trials);
    bool all = true;
    json list = json::array();
    for (const auto &r : reports) {
        all = all && r.pass;
        list.push_back(to_json(r));
    }
    if (c.as_json()) {
        c.emit({{"seed", c.opt.seed}, {"trials", c.opt.trials}, {"pass", all}, {"reports", list}});
    } else {
        for (const auto &j : list) {
            c.out << j.dump() << '\n';
        }
    }
    return all ? ok : law_failure;
}

// rb OP JSON...: shuffle U V, mul A B, P A, D A, D_raw A.
int do_rb(const context &c)
{
    if (c.opt.args.empty()) {
        throw usage("missing rb operation (shuffle, mul, P, D, D_raw)");
    }
    const auto &op = c.opt.args[0];
    const auto elem = [&](std::size_t i) { return rb_elem_from_json(parse_json(c.arg(i, "element"))); };
    const auto print = [&](const auto &value) {
        if (c.as_json()) {
            c.emit(to_json(value));
        } else {
            c.out << to_string(value) << '\n';
        }
    };
    if (op == "shuffle") {
        c.expect_args(3, 3);
        print(shuffle(word_from_json(parse_json(c.arg(1, "word"))), word_from_json(parse_json(c.arg(2, "word")))));
    } else if (op == "mul") {
        c.expect_args(3, 3);
        print(rb_mul(elem(1), elem(2)));
    } else if (op == "P") {
        c.expect_args(2, 2);
        print(rb_P(elem(1)));
    } else if (op == "D") {
        c.expect_args(2, 2);
        print(rb_D(elem(1)));
    } else if (op == "D_raw") {
        c.expect_args(2, 2);
        print(rb_D_raw(elem(1)));
    } else {
        throw usage("unknown rb operation '" + op + "'");
    }
    return ok;
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err)
{
    options opt;
    CLI::App app{"Exact computations in differential algebra", "dalg"};
    app.require_subcommand(1);
    const std::vector<std::pair<std::string, std::string>> verbs = {
        {"diff", "Apply the free derivation --n times"},
        {"mul", "Multiply differential polynomials"},
        {"eval", "Component recursion against ring evaluation"},
        {"hurwitz", "Hurwitz series arithmetic: add, mul, derive, scale"},
        {"power", "Power series arithmetic: add, mul, derive, scale"},
        {"psi", "Convert between power and Hurwitz series"},
        {"laws", "Run the law suite"},
        {"rb", "Rota-Baxter operations: shuffle, mul, P, D, D_raw"},
    };
    for (const auto &[name, help] : verbs) {
        auto *sub = app.add_subcommand(name, help);
        // Positionals are collected as extras so that "[1,2]" is not split.
        sub->allow_extras();
        sub->add_option("--n", opt.n, "Number of derivative applications")->capture_default_str();
        sub->add_option("--order", opt.order, "Series truncation order")->capture_default_str();
        sub->add_option("--seed", opt.seed, "Seed for the law suite")->capture_default_str();
        sub->add_option("--trials", opt.trials, "Trials per law")->capture_default_str()->check(CLI::PositiveNumber);
        sub->add_option("--format", opt.format, "Output format")
            ->capture_default_str()
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--from", opt.from, "Source series flavor")->check(CLI::IsMember({"hurwitz", "power"}));
        sub->add_option("--to", opt.to, "Target series flavor")->check(CLI::IsMember({"hurwitz", "power"}));
        sub->add_option("--env", opt.env, "JSON environment for eval");
        sub->add_flag("--nested", opt.nested, "diff: read a nested JSON element and flatten it first");
    }

    std::vector<const char *> argv{"dalg"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    const auto *sub = app.get_subcommands().front();
    opt.args = sub->remaining();
    for (const auto &a : opt.args) {
        if (a.size() > 2 && a.starts_with("--")) {
            err << "unknown option " << a << "\nRun with --help for more information.\n";
            return usage_error;
        }
    }
    const context c{opt, in, out};
    const auto verb = sub->get_name();
    try {
        if (verb == "diff") {
            return do_diff(c);
        }
        if (verb == "mul") {
            return do_mul(c);
        }
        if (verb == "eval") {
            return do_eval(c);
        }
        if (verb == "hurwitz" || verb == "power") {
            return do_series(c, flavor_from(verb));
        }
        if (verb == "psi") {
            return do_psi(c);
        }
        if (verb == "laws") {
            return do_laws(c);
        }
        return do_rb(c);
    } catch (const syntax_error &e) {
        err << "syntax error: " << e.what() << '\n';
    } catch (const mode_error &e) {
        err << "mode error: " << e.what() << '\n';
    } catch (const usage &e) {
        err << "usage: " << e.what() << '\n';
    } catch (const error &e) {
        err << "error: " << e.what() << '\n';
    } catch (const json::exception &e) {
        err << "invalid input: " << e.what() << '\n';
    } catch (const std::invalid_argument &e) {
        err << "invalid input: " << e.what() << '\n';
    } catch (const std::domain_error &e) {
        err << "invalid input: " << e.what() << '\n';
    }
    return usage_error;
}

} // namespace dalg::cli
