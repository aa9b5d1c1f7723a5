#include <dalg/text.hpp>

#include <algorithm>
#include <cctype>
#include <vector>

namespace dalg
{

namespace
{

std::string join_expected(const std::vector<std::string> &expected)
{
    std::string s;
    for (const auto &e : expected) {
        s += (s.empty() ? "" : ", ") + e;
    }
    return s;
}

class parser
{
public:
    parser(std::string_view input, parse_mode mode) : in_(input), mode_(mode) {}

    expr parse_all()
    {
        auto e = parse_expr();
        skip_ws();
        if (pos_ != in_.size()) {
            fail({"'+'", "'-'", "'*'", "'^'", "end of input"});
        }
        return e;
    }

private:
    std::string_view in_;
    parse_mode mode_;
    std::size_t pos_ = 0;

    void skip_ws()
    {
        while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) {
            ++pos_;
        }
    }

    char peek()
    {
        skip_ws();
        return pos_ < in_.size() ? in_[pos_] : '\0';
    }

    [[noreturn]] void fail(std::vector<std::string> expected)
    {
        std::string found = pos_ < in_.size() ? std::string("'") + in_[pos_] + "'" : "end of input";
        throw syntax_error(pos_ + 1, std::move(expected), found);
    }

    void expect(char c)
    {
        if (peek() != c) {
            fail({std::string("'") + c + "'"});
        }
        ++pos_;
    }

    unsigned parse_nat()
    {
        skip_ws();
        const auto start = pos_;
        while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail({"natural number"});
        }
        const auto digits = in_.substr(start, pos_ - start);
        if (digits.size() > 6) {
            pos_ = start;
            fail({"natural number below 10^6"});
        }
        return static_cast<unsigned>(std::stoul(std::string(digits)));
    }

    expr parse_expr()
    {
        expr sum;
        sum.type = expr::kind::sum;
        bool negate = false;
        if (peek() == '-') {
            ++pos_;
            negate = true;
        }
        sum.args.push_back(parse_term());
        sum.negated.push_back(negate);
        for (;;) {
            const char c = peek();
            if (c != '+' && c != '-') {
                break;
            }
            ++pos_;
            sum.args.push_back(parse_term());
            sum.negated.push_back(c == '-');
        }
        if (sum.args.size() == 1 && !sum.negated.front()) {
            return std::move(sum.args.front());
        }
        return sum;
    }

    expr parse_term()
    {
        expr prod;
        prod.type = expr::kind::product;
        prod.args.push_back(parse_factor());
        while (peek() == '*') {
            ++pos_;
            prod.args.push_back(parse_factor());
        }
        if (prod.args.size() == 1) {
            return std::move(prod.args.front());
        }
        return prod;
    }

    expr parse_factor()
    {
        auto base = parse_atom();
        if (peek() == '^') {
            ++pos_;
            expr p;
            p.type = expr::kind::power;
            p.count = parse_nat();
            p.args.push_back(std::move(base));
            return p;
        }
        return base;
    }

    // True when the text after an identifier "D" is '(' or '^' nat '('.
    bool d_application_ahead()
    {
        auto save = pos_;
        bool result = false;
        if (peek() == '(') {
            result = true;
        } else if (peek() == '^') {
            ++pos_;
            skip_ws();
            bool digits = false;
            while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
                ++pos_;
                digits = true;
            }
            result = digits && peek() == '(';
        }
        pos_ = save;
        return result;
    }

    expr parse_atom()
    {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            auto e = parse_expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return parse_number();
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            return parse_variable();
        }
        fail({"number", "variable", "'('"});
    }

    expr parse_number()
    {
        const auto start = pos_;
        while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
            ++pos_;
        }
        if (pos_ < in_.size() && in_[pos_] == '/') {
            ++pos_;
            const auto den_start = pos_;
            while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
                ++pos_;
            }
            if (den_start == pos_) {
                fail({"denominator"});
            }
            if (in_.substr(den_start, pos_ - den_start).find_first_not_of('0') == std::string_view::npos) {
                pos_ = den_start;
                fail({"nonzero denominator"});
            }
        }
        expr e;
        e.type = expr::kind::number;
        e.value = Rational::parse(in_.substr(start, pos_ - start));
        return e;
    }

    expr parse_variable()
    {
        const auto start = pos_;
        while (pos_ < in_.size()
               && (std::isalnum(static_cast<unsigned char>(in_[pos_])) || in_[pos_] == '_')) {
            ++pos_;
        }
        std::string name(in_.substr(start, pos_ - start));

        if (name == "D" && d_application_ahead()) {
            if (mode_ == parse_mode::poly) {
                throw mode_error(start + 1, "derivative application D(...) is only valid for differential polynomials");
            }
            expr d;
            d.type = expr::kind::derivative;
            d.count = 1;
            if (peek() == '^') {
                ++pos_;
                d.count = parse_nat();
            }
            expect('(');
            d.args.push_back(parse_expr());
            expect(')');
            return d;
        }

        expr e;
        e.type = expr::kind::variable;
        e.var.base = std::move(name);
        // primes and ^(n) attach to the identifier without blanks
        if (pos_ < in_.size() && in_[pos_] == '\'') {
            if (mode_ == parse_mode::poly) {
                throw mode_error(pos_ + 1, "primes are only valid for differential polynomials");
            }
            while (pos_ < in_.size() && in_[pos_] == '\'') {
                ++pos_;
                ++e.var.order;
            }
        } else if (pos_ + 1 < in_.size() && in_[pos_] == '^' && in_[pos_ + 1] == '(') {
            if (mode_ == parse_mode::poly) {
                throw mode_error(pos_ + 1, "derivative orders are only valid for differential polynomials");
            }
            pos_ += 2;
            e.var.order = parse_nat();
            expect(')');
        }
        return e;
    }
};

template <typename Var, typename Leaf, typename Derivative>
basic_poly<Var> build(const expr &e, const Leaf &leaf, const Derivative &derivative)
{
    switch (e.type) {
    case expr::kind::number:
        return basic_poly<Var>(e.value);
    case expr::kind::variable:
        return leaf(e.var);
    case expr::kind::sum: {
        basic_poly<Var> out;
        for (std::size_t i = 0; i < e.args.size(); ++i) {
            auto term = build<Var>(e.args[i], leaf, derivative);
            if (e.negated[i]) {
                out -= term;
            } else {
                out += term;
            }
        }
        return out;
    }
    case expr::kind::product: {
        basic_poly<Var> out(1);
        for (const auto &a : e.args) {
            out *= build<Var>(a, leaf, derivative);
        }
        return out;
    }
    case expr::kind::power:
        return pow(build<Var>(e.args.front(), leaf, derivative), e.count);
    case expr::kind::derivative:
        return derivative(build<Var>(e.args.front(), leaf, derivative), e.count);
    }
    return {};
}

// Display order within one total degree: graded reverse lexicographic, with
// variables ranked by (name, order) ascending (x > x' > x'' > y).
template <typename Var>
bool display_before(const basic_monomial<Var> &a, const basic_monomial<Var> &b)
{
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) {
        return da > db;
    }
    const auto &fa = a.factors();
    const auto &fb = b.factors();
    auto i = fa.rbegin();
    auto j = fb.rbegin();
    while (i != fa.rend() && j != fb.rend()) {
        if (i->first == j->first) {
            if (i->second != j->second) {
                return i->second < j->second;
            }
            ++i;
            ++j;
        } else if (j->first < i->first) {
            // a has the later variable, b has exponent 0 there
            return false;
        } else {
            return true;
        }
    }
    return false;
}

std::string var_text(const std::string &v) { return v; }
std::string var_text(const dvar &v) { return to_string(v); }

template <typename Var>
std::string monomial_text(const basic_monomial<Var> &m)
{
    std::string s;
    for (const auto &[v, e] : m.factors()) {
        if (!s.empty()) {
            s += '*';
        }
        s += var_text(v);
        if (e > 1) {
            s += '^' + std::to_string(e);
        }
    }
    return s;
}

template <typename Var>
std::string poly_text(const basic_poly<Var> &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::vector<std::pair<basic_monomial<Var>, Rational>> terms(p.terms().begin(), p.terms().end());
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto &x, const auto &y) { return display_before(x.first, y.first); });
    std::string s;
    for (const auto &[m, c] : terms) {
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (s.empty()) {
            s += negative ? "-" : "";
        } else {
            s += negative ? " - " : " + ";
        }
        if (m.is_one()) {
            s += mag.str();
        } else if (mag.is_one()) {
            s += monomial_text(m);
        } else {
            s += mag.str() + "*" + monomial_text(m);
        }
    }
    return s;
}

template <typename Var>
std::string tensor_text(const basic_tensor<Var> &t)
{
    if (t.is_zero()) {
        return "0";
    }
    std::string s;
    for (const auto &[v, component] : t.by_variable()) {
        if (!s.empty()) {
            s += " + ";
        }
        auto text = poly_text(component);
        if (component.size() > 1 || text.front() == '-') {
            text = "(" + text + ")";
        }
        s += text + " (x) " + var_text(v);
    }
    return s;
}

} // namespace

syntax_error::syntax_error(std::size_t off, std::vector<std::string> exp, const std::string &found)
    : error("syntax error at byte " + std::to_string(off) + ": expected " + join_expected(exp) + ", found " + found),
      offset(off), expected(std::move(exp))
{
}

mode_error::mode_error(std::size_t off, const std::string &what)
    : error("mode error at byte " + std::to_string(off) + ": " + what), offset(off)
{
}

expr parse(std::string_view input, parse_mode mode) { return parser(input, mode).parse_all(); }

poly to_poly(const expr &e)
{
    return build<var_name>(
        e,
        [](const dvar &v) {
            if (v.order != 0) {
                throw mode_error(0, "differential variable in a plain polynomial");
            }
            return poly::variable(v.base);
        },
        [](const poly &, unsigned) -> poly { throw mode_error(0, "D(...) in a plain polynomial"); });
}

diff_poly to_diff_poly(const expr &e)
{
    return build<dvar>(
        e, [](const dvar &v) { return diff_poly::variable(v); },
        [](const diff_poly &p, unsigned n) { return d_shift_n(p, n); });
}

poly parse_poly(std::string_view input) { return to_poly(parse(input, parse_mode::poly)); }

diff_poly parse_diff_poly(std::string_view input) { return to_diff_poly(parse(input, parse_mode::diffpoly)); }

std::string to_string(const dvar &v)
{
    if (v.order <= 3) {
        return v.base + std::string(v.order, '\'');
    }
    return v.base + "^(" + std::to_string(v.order) + ")";
}

std::string to_string(const poly &p) { return poly_text(p); }
std::string to_string(const diff_poly &p) { return poly_text(p); }
std::string to_string(const tensor_elem &t) { return tensor_text(t); }
std::string to_string(const diff_tensor &t) { return tensor_text(t); }

std::vector<Rational> parse_rational_list(std::string_view input)
{
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < input.size() && std::isspace(static_cast<unsigned char>(input[pos]))) {
            ++pos;
        }
    };
    auto fail = [&](std::vector<std::string> expected) {
        std::string found = pos < input.size() ? std::string("'") + input[pos] + "'" : "end of input";
        throw syntax_error(pos + 1, std::move(expected), found);
    };
    skip_ws();
    if (pos >= input.size() || input[pos] != '[') {
        fail({"'['"});
    }
    ++pos;
    std::vector<Rational> out;
    skip_ws();
    if (pos < input.size() && input[pos] == ']') {
        ++pos;
    } else {
        for (;;) {
            skip_ws();
            const auto start = pos;
            if (pos < input.size() && (input[pos] == '-' || input[pos] == '+')) {
                ++pos;
            }
            while (pos < input.size() && (std::isdigit(static_cast<unsigned char>(input[pos])) || input[pos] == '/')) {
                ++pos;
            }
            try {
                out.push_back(Rational::parse(input.substr(start, pos - start)));
            } catch (const std::exception &) {
                pos = start;
                fail({"rational"});
            }
            skip_ws();
            if (pos < input.size() && input[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < input.size() && input[pos] == ']') {
                ++pos;
                break;
            }
            fail({"','", "']'"});
        }
    }
    skip_ws();
    if (pos != input.size()) {
        fail({"end of input"});
    }
    return out;
}

std::string to_string(const std::vector<Rational> &values)
{
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        s += (i ? "," : "") + values[i].str();
    }
    return s + "]";
}

} // namespace dalg
