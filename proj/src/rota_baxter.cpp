#include <dalg/rota_baxter.hpp>

#include <dalg/text.hpp>

namespace dalg
{

namespace
{

template <typename Map, typename Key>
void accumulate(Map &terms, Key &&k, const Rational &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms.try_emplace(std::forward<Key>(k), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms.erase(it);
        }
    }
}

void shuffle_into(const rb_word &u, std::size_t i, const rb_word &v, std::size_t j, rb_word &prefix,
                  word_combination &out)
{
    if (i == u.size() && j == v.size()) {
        out.add_term(prefix, Rational(1));
        return;
    }
    if (i < u.size()) {
        prefix.push_back(u[i]);
        shuffle_into(u, i + 1, v, j, prefix, out);
        prefix.pop_back();
    }
    if (j < v.size()) {
        prefix.push_back(v[j]);
        shuffle_into(u, i, v, j + 1, prefix, out);
        prefix.pop_back();
    }
}

const std::vector<var_name> rb_vars = {"x", "y", "z"};

} // namespace

void word_combination::add_term(const rb_word &w, const Rational &c) { accumulate(terms_, w, c); }

Rational word_combination::total_weight() const
{
    Rational s;
    for (const auto &[w, c] : terms_) {
        s += c;
    }
    return s;
}

word_combination operator*(const word_combination &a, const word_combination &b)
{
    word_combination out;
    for (const auto &[u, cu] : a.terms()) {
        for (const auto &[v, cv] : b.terms()) {
            const auto mixed = shuffle(u, v);
            for (const auto &[w, cw] : mixed.terms()) {
                out.add_term(w, cu * cv * cw);
            }
        }
    }
    return out;
}

word_combination expand_word(const std::vector<poly> &letters)
{
    word_combination acc;
    acc.add_term(rb_word{}, Rational(1));
    for (const auto &letter : letters) {
        word_combination next;
        for (const auto &[w, c] : acc.terms()) {
            for (const auto &[m, cm] : letter.terms()) {
                auto longer = w;
                longer.push_back(m);
                next.add_term(longer, c * cm);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

word_combination shuffle(const rb_word &u, const rb_word &v)
{
    word_combination out;
    rb_word prefix;
    prefix.reserve(u.size() + v.size());
    shuffle_into(u, 0, v, 0, prefix, out);
    return out;
}

word_combination shuffle(const std::vector<poly> &u, const std::vector<poly> &v)
{
    return expand_word(u) * expand_word(v);
}

rb_elem rb_elem::make(const std::vector<poly> &word, const poly &tail, const Rational &c)
{
    rb_elem out;
    const auto words = expand_word(word);
    for (const auto &[w, cw] : words.terms()) {
        for (const auto &[m, cm] : tail.terms()) {
            out.add_term(w, m, c * cw * cm);
        }
    }
    return out;
}

rb_elem rb_elem::one() { return make({}, poly(1)); }

void rb_elem::add_term(const rb_word &w, const monomial &tail, const Rational &c)
{
    accumulate(terms_, key{w, tail}, c);
}

rb_elem &rb_elem::operator+=(const rb_elem &o)
{
    for (const auto &[k, c] : o.terms_) {
        add_term(k.first, k.second, c);
    }
    return *this;
}

rb_elem operator-(rb_elem a, const rb_elem &b)
{
    for (const auto &[k, c] : b.terms_) {
        a.add_term(k.first, k.second, -c);
    }
    return a;
}

rb_elem operator*(const Rational &s, const rb_elem &a)
{
    rb_elem out;
    for (const auto &[k, c] : a.terms_) {
        out.add_term(k.first, k.second, s * c);
    }
    return out;
}

void rb_tensor::add_term(const rb_word &w, const monomial &tail, const var_name &v, const Rational &c)
{
    accumulate(terms_, key{w, tail, v}, c);
}

rb_tensor &rb_tensor::operator+=(const rb_tensor &o)
{
    for (const auto &[k, c] : o.terms_) {
        add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), c);
    }
    return *this;
}

rb_tensor operator*(const rb_elem &a, const rb_tensor &t)
{
    rb_tensor out;
    for (const auto &[ka, ca] : a.terms()) {
        for (const auto &[kt, ct] : t.terms()) {
            const auto mixed = shuffle(ka.first, std::get<0>(kt));
            for (const auto &[w, cw] : mixed.terms()) {
                out.add_term(w, ka.second * std::get<1>(kt), std::get<2>(kt), ca * ct * cw);
            }
        }
    }
    return out;
}

rb_elem rb_mul(const rb_elem &s, const rb_elem &t)
{
    rb_elem out;
    for (const auto &[ks, cs] : s.terms()) {
        for (const auto &[kt, ct] : t.terms()) {
            const auto tail = ks.second * kt.second;
            const auto mixed = shuffle(ks.first, kt.first);
            for (const auto &[w, cw] : mixed.terms()) {
                out.add_term(w, tail, cs * ct * cw);
            }
        }
    }
    return out;
}

rb_elem rb_P(const rb_elem &s)
{
    rb_elem out;
    for (const auto &[k, c] : s.terms()) {
        auto w = k.first;
        w.push_back(k.second);
        out.add_term(w, monomial{}, c);
    }
    return out;
}

rb_elem rb_D(const rb_elem &s)
{
    rb_elem out;
    for (const auto &[k, c] : s.terms()) {
        out.add_term(k.first, k.second, c * Rational(static_cast<long>(k.second.degree())));
    }
    return out;
}

rb_tensor rb_D_raw(const rb_elem &s)
{
    rb_tensor out;
    for (const auto &[k, c] : s.terms()) {
        const auto dt = derive(poly::term(c, k.second));
        for (const auto &[dk, dc] : dt.terms()) {
            out.add_term(k.first, dk.first, dk.second, dc);
        }
    }
    return out;
}

std::string to_string(const rb_word &w)
{
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        s += (i ? ", " : "") + to_string(poly::term(Rational(1), w[i]));
    }
    return s + "]";
}

std::string to_string(const word_combination &wc)
{
    if (wc.is_zero()) {
        return "0";
    }
    std::string s;
    for (const auto &[w, c] : wc.terms()) {
        s += (s.empty() ? "" : " + ") + (c.is_one() ? "" : c.str() + "*") + to_string(w);
    }
    return s;
}

std::string to_string(const rb_elem &e)
{
    if (e.is_zero()) {
        return "0";
    }
    std::string s;
    for (const auto &[k, c] : e.terms()) {
        s += (s.empty() ? "" : " + ") + (c.is_one() ? "" : c.str() + "*") + to_string(k.first) + " (x) "
             + to_string(poly::term(Rational(1), k.second));
    }
    return s;
}

std::string to_string(const rb_tensor &t)
{
    if (t.is_zero()) {
        return "0";
    }
    std::string s;
    for (const auto &[k, c] : t.terms()) {
        s += (s.empty() ? "" : " + ") + (c.is_one() ? "" : c.str() + "*") + to_string(std::get<0>(k)) + " (x) "
             + to_string(poly::term(Rational(1), std::get<1>(k))) + " (x) " + std::get<2>(k);
    }
    return s;
}

rb_elem random_rb_elem(splitmix64 &rng, std::size_t max_letters, unsigned max_degree)
{
    rb_elem out;
    const auto n_terms = rng.uniform(1, 2);
    for (std::int64_t t = 0; t < n_terms; ++t) {
        const auto len = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_letters)));
        std::vector<poly> word;
        for (std::size_t i = 0; i < len; ++i) {
            poly letter;
            do {
                letter = random_poly(rng, rb_vars, 2, max_degree);
            } while (letter.is_zero());
            word.push_back(std::move(letter));
        }
        out += rb_elem::make(word, random_poly(rng, rb_vars, 2, max_degree));
    }
    return out;
}

law_report check_rota_baxter(std::size_t trials, std::uint64_t seed)
{
    law_report r;
    r.law = "rota_baxter_identity";
    r.carrier = "rota_baxter";
    r.trials = trials;
    r.seed = seed;
    const splitmix64 root(seed);
    for (std::size_t t = 0; t < trials && r.pass; ++t) {
        auto rng = root.split(t);
        const auto a = random_rb_elem(rng);
        const auto b = random_rb_elem(rng);
        const auto lhs = rb_mul(rb_P(a), rb_P(b));
        const auto rhs = rb_P(rb_mul(a, rb_P(b))) + rb_P(rb_mul(rb_P(a), b));
        if (!(lhs == rhs)) {
            r.fail(counterexample{{{"a", to_string(a)}, {"b", to_string(b)}}, to_string(lhs), to_string(rhs)});
        }
    }
    return r;
}

law_report check_d_after_p(std::size_t trials, std::uint64_t seed)
{
    law_report r;
    r.law = "d_after_p_vanishes";
    r.carrier = "rota_baxter";
    r.trials = trials;
    r.seed = seed;
    const splitmix64 root(seed);
    for (std::size_t t = 0; t < trials && r.pass; ++t) {
        auto rng = root.split(t);
        const auto a = random_rb_elem(rng);
        const auto lhs = rb_D(rb_P(a));
        const auto raw = rb_D_raw(rb_P(a));
        if (!lhs.is_zero() || !raw.is_zero()) {
            r.fail(counterexample{{{"a", to_string(a)}}, to_string(lhs) + " | raw " + to_string(raw), "0"});
        }
    }
    return r;
}

law_report check_raw_leibniz(std::size_t trials, std::uint64_t seed)
{
    law_report r;
    r.law = "raw_leibniz";
    r.carrier = "rota_baxter";
    r.trials = trials;
    r.seed = seed;
    const splitmix64 root(seed);
    for (std::size_t t = 0; t < trials && r.pass; ++t) {
        auto rng = root.split(t);
        const auto a = random_rb_elem(rng);
        const auto b = random_rb_elem(rng);
        const auto lhs = rb_D_raw(rb_mul(a, b));
        const auto rhs = a * rb_D_raw(b) + b * rb_D_raw(a);
        if (!(lhs == rhs)) {
            r.fail(counterexample{{{"a", to_string(a)}, {"b", to_string(b)}}, to_string(lhs), to_string(rhs)});
        }
    }
    return r;
}

diff_carrier<rb_elem> rb_carrier()
{
    diff_carrier<rb_elem> c;
    c.name = "rota_baxter";
    c.zero = rb_elem{};
    c.one = rb_elem::one();
    c.add = [](const rb_elem &a, const rb_elem &b) { return a + b; };
    c.mul = [](const rb_elem &a, const rb_elem &b) { return rb_mul(a, b); };
    c.scale = [](const Rational &s, const rb_elem &a) { return s * a; };
    c.derive = [](const rb_elem &a) { return rb_D(a); };
    c.sample = [](splitmix64 &rng, std::size_t size) { return random_rb_elem(rng, std::min<std::size_t>(size, 3), 2); };
    // constant tails: the kernel of tail differentiation
    c.sample_constant = [](splitmix64 &rng) {
        auto a = random_rb_elem(rng, 2, 1);
        rb_elem out;
        for (const auto &[k, coeff] : a.terms()) {
            out.add_term(k.first, monomial{}, coeff);
        }
        return out;
    };
    c.equal = [](const rb_elem &a, const rb_elem &b) { return a == b; };
    c.show = [](const rb_elem &a) { return to_string(a); };
    return c;
}

} // namespace dalg
