#ifndef DALG_ROTA_BAXTER_HPP
#define DALG_ROTA_BAXTER_HPP

// The free (weight 0) Rota-Baxter algebra Sh(Sym M) (x) Sym M.
//
// Words are tensors over Sym M, so they are multilinear in their letters:
// [2x + y] = 2[x] + [y]. Canonical elements therefore use monic monomial
// letters and pull every scalar into one coefficient per (word, tail monomial)
// key.
//
// Product: (u, p)(v, q) = (u sh v, pq).
// Operator: P(u, p) = (u ++ [p], 1).
// Derivation (1 (x) d on the tail), collapsed through d° as an endomorphism:
// D(u, p) = (u, sum_j x_j dp/dx_j); the raw form keeps (u, dp/dx_j, x_j).

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <dalg/carrier.hpp>
#include <dalg/diff_laws.hpp>
#include <dalg/poly.hpp>
#include <dalg/rng.hpp>

namespace dalg
{

using rb_word = std::vector<monomial>;

// Finite linear combination of words.
class word_combination
{
public:
    using term_map = std::map<rb_word, Rational>;

    const term_map &terms() const & { return terms_; }
    term_map terms() && { return std::move(terms_); }
    void add_term(const rb_word &w, const Rational &c);
    bool is_zero() const { return terms_.empty(); }

    // Sum of all coefficients.
    Rational total_weight() const;

    friend word_combination operator*(const word_combination &a, const word_combination &b);
    friend bool operator==(const word_combination &, const word_combination &) = default;

private:
    term_map terms_;
};

// Multilinear expansion of a word with polynomial letters. A zero letter
// makes the whole word zero.
word_combination expand_word(const std::vector<poly> &letters);

// Sum over all order-preserving interleavings.
word_combination shuffle(const rb_word &u, const rb_word &v);
word_combination shuffle(const std::vector<poly> &u, const std::vector<poly> &v);

class rb_elem
{
public:
    using key = std::pair<rb_word, monomial>;
    using term_map = std::map<key, Rational>;

    rb_elem() = default;

    // c * (word (x) tail) for polynomial letters and tail.
    static rb_elem make(const std::vector<poly> &word, const poly &tail, const Rational &c = Rational(1));
    static rb_elem one();

    const term_map &terms() const & { return terms_; }
    term_map terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const rb_word &w, const monomial &tail, const Rational &c);

    rb_elem &operator+=(const rb_elem &o);
    friend rb_elem operator+(rb_elem a, const rb_elem &b) { return a += b; }
    friend rb_elem operator-(rb_elem a, const rb_elem &b);
    friend rb_elem operator*(const Rational &s, const rb_elem &a);
    friend bool operator==(const rb_elem &, const rb_elem &) = default;

private:
    term_map terms_;
};

// Raw image of 1 (x) d: combination of (word, tail monomial, variable).
class rb_tensor
{
public:
    using key = std::tuple<rb_word, monomial, var_name>;
    using term_map = std::map<key, Rational>;

    const term_map &terms() const & { return terms_; }
    term_map terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const rb_word &w, const monomial &tail, const var_name &v, const Rational &c);

    rb_tensor &operator+=(const rb_tensor &o);
    friend rb_tensor operator+(rb_tensor a, const rb_tensor &b) { return a += b; }
    // Module action of rb_elem on the Sh (x) Sym factors.
    friend rb_tensor operator*(const rb_elem &a, const rb_tensor &t);
    friend bool operator==(const rb_tensor &, const rb_tensor &) = default;

private:
    term_map terms_;
};

rb_elem rb_mul(const rb_elem &s, const rb_elem &t);
rb_elem rb_P(const rb_elem &s);
rb_elem rb_D(const rb_elem &s);
rb_tensor rb_D_raw(const rb_elem &s);

std::string to_string(const rb_word &w);
std::string to_string(const word_combination &w);
std::string to_string(const rb_elem &s);
std::string to_string(const rb_tensor &t);

// Random element: up to 2 terms, words of <= max_letters letters and tails
// and letters of degree <= max_degree in x, y, z.
rb_elem random_rb_elem(splitmix64 &rng, std::size_t max_letters = 3, unsigned max_degree = 2);

// P(a)P(b) = P(a P(b)) + P(P(a) b) on random pairs.
law_report check_rota_baxter(std::size_t trials, std::uint64_t seed);

// D(P(a)) = 0 on random elements.
law_report check_d_after_p(std::size_t trials, std::uint64_t seed);

// D_raw(ab) = a D_raw(b) + b D_raw(a) on random pairs.
law_report check_raw_leibniz(std::size_t trials, std::uint64_t seed);

diff_carrier<rb_elem> rb_carrier();

} // namespace dalg

#endif
