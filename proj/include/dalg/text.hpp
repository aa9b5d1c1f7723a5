#ifndef DALG_TEXT_HPP
#define DALG_TEXT_HPP

// Text forms and the expression grammar
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)?
//   atom   := rational | var ("'"* | "^(" nat ")") | '(' expr ')'
//           | 'D' ('^' nat)? '(' expr ')'
//
// Primes and D-applications are accepted only in differential mode.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <dalg/errors.hpp>
#include <dalg/free_diff.hpp>
#include <dalg/poly.hpp>
#include <dalg/scalars.hpp>

namespace dalg
{

enum class parse_mode { poly, diffpoly };

struct syntax_error : error {
    syntax_error(std::size_t offset, std::vector<std::string> expected, const std::string &found);

    // 1-based byte offset of the offending character (input size + 1 at end).
    std::size_t offset;
    std::vector<std::string> expected;
};

// Primes or D in plain polynomial mode.
struct mode_error : error {
    mode_error(std::size_t offset, const std::string &what);
    std::size_t offset;
};

struct expr {
    enum class kind { number, variable, sum, product, power, derivative };

    kind type = kind::number;
    Rational value;           // number
    dvar var;                 // variable
    std::vector<expr> args;   // sum, product: operands; power, derivative: one operand
    std::vector<bool> negated; // sum: sign of each operand
    unsigned count = 1;       // power: exponent; derivative: number of applications
};

expr parse(std::string_view input, parse_mode mode);

poly to_poly(const expr &e);
diff_poly to_diff_poly(const expr &e);

poly parse_poly(std::string_view input);
diff_poly parse_diff_poly(std::string_view input);

std::string to_string(const dvar &v);
std::string to_string(const poly &p);
std::string to_string(const diff_poly &p);
std::string to_string(const tensor_elem &t);
std::string to_string(const diff_tensor &t);

// "[a0,a1,...]" with optional blanks around entries.
std::vector<Rational> parse_rational_list(std::string_view input);
std::string to_string(const std::vector<Rational> &values);

} // namespace dalg

#endif
