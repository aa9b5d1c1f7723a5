#ifndef DALG_LAW_SUITE_HPP
#define DALG_LAW_SUITE_HPP

// Law checks that are not phrased against a single carrier (the
// codifferential axioms on polynomials, the free and cofree constructions,
// the shuffle algebra), and the full suite run by `dalg laws`.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <dalg/diff_laws.hpp>
#include <dalg/free_diff.hpp>
#include <dalg/rng.hpp>

namespace dalg
{

// Codifferential axioms on random polynomials in <= 4 variables, degree <= 4.
law_report check_d1_constant(std::size_t trials, std::uint64_t seed);
law_report check_d2_leibniz(std::size_t trials, std::uint64_t seed);
law_report check_d3_linear(std::size_t trials, std::uint64_t seed);
law_report check_d4_chain(std::size_t trials, std::uint64_t seed);
law_report check_d5_interchange(std::size_t trials, std::uint64_t seed);
law_report check_derive_naturality(std::size_t trials, std::uint64_t seed);

// L(m) = deg(m) m for every monomial of degree <= max_degree in the given
// number of variables.
law_report check_euler_exhaustive(unsigned max_degree, std::size_t n_vars);

// flat(f, -) is a derivation on the free algebra compatible with
// substitution, flat(f, eta(x)) = f(x), sharp(1) = L and sharp(g) = flat(g).
law_report check_flat_sharp(std::size_t trials, std::uint64_t seed);

// Free side.
law_report check_dshift_oracle(std::size_t trials, std::uint64_t seed);
law_report check_dshift_grading(std::size_t trials, std::uint64_t seed);
law_report check_monad_left_unit(std::size_t trials, std::uint64_t seed);
law_report check_monad_right_unit(std::size_t trials, std::uint64_t seed);
law_report check_monad_assoc(std::size_t trials, std::uint64_t seed);
law_report check_extend_morphism(std::size_t trials, std::uint64_t seed);

// Random element of B^depth(A); depth 1 is a plain differential polynomial.
diff_poly random_nested(splitmix64 &rng, std::size_t depth);

// Cofree side, series of the given order, components n <= n_max.
law_report check_omega_oracle(std::size_t trials, std::uint64_t seed, std::size_t order, std::size_t n_max);
law_report check_delta_oracle(std::size_t trials, std::uint64_t seed, std::size_t order, std::size_t n_max);
law_report check_omega_clauses(std::size_t trials, std::uint64_t seed, std::size_t order, std::size_t n_max);
law_report check_psi_roundtrip(std::size_t trials, std::uint64_t seed, std::size_t order);
law_report check_psi_multiplicative(std::size_t trials, std::uint64_t seed, std::size_t order);
law_report check_psi_intertwines(std::size_t trials, std::uint64_t seed, std::size_t order);
law_report check_comonad_counit(std::size_t trials, std::uint64_t seed, std::size_t order);
law_report check_comonad_coassoc(std::size_t trials, std::uint64_t seed, std::size_t order);
law_report check_diamond_multiplicative(std::size_t trials, std::uint64_t seed, std::size_t order);

// |u sh v| counted with multiplicity is binom(|u|+|v|, |u|) for all lengths
// up to max_len.
law_report check_shuffle_counts(std::size_t max_len);

// Everything above plus the diff_laws checks on every shipped carrier.
std::vector<law_report> run_law_suite(std::uint64_t seed, std::size_t trials);

} // namespace dalg

#endif
