#ifndef DALG_CARRIERS_HPP
#define DALG_CARRIERS_HPP

// The shipped diff_carrier instances and the deliberately broken controls.

#include <cstddef>
#include <string>

#include <dalg/carrier.hpp>
#include <dalg/free_diff.hpp>
#include <dalg/poly.hpp>
#include <dalg/rng.hpp>
#include <dalg/series.hpp>

namespace dalg
{

// Random differential polynomial over 4 of the variables (x|y|z, 0..2):
// at most `size` terms of degree at most `size`.
diff_poly random_diff_poly(splitmix64 &rng, std::size_t size);

// Random series with small rational entries.
series<Rational> random_series(splitmix64 &rng, std::size_t order, flavor kind);

// Free differential algebra with d_shift.
diff_carrier<diff_poly> diffpoly_carrier();

// Polynomials in w, x, y, z with the derivation g-sharp for a linear
// endomorphism g.
diff_carrier<poly> poly_sharp_carrier(const linear_map &g);
linear_map default_sharp_map();

// Truncated series of the given order. Binary operations first truncate both
// operands to the smaller order; `equal` compares the shared window.
diff_carrier<series<Rational>> series_carrier(std::size_t order, flavor kind);

// Negative controls on the free differential algebra.
diff_carrier<diff_poly> identity_derivation_carrier();
diff_carrier<diff_poly> squaring_derivation_carrier();

} // namespace dalg

#endif
