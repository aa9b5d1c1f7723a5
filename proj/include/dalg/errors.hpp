#ifndef DALG_ERRORS_HPP
#define DALG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dalg
{

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A linear-map image with a constant term or a term of degree > 1.
struct non_linear_image : error {
    using error::error;
};

// An evaluation environment misses a variable of the polynomial.
struct unbound_variable : error {
    using error::error;
};

// A series operation would read past the truncation order.
struct order_exhausted : error {
    using error::error;
};

struct flavor_mismatch : error {
    using error::error;
};

struct order_mismatch : error {
    using error::error;
};

// An outer differential variable whose base name does not decode to a
// differential polynomial.
struct malformed_nesting : error {
    using error::error;
};

} // namespace dalg

#endif
