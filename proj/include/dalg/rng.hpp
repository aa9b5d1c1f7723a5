#ifndef DALG_RNG_HPP
#define DALG_RNG_HPP

#include <cstdint>

#include <dalg/scalars.hpp>

namespace dalg
{

// SplitMix64 (Steele, Lea, Flood 2014). Fixed for the repo so that seeded law
// reports are identical on every platform; std distributions are not used.
class splitmix64
{
public:
    explicit splitmix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    // Independent stream for trial `index`, derived without advancing *this.
    splitmix64 split(std::uint64_t index) const;

    // Uniform in [lo, hi], unbiased (rejection sampling).
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

    bool coin() { return (next() >> 63) != 0; }

    // Numerator in [-9, 9], denominator in [1, 4].
    Rational small_rational();

    // As small_rational but never zero.
    Rational small_nonzero_rational();

private:
    std::uint64_t state_;
};

} // namespace dalg

#endif
