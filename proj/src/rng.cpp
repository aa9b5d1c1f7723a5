#include <dalg/rng.hpp>

namespace dalg
{

std::uint64_t splitmix64::next()
{
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

splitmix64 splitmix64::split(std::uint64_t index) const
{
    splitmix64 mixer(state_ ^ (index * 0xd1b54a32d192ed03ULL));
    mixer.next();
    return splitmix64(mixer.next());
}

std::int64_t splitmix64::uniform(std::int64_t lo, std::int64_t hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) {
        return static_cast<std::int64_t>(next());
    }
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
        r = next();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
}

Rational splitmix64::small_rational()
{
    const auto num = uniform(-9, 9);
    const auto den = uniform(1, 4);
    return Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

Rational splitmix64::small_nonzero_rational()
{
    Rational r;
    do {
        r = small_rational();
    } while (r.is_zero());
    return r;
}

} // namespace dalg
