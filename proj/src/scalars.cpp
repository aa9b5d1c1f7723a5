#include <dalg/scalars.hpp>

#include <cctype>
#include <stdexcept>

namespace dalg
{

namespace
{

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational::Rational(const Integer &num, const Integer &den)
{
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    auto slash = text.find('/');
    auto num_part = text.substr(0, slash);
    auto den_part = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!all_digits(num_part) || !all_digits(den_part)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    Integer num(std::string(num_part), 10);
    Integer den(std::string(den_part), 10);
    if (negative) {
        num = -num;
    }
    return Rational(num, den);
}

std::string Rational::str() const
{
    if (value_.get_den() == 1) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw std::domain_error("division by zero rational");
    }
    value_ /= o.value_;
    return *this;
}

Integer binom(std::size_t n, std::size_t k)
{
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    // multiplicative formula; every partial quotient is an integer
    Integer r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r *= static_cast<unsigned long>(n - k + i);
        r /= static_cast<unsigned long>(i);
    }
    return r;
}

Integer factorial(std::size_t n)
{
    Integer r = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        r *= static_cast<unsigned long>(i);
    }
    return r;
}

Integer pow2(std::size_t n)
{
    Integer r = 1;
    r <<= static_cast<mp_bitcnt_t>(n);
    return r;
}

} // namespace dalg
