#include "duffing/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace duffing {

std::string to_string(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Integer parse_integer(std::string_view s)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    Integer z(std::string(s), 10);
    return negative ? Integer(-z) : z;
}

Rational parse_decimal(std::string_view s)
{
    std::string_view mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = s.substr(0, e);
        std::string_view exp_text = s.substr(e + 1);
        Integer z = parse_integer(exp_text);
        if (!z.fits_slong_p() || abs(z) > 100000)
            throw std::invalid_argument("exponent out of range in '" + std::string(s) + "'");
        exponent = z.get_si();
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
        negative = mantissa.front() == '-';
        mantissa.remove_prefix(1);
    }
    std::string digits;
    long fraction_digits = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        std::string_view whole = mantissa.substr(0, dot);
        std::string_view frac = mantissa.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))
            || (whole.empty() && frac.empty()))
            throw std::invalid_argument("malformed decimal '" + std::string(s) + "'");
        digits = std::string(whole) + std::string(frac);
        fraction_digits = static_cast<long>(frac.size());
    } else {
        if (!all_digits(mantissa))
            throw std::invalid_argument("malformed number '" + std::string(s) + "'");
        digits = std::string(mantissa);
    }
    Rational value{Integer(digits, 10)};
    long shift = exponent - fraction_digits;
    Integer ten;
    mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0)
        value *= ten;
    else
        value /= ten;
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty())
        throw std::invalid_argument("empty number");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash));
        std::string_view den_text = text.substr(slash + 1);
        if (!den_text.empty() && den_text.front() == '+')
            den_text.remove_prefix(1);
        if (!all_digits(den_text))
            throw std::invalid_argument("malformed denominator in '" + std::string(text) + "'");
        Integer den(std::string(den_text), 10);
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    return parse_decimal(text);
}

Rational binomial(const Rational& alpha, unsigned k)
{
    Rational result = 1;
    for (unsigned j = 0; j < k; ++j) {
        result *= alpha - j;
        result /= j + 1;
    }
    return result;
}

Rational pow(const Rational& base, unsigned exponent)
{
    Rational result = 1;
    Rational b = base;
    while (exponent != 0) {
        if (exponent & 1u)
            result *= b;
        exponent >>= 1;
        if (exponent != 0)
            b *= b;
    }
    return result;
}

} // namespace duffing
