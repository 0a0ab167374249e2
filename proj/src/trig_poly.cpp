#include "duffing/trig_poly.hpp"

#include <stdexcept>

namespace duffing {

TrigPoly TrigPoly::cosine(unsigned k, const Rational& c)
{
    TrigPoly p;
    p.accumulate(k, c);
    return p;
}

Rational TrigPoly::coefficient(long k) const
{
    if (k < 0)
        throw std::invalid_argument("negative harmonic index");
    auto it = terms_.find(static_cast<unsigned>(k));
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TrigPoly::value_at_zero() const
{
    Rational sum = 0;
    for (const auto& [k, c] : terms_)
        sum += c;
    return sum;
}

void TrigPoly::accumulate(unsigned k, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& other)
{
    for (const auto& [k, c] : other.terms_)
        accumulate(k, c);
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& other)
{
    for (const auto& [k, c] : other.terms_)
        accumulate(k, -c);
    return *this;
}

TrigPoly& TrigPoly::operator*=(const Rational& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_)
        c *= scalar;
    return *this;
}

TrigPoly& TrigPoly::add_scaled(const Rational& scalar, const TrigPoly& other)
{
    if (scalar == 0)
        return *this;
    Rational t;
    for (const auto& [k, c] : other.terms_) {
        t = scalar * c;
        accumulate(k, t);
    }
    return *this;
}

TrigPoly& TrigPoly::add_product(const TrigPoly& a, const TrigPoly& b)
{
    // cos(j x) cos(k x) = 1/2 cos(|j-k| x) + 1/2 cos((j+k) x)
    Rational half;
    for (const auto& [j, cj] : a.terms_) {
        for (const auto& [k, ck] : b.terms_) {
            half = cj * ck;
            half /= 2;
            accumulate(j > k ? j - k : k - j, half);
            accumulate(j + k, half);
        }
    }
    return *this;
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b)
{
    TrigPoly r;
    r.add_product(a, b);
    return r;
}

TrigPoly second_derivative(const TrigPoly& a)
{
    TrigPoly r;
    for (const auto& [k, c] : a.terms()) {
        if (k != 0)
            r += TrigPoly::cosine(k, c * Rational(-static_cast<long>(k) * static_cast<long>(k)));
    }
    return r;
}

std::string TrigPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty())
            out += " + ";
        out += duffing::to_string(c);
        if (k != 0)
            out += " cos(" + std::to_string(k) + "x)";
    }
    return out;
}

} // namespace duffing
