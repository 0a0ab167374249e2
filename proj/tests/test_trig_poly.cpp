#include "duffing/trig_poly.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <stdexcept>

using duffing::Rational;
using duffing::TrigPoly;

namespace {

Rational frac(long a, long b)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

TrigPoly random_poly(std::mt19937& rng)
{
    std::uniform_int_distribution<int> harmonic(0, 7);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 8);
    std::uniform_int_distribution<int> count(0, 4);
    TrigPoly p;
    for (int i = count(rng); i > 0; --i)
        p += TrigPoly::cosine(harmonic(rng), frac(num(rng), den(rng)));
    return p;
}

// Mixed cosine/sine series, used only to state the product rule with first
// derivatives. Products are expanded directly from the angle-sum formulas.
struct Mixed {
    std::map<long, Rational> cos_terms;
    std::map<long, Rational> sin_terms;

    void add_cos(long k, const Rational& c)
    {
        if (k < 0)
            k = -k;
        cos_terms[k] += c;
    }
    void add_sin(long k, const Rational& c)
    {
        if (k < 0) {
            k = -k;
            sin_terms[k] -= c;
        } else if (k > 0) {
            sin_terms[k] += c;
        }
    }
    static Mixed from(const TrigPoly& p)
    {
        Mixed m;
        for (const auto& [k, c] : p.terms())
            m.add_cos(k, c);
        return m;
    }
    Mixed derivative() const
    {
        Mixed m;
        for (const auto& [k, c] : cos_terms)
            m.add_sin(k, -Rational(k) * c);
        for (const auto& [k, c] : sin_terms)
            m.add_cos(k, Rational(k) * c);
        return m;
    }
    Mixed operator*(const Mixed& o) const
    {
        Mixed m;
        const Rational half(1, 2);
        for (const auto& [a, x] : cos_terms) {
            for (const auto& [b, y] : o.cos_terms) {
                m.add_cos(a + b, half * x * y);
                m.add_cos(a - b, half * x * y);
            }
            for (const auto& [b, y] : o.sin_terms) {
                m.add_sin(a + b, half * x * y);
                m.add_sin(b - a, half * x * y);
            }
        }
        for (const auto& [a, x] : sin_terms) {
            for (const auto& [b, y] : o.cos_terms) {
                m.add_sin(a + b, half * x * y);
                m.add_sin(a - b, half * x * y);
            }
            for (const auto& [b, y] : o.sin_terms) {
                m.add_cos(a - b, half * x * y);
                m.add_cos(a + b, -half * x * y);
            }
        }
        return m;
    }
    Mixed operator+(const Mixed& o) const
    {
        Mixed m = *this;
        for (const auto& [k, c] : o.cos_terms)
            m.cos_terms[k] += c;
        for (const auto& [k, c] : o.sin_terms)
            m.sin_terms[k] += c;
        return m;
    }
    Mixed scaled(const Rational& s) const
    {
        Mixed m = *this;
        for (auto& [k, c] : m.cos_terms)
            c *= s;
        for (auto& [k, c] : m.sin_terms)
            c *= s;
        return m;
    }
    bool sine_free() const
    {
        for (const auto& [k, c] : sin_terms)
            if (c != 0)
                return false;
        return true;
    }
    TrigPoly cosine_part() const
    {
        TrigPoly p;
        for (const auto& [k, c] : cos_terms)
            p += TrigPoly::cosine(static_cast<unsigned>(k), c);
        return p;
    }
};

} // namespace

TEST_CASE("examples")
{
    const TrigPoly c1 = TrigPoly::cosine(1);
    const TrigPoly c3 = TrigPoly::cosine(3);

    CHECK(add(c1 * Rational(3, 4), c3 * Rational(1, 4)).coefficient(1) == Rational(3, 4));
    CHECK(add(c1, -c1).is_zero());

    TrigPoly cube = mul(mul(c1, c1), c1);
    CHECK(cube == c1 * Rational(3, 4) + c3 * Rational(1, 4));
    CHECK(mul(c1, c1) == TrigPoly::constant(Rational(1, 2)) + TrigPoly::cosine(2, Rational(1, 2)));
    CHECK(mul(TrigPoly::cosine(2), c3) == TrigPoly::cosine(1, Rational(1, 2)) +
                                               TrigPoly::cosine(5, Rational(1, 2)));

    CHECK(second_derivative(c3 * Rational(1, 32)) == c3 * Rational(-9, 32));
    CHECK(second_derivative(TrigPoly::constant(5)).is_zero());

    // First-order forcing after the secular term is removed.
    TrigPoly f1 = -(c1 * Rational(3, 4) + c3 * Rational(1, 4)) + c1 * Rational(3, 4);
    CHECK(f1.coefficient(3) == Rational(-1, 4));
    CHECK(f1.coefficient(1) == 0);
    CHECK(f1.coefficient(10) == 0);
    CHECK_THROWS_AS(f1.coefficient(-1), std::invalid_argument);

    CHECK(cube.value_at_zero() == 1);
    CHECK(cube.max_harmonic() == 3);
    CHECK(TrigPoly().to_string() == "0");
}

TEST_CASE("zero coefficients are never stored")
{
    TrigPoly p = TrigPoly::cosine(2, 3);
    p.add_scaled(Rational(-3), TrigPoly::cosine(2));
    CHECK(p.is_zero());
    CHECK(p.size() == 0);
    CHECK(TrigPoly::cosine(4, 0).is_zero());
    TrigPoly q = TrigPoly::cosine(1) * Rational(0);
    CHECK(q == TrigPoly());
}

TEST_CASE("ring axioms on random polynomials")
{
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        TrigPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * TrigPoly::constant(1) == a);
        CHECK((a - a).is_zero());

        TrigPoly acc = c;
        acc.add_product(a, b);
        CHECK(acc == c + a * b);
        // Evaluation at zero is a ring homomorphism.
        CHECK((a * b).value_at_zero() == a.value_at_zero() * b.value_at_zero());
    }
}

TEST_CASE("product rule for the second derivative")
{
    std::mt19937 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        TrigPoly a = random_poly(rng), b = random_poly(rng);
        Mixed da = Mixed::from(a).derivative();
        Mixed db = Mixed::from(b).derivative();
        Mixed rhs = Mixed::from(second_derivative(a) * b) + (da * db).scaled(2) +
                    Mixed::from(a * second_derivative(b));
        CHECK(rhs.sine_free());
        CHECK(second_derivative(a * b) == rhs.cosine_part());
        // The helper agrees with second_derivative on its own.
        CHECK(Mixed::from(a).derivative().derivative().cosine_part() == second_derivative(a));
    }
}
