#include "duffing/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace duffing {

BigReal agm(const BigReal& a, const BigReal& b)
{
    if (!(a > 0) || !(b > 0))
        throw std::domain_error("agm requires positive arguments");
    BigReal x = a;
    BigReal y = b;
    const BigReal eps = working_epsilon();
    for (int iter = 0; iter < 200; ++iter) {
        if (abs(x - y) <= eps * x)
            break;
        BigReal mean = (x + y) / 2;
        y = sqrt(x * y);
        x = std::move(mean);
    }
    return (x + y) / 2;
}

// ---------------------------------------------------------------------------
// PolynomialR

PolynomialR::PolynomialR(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs))
{
    trim();
}

PolynomialR PolynomialR::monomial(unsigned degree, const Rational& c)
{
    std::vector<Rational> coeffs(degree + 1, Rational(0));
    coeffs[degree] = c;
    return PolynomialR(std::move(coeffs));
}

void PolynomialR::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational PolynomialR::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

BigReal PolynomialR::operator()(const BigReal& x) const
{
    BigReal acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + to_bigreal(*it);
    return acc;
}

PolynomialR PolynomialR::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return PolynomialR(std::move(d));
}

PolynomialR& PolynomialR::operator+=(const PolynomialR& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

PolynomialR& PolynomialR::operator*=(const Rational& s)
{
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_)
        c *= s;
    return *this;
}

PolynomialR operator-(PolynomialR a, const PolynomialR& b)
{
    a += b * Rational(-1);
    return a;
}

PolynomialR operator*(const PolynomialR& a, const PolynomialR& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return PolynomialR(std::move(c));
}

int sign_variations(const std::vector<Rational>& coeffs)
{
    int changes = 0;
    int last = 0;
    for (const auto& c : coeffs) {
        int s = sgn(c);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

Rational root_bound(const PolynomialR& p)
{
    if (p.degree() < 1)
        return Rational(1);
    const Rational& lead = p.coeffs().back();
    Rational largest = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational r = abs(p.coeffs()[i] / lead);
        if (r > largest)
            largest = r;
    }
    Rational bound = largest + 1;
    Rational power = 1;
    while (power < bound)
        power *= 2;
    return power;
}

// ---------------------------------------------------------------------------
// Root isolation on integer polynomials over dyadic subintervals of [0, 1].

namespace {

using IntPoly = std::vector<Integer>;

IntPoly primitive_integer(const std::vector<Rational>& coeffs)
{
    Integer common = 1;
    for (const auto& c : coeffs)
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
    IntPoly out(coeffs.size());
    Integer content = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        out[i] = coeffs[i].get_num() * (common / coeffs[i].get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
    }
    if (content > 1)
        for (auto& c : out)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    return out;
}

void taylor_shift_one(IntPoly& a)
{
    const std::size_t d = a.size() - 1;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = d - 1;; --j) {
            a[j] += a[j + 1];
            if (j == i)
                break;
        }
}

// Upper bound on the number of roots in (0, 1), exact when 0 or 1.
int descartes_bound(const IntPoly& p)
{
    IntPoly r(p.rbegin(), p.rend());
    taylor_shift_one(r);
    int changes = 0;
    int last = 0;
    for (const auto& c : r) {
        int s = sgn(c);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

// 2^d p(t/2): the left half of the unit interval mapped back onto [0, 1].
IntPoly halve_left(const IntPoly& p)
{
    const std::size_t d = p.size() - 1;
    IntPoly out(p.size());
    for (std::size_t i = 0; i <= d; ++i)
        mpz_mul_2exp(out[i].get_mpz_t(), p[i].get_mpz_t(), d - i);
    return out;
}

// sign of p(m / 2^k), exactly.
int sign_at_dyadic(const IntPoly& p, const Integer& m, unsigned long k)
{
    const std::size_t d = p.size() - 1;
    Integer acc = p[d];
    Integer term;
    for (std::size_t i = d; i-- > 0;) {
        acc *= m;
        mpz_mul_2exp(term.get_mpz_t(), p[i].get_mpz_t(), k * (d - i));
        acc += term;
    }
    return sgn(acc);
}

IntPoly int_derivative(const IntPoly& p)
{
    if (p.size() <= 1)
        return {Integer(0)};
    IntPoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i)
        d[i - 1] = p[i] * static_cast<unsigned long>(i);
    return d;
}

// Multiplicity of an exact root m/2^k of p.
int multiplicity_at(IntPoly p, const Integer& m, unsigned long k)
{
    int mult = 0;
    while (p.size() > 1 && sign_at_dyadic(p, m, k) == 0) {
        ++mult;
        p = int_derivative(p);
    }
    return mult;
}

// Sign of p on a right neighbourhood of m / 2^k: the first derivative that
// does not vanish there decides.
int sign_right_of(IntPoly p, const Integer& m, unsigned long k)
{
    while (true) {
        int s = sign_at_dyadic(p, m, k);
        if (s != 0 || p.size() == 1)
            return s;
        p = int_derivative(p);
    }
}

struct Node {
    IntPoly poly; // local polynomial on [0, 1]
    Integer index; // global interval (index / 2^depth, (index+1) / 2^depth)
    unsigned long depth;
};

struct Isolated {
    Integer index;
    unsigned long depth;
    enum Kind { Interval, Exact, Cluster } kind;
    int multiplicity = 1;
};

} // namespace

std::vector<RealRoot> real_roots(const PolynomialR& p, const Rational& lo, const Rational& hi,
                                 unsigned digits)
{
    if (p.is_zero())
        throw std::invalid_argument("the zero polynomial has no isolated roots");
    if (!(lo < hi))
        throw std::invalid_argument("root search interval must satisfy lo < hi");
    if (p.degree() == 0)
        return {};

    // q(t) = p(lo + width t) on t in [0, 1].
    const Rational width = hi - lo;
    std::vector<Rational> shifted = p.coeffs();
    const std::size_t d = shifted.size() - 1;
    if (lo != 0)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = d - 1;; --j) {
                shifted[j] += lo * shifted[j + 1];
                if (j == i)
                    break;
            }
    Rational scale = 1;
    for (auto& c : shifted) {
        c *= scale;
        scale *= width;
    }
    const IntPoly global = primitive_integer(shifted);

    const unsigned long bits = static_cast<unsigned long>(std::ceil(digits * 3.3219280948873623)) + 16;
    // Intervals narrower than this in t are treated as unresolved clusters.
    const unsigned long max_depth =
        bits + 64 + static_cast<unsigned long>(std::max<long>(0, mpz_sizeinbase(width.get_num_mpz_t(), 2)));

    std::vector<Isolated> found;

    // Right end of (lo, hi] belongs to the search interval.
    {
        int mult = multiplicity_at(global, Integer(1), 0);
        if (mult > 0)
            found.push_back({Integer(1), 0, Isolated::Exact, mult});
    }

    std::vector<Node> stack;
    stack.push_back({global, Integer(0), 0});
    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        int bound = descartes_bound(node.poly);
        if (bound == 0)
            continue;
        if (bound == 1) {
            found.push_back({node.index, node.depth, Isolated::Interval});
            continue;
        }
        if (node.depth >= max_depth) {
            found.push_back({node.index, node.depth, Isolated::Cluster, bound});
            continue;
        }
        Integer mid = 2 * node.index + 1;
        int mult = multiplicity_at(global, mid, node.depth + 1);
        if (mult > 0)
            found.push_back({mid, node.depth + 1, Isolated::Exact, mult});
        IntPoly left = halve_left(node.poly);
        IntPoly right = left;
        taylor_shift_one(right);
        stack.push_back({std::move(right), mid, node.depth + 1});
        stack.push_back({std::move(left), 2 * node.index, node.depth + 1});
    }

    WorkingPrecision precision(digits);
    std::vector<std::pair<Rational, RealRoot>> roots;
    auto to_x = [&](const Integer& index, unsigned long depth) {
        Rational t(index);
        mpq_div_2exp(t.get_mpq_t(), t.get_mpq_t(), depth);
        return Rational(lo + width * t);
    };

    for (const auto& iso : found) {
        if (iso.kind == Isolated::Exact) {
            Rational x = to_x(iso.index, iso.depth);
            roots.push_back({x, RealRoot{to_bigreal(x), iso.multiplicity % 2 == 0, false}});
            continue;
        }
        if (iso.kind == Isolated::Cluster) {
            Integer centre = 2 * iso.index + 1;
            Rational x = to_x(centre, iso.depth + 1);
            int left_sign = sign_at_dyadic(global, iso.index, iso.depth);
            int right_sign = sign_at_dyadic(global, iso.index + 1, iso.depth);
            roots.push_back({x, RealRoot{to_bigreal(x), left_sign == right_sign, true}});
            continue;
        }
        // Exact bisection on a simple root.
        Integer a = iso.index;
        unsigned long k = iso.depth;
        // Endpoints may themselves be roots, so use the sign just inside the left end.
        const int inner_sign = sign_right_of(global, a, k);
        Rational x_mid;
        while (true) {
            Integer mid = 2 * a + 1;
            ++k;
            int s = sign_at_dyadic(global, mid, k);
            if (s == 0) {
                x_mid = to_x(mid, k);
                break;
            }
            a = (s == inner_sign) ? mid : Integer(2 * a);
            // Stop once the interval is below the requested relative precision.
            Rational span = width;
            mpq_div_2exp(span.get_mpq_t(), span.get_mpq_t(), k);
            Rational x_lo = to_x(a, k);
            Rational magnitude = abs(x_lo);
            if (Rational far_end = abs(x_lo + span); far_end > magnitude)
                magnitude = far_end;
            Rational tolerance = magnitude;
            mpq_div_2exp(tolerance.get_mpq_t(), tolerance.get_mpq_t(), bits);
            if (span <= tolerance || k >= max_depth + bits) {
                x_mid = to_x(2 * a + 1, k + 1);
                break;
            }
        }
        roots.push_back({x_mid, RealRoot{to_bigreal(x_mid), false, false}});
    }

    std::sort(roots.begin(), roots.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    std::vector<RealRoot> out;
    out.reserve(roots.size());
    for (auto& r : roots)
        out.push_back(std::move(r.second));
    return out;
}

// ---------------------------------------------------------------------------
// tanh-sinh quadrature

BigReal adaptive_quadrature(const std::function<BigReal(const BigReal&)>& f, const BigReal& a,
                            const BigReal& b, const BigReal& tol)
{
    if (!(tol > 0))
        throw std::invalid_argument("quadrature tolerance must be positive");
    const BigReal half_pi = pi() / 2;
    const BigReal centre = (a + b) / 2;
    const BigReal radius = (b - a) / 2;
    const BigReal eps = working_epsilon();

    // Sum of w(t) f(x(t)) over t = t0 + j * step for j = 0, 1, ... in both
    // directions, stopping when the weights underflow relative to eps.
    auto node_sum = [&](const BigReal& t) {
        BigReal s = half_pi * sinh(t);
        BigReal c = cosh(s);
        BigReal weight = half_pi * cosh(t) / (c * c);
        BigReal offset = radius * tanh(s);
        return std::pair<BigReal, BigReal>{weight, offset};
    };
    auto contribution = [&](const BigReal& t, bool& negligible) {
        auto [weight, offset] = node_sum(t);
        negligible = weight < eps * eps;
        if (abs(offset) >= abs(radius))
            negligible = true;
        if (negligible)
            return BigReal(0);
        BigReal value = f(centre + offset);
        if (t != 0)
            value += f(centre - offset);
        return weight * value;
    };

    BigReal step = 1;
    BigReal sum = 0;
    bool negligible = false;
    sum += contribution(BigReal(0), negligible);
    for (int j = 1; j < 100000; ++j) {
        sum += contribution(step * j, negligible);
        if (negligible)
            break;
    }
    BigReal estimate = radius * step * sum;

    constexpr int max_level = 14;
    for (int level = 1; level <= max_level; ++level) {
        step /= 2;
        // New nodes sit at odd multiples of the halved step.
        for (int j = 1; j < 10000000; j += 2) {
            sum += contribution(step * j, negligible);
            if (negligible)
                break;
        }
        BigReal next = radius * step * sum;
        BigReal change = abs(next - estimate);
        estimate = std::move(next);
        if (level >= 3 && change <= tol)
            return estimate;
    }
    throw std::runtime_error("quadrature did not reach the requested tolerance");
}

LineFit fit_line(const std::vector<std::pair<BigReal, BigReal>>& points)
{
    if (points.size() < 2)
        throw std::invalid_argument("line fit needs at least two points");
    const auto n = static_cast<long>(points.size());
    BigReal mean_x = 0;
    BigReal mean_y = 0;
    for (const auto& [x, y] : points) {
        mean_x += x;
        mean_y += y;
    }
    mean_x /= n;
    mean_y /= n;
    BigReal sxx = 0;
    BigReal sxy = 0;
    for (const auto& [x, y] : points) {
        sxx += (x - mean_x) * (x - mean_x);
        sxy += (x - mean_x) * (y - mean_y);
    }
    if (sxx == 0)
        throw std::invalid_argument("line fit needs distinct abscissae");
    LineFit fit;
    fit.beta = sxy / sxx;
    fit.alpha = mean_y - fit.beta * mean_x;
    BigReal ss = 0;
    for (const auto& [x, y] : points) {
        BigReal r = y - fit.alpha - fit.beta * x;
        ss += r * r;
    }
    fit.residual = sqrt(ss / n);
    return fit;
}

} // namespace duffing
