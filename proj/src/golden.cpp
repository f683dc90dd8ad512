#include "seqlab/golden.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace seqlab::golden {

namespace mp = boost::multiprecision;

namespace {

int sign_of(const Rational& q)
{
    return q.sign();
}

// floor(p + q*sqrt5) / den for integers p, q and den > 0.
BigInt floor_scaled(const BigInt& p, const BigInt& q, const BigInt& den)
{
    BigInt t = 0;
    if (q != 0) {
        BigInt root = mp::sqrt(BigInt(5 * q * q));
        t = q > 0 ? root : BigInt(-(root + 1));
    }
    BigInt m = p + t;
    BigInt quotient = m / den;
    if (m % den != 0 && m < 0)
        --quotient;
    return quotient;
}

// floor(a + b*tau), exact.
BigInt floor_golden(const Rational& a, const Rational& b)
{
    // a + b*tau = ((2a + b) + b*sqrt5) / 2
    Rational p = 2 * a + b;
    BigInt d = mp::lcm(mp::denominator(p), mp::denominator(b));
    BigInt pi = mp::numerator(p) * (d / mp::denominator(p));
    BigInt qi = mp::numerator(b) * (d / mp::denominator(b));
    return floor_scaled(pi, qi, 2 * d);
}

}  // namespace

GoldenNumber& GoldenNumber::operator+=(const GoldenNumber& o)
{
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

GoldenNumber& GoldenNumber::operator-=(const GoldenNumber& o)
{
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

GoldenNumber& GoldenNumber::operator*=(const GoldenNumber& o)
{
    // (a + b t)(c + d t) = ac + (ad + bc) t + bd t^2, t^2 = t + 1
    Rational bd = b_ * o.b_;
    Rational a = a_ * o.a_ + bd;
    Rational b = a_ * o.b_ + b_ * o.a_ + bd;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

GoldenNumber& GoldenNumber::operator/=(const GoldenNumber& o)
{
    return *this *= inv(o);
}

bool operator<(const GoldenNumber& x, const GoldenNumber& y)
{
    return sign(y - x) > 0;
}

std::string to_string(const Rational& q)
{
    std::ostringstream os;
    os << mp::numerator(q);
    if (mp::denominator(q) != 1)
        os << '/' << mp::denominator(q);
    return os.str();
}

std::string GoldenNumber::str() const
{
    if (b_ == 0)
        return to_string(a_);
    std::string tau_term;
    Rational mag = b_ < 0 ? Rational(-b_) : b_;
    if (mag == 1)
        tau_term = "tau";
    else
        tau_term = to_string(mag) + "*tau";
    if (a_ == 0)
        return (b_ < 0 ? "-" : "") + tau_term;
    return to_string(a_) + (b_ < 0 ? " - " : " + ") + tau_term;
}

std::string GoldenNumber::decimal(int places) const
{
    if (places < 0)
        throw std::invalid_argument("decimal: negative number of places");
    int s = sign(*this);
    GoldenNumber mag = s < 0 ? -*this : *this;
    BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(places));
    // round half away from zero: floor(|x| * 10^p + 1/2)
    BigInt scaled = floor_golden(mag.a_ * scale + Rational(1, 2), mag.b_ * scale);
    std::string digits = scaled.str();
    if (places > 0) {
        if (digits.size() <= static_cast<std::size_t>(places))
            digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
        digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    }
    if (s < 0 && scaled != 0)
        digits.insert(0, "-");
    return digits;
}

double GoldenNumber::to_double() const
{
    constexpr double kTau = 1.6180339887498948482;
    return a_.convert_to<double>() + b_.convert_to<double>() * kTau;
}

std::ostream& operator<<(std::ostream& os, const GoldenNumber& x)
{
    return os << x.str();
}

GoldenNumber add(const GoldenNumber& x, const GoldenNumber& y) { return x + y; }
GoldenNumber mul(const GoldenNumber& x, const GoldenNumber& y) { return x * y; }
GoldenNumber neg(const GoldenNumber& x) { return -x; }

GoldenNumber inv(const GoldenNumber& x)
{
    if (x.is_zero())
        throw std::domain_error("golden inverse of zero");
    // multiply by the conjugate a + b(1 - tau); norm a^2 + ab - b^2 vanishes only at 0
    const Rational& a = x.rational_part();
    const Rational& b = x.tau_part();
    Rational norm = a * a + a * b - b * b;
    return {(a + b) / norm, -b / norm};
}

int sign(const GoldenNumber& x)
{
    // a + b*tau = (p + b*sqrt5) / 2 with p = 2a + b
    Rational p = 2 * x.rational_part() + x.tau_part();
    const Rational& q = x.tau_part();
    int sp = sign_of(p);
    int sq = sign_of(q);
    if (sp >= 0 && sq >= 0)
        return (sp > 0 || sq > 0) ? 1 : 0;
    if (sp <= 0 && sq <= 0)
        return -1;
    // opposite signs: the larger of p^2 and 5 q^2 wins; they are never equal
    return p * p > 5 * q * q ? sp : sq;
}

GoldenNumber abs(const GoldenNumber& x)
{
    return sign(x) < 0 ? -x : x;
}

GoldenNumber tau_pow(int n)
{
    if (n >= 1) {
        unsigned k = static_cast<unsigned>(n);
        return {Rational(fib(k - 1)), Rational(fib(k))};
    }
    GoldenNumber result{1};
    const GoldenNumber inverse{-1, 1};  // tau^-1 = tau - 1
    for (int i = 0; i < -n; ++i)
        result *= inverse;
    return result;
}

BigInt fib(unsigned n)
{
    BigInt prev = 0;
    BigInt cur = 1;
    if (n == 0)
        return prev;
    for (unsigned i = 1; i < n; ++i) {
        BigInt next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<BigInt> fib_table(unsigned n)
{
    std::vector<BigInt> table(std::size_t{n} + 1);
    table[0] = 0;
    if (n >= 1)
        table[1] = 1;
    for (unsigned i = 2; i <= n; ++i)
        table[i] = table[i - 1] + table[i - 2];
    return table;
}

std::uint64_t fib_u64(unsigned n)
{
    if (n > 93)
        throw std::overflow_error("fib_u64: F_n exceeds 64 bits for n > 93");
    std::uint64_t prev = 0;
    std::uint64_t cur = 1;
    if (n == 0)
        return 0;
    for (unsigned i = 1; i < n; ++i) {
        std::uint64_t next = prev + cur;
        prev = cur;
        cur = next;
    }
    return cur;
}

bool FibPropertyReport::all_passed() const
{
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

FibPropertyReport verify_fib_properties(unsigned n_max)
{
    if (n_max < 2)
        throw std::invalid_argument("verify_fib_properties: n_max must be at least 2");

    // one extra index so that F_{n+1}, F_{n+2} are available for n = n_max
    const auto F = fib_table(2 * n_max + 2);
    const GoldenNumber t = GoldenNumber::tau();
    auto delta = [&](unsigned n) {  // F_{n+1} - tau F_n
        return GoldenNumber(Rational(F[n + 1])) - t * GoldenNumber(Rational(F[n]));
    };

    FibPropertyReport report;
    report.n_max = n_max;
    auto fail = [](PropertyCheck& c, const std::string& w) {
        if (c.passed) {
            c.passed = false;
            c.witness = w;
        }
    };

    PropertyCheck cassini{"cassini", true, {}};
    for (unsigned n = 1; n <= n_max; ++n) {
        BigInt lhs = F[n + 1] * F[n - 1] - F[n] * F[n];
        BigInt rhs = (n % 2 == 0) ? 1 : -1;
        if (lhs != rhs)
            fail(cassini, "n=" + std::to_string(n));
    }
    report.checks.push_back(cassini);

    PropertyCheck coprime{"coprime", true, {}};
    for (unsigned n = 0; n <= n_max; ++n)
        if (boost::integer::gcd(F[n], F[n + 1]) != 1)
            fail(coprime, "n=" + std::to_string(n));
    report.checks.push_back(coprime);

    PropertyCheck binet{"tau-power", true, {}};
    for (unsigned n = 0; n <= n_max; ++n) {
        GoldenNumber rhs = tau_pow(-static_cast<int>(n));
        if (n % 2 == 1)
            rhs = -rhs;
        if (delta(n) != rhs)
            fail(binet, "n=" + std::to_string(n));
    }
    report.checks.push_back(binet);

    PropertyCheck limit{"ratio-limit", true, {}};
    GoldenNumber prev_gap;
    for (unsigned n = 1; n <= n_max; ++n) {
        GoldenNumber gap = abs(GoldenNumber(Rational(F[n + 1], F[n])) - t);
        if (n > 1 && !(gap < prev_gap))
            fail(limit, "n=" + std::to_string(n));
        prev_gap = gap;
    }
    report.checks.push_back(limit);

    PropertyCheck alternating{"alternating", true, {}};
    for (unsigned n = 0; n <= n_max; ++n) {
        GoldenNumber cur = delta(n);
        GoldenNumber next = delta(n + 1);
        if (sign(cur) * sign(next) != -1 || !(abs(next) < abs(cur)))
            fail(alternating, "n=" + std::to_string(n));
    }
    report.checks.push_back(alternating);

    PropertyCheck addition{"addition", true, {}};
    for (unsigned m = 0; m <= n_max && addition.passed; ++m)
        for (unsigned n = 0; n <= n_max; ++n)
            if (F[m + 1] * F[n + 1] + F[m] * F[n] != F[m + n + 1]) {
                fail(addition, "m=" + std::to_string(m) + ",n=" + std::to_string(n));
                break;
            }
    report.checks.push_back(addition);

    return report;
}

}  // namespace seqlab::golden
