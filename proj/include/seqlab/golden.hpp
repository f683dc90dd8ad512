#pragma once

// Exact arithmetic in the quadratic field Q(tau), tau = (1 + sqrt 5) / 2,
// and Fibonacci-number utilities.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace seqlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace golden {

/// An element a + b*tau of Q(tau). Coefficients are kept reduced with positive
/// denominators (cpp_rational canonicalizes on every operation).
class GoldenNumber {
public:
    GoldenNumber() = default;
    GoldenNumber(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}
    GoldenNumber(long long a) : a_(a), b_(0) {}

    static GoldenNumber tau() { return {0, 1}; }

    const Rational& rational_part() const { return a_; }
    const Rational& tau_part() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    GoldenNumber operator-() const { return {-a_, -b_}; }

    GoldenNumber& operator+=(const GoldenNumber& o);
    GoldenNumber& operator-=(const GoldenNumber& o);
    GoldenNumber& operator*=(const GoldenNumber& o);
    GoldenNumber& operator/=(const GoldenNumber& o);

    friend GoldenNumber operator+(GoldenNumber x, const GoldenNumber& y) { return x += y; }
    friend GoldenNumber operator-(GoldenNumber x, const GoldenNumber& y) { return x -= y; }
    friend GoldenNumber operator*(GoldenNumber x, const GoldenNumber& y) { return x *= y; }
    friend GoldenNumber operator/(GoldenNumber x, const GoldenNumber& y) { return x /= y; }

    /// Structural equality; coincides with numeric equality since {1, tau} is a basis.
    friend bool operator==(const GoldenNumber& x, const GoldenNumber& y)
    {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    /// Numeric order, decided by `sign`.
    friend bool operator<(const GoldenNumber& x, const GoldenNumber& y);
    friend bool operator>(const GoldenNumber& x, const GoldenNumber& y) { return y < x; }
    friend bool operator<=(const GoldenNumber& x, const GoldenNumber& y) { return !(y < x); }
    friend bool operator>=(const GoldenNumber& x, const GoldenNumber& y) { return !(x < y); }

    /// Canonical text such as "5/4 - 1/8*tau", "2 + tau", "0".
    std::string str() const;

    /// Decimal rendering with `places` digits after the point, correctly rounded.
    std::string decimal(int places) const;

    /// Approximate value; display only.
    double to_double() const;

private:
    Rational a_{0};
    Rational b_{0};
};

std::ostream& operator<<(std::ostream& os, const GoldenNumber& x);

GoldenNumber add(const GoldenNumber& x, const GoldenNumber& y);
GoldenNumber mul(const GoldenNumber& x, const GoldenNumber& y);
GoldenNumber neg(const GoldenNumber& x);
/// Throws std::domain_error when x == 0.
GoldenNumber inv(const GoldenNumber& x);

/// Exact sign of a + b*tau in {-1, 0, +1}. Integer comparisons only.
int sign(const GoldenNumber& x);

GoldenNumber abs(const GoldenNumber& x);

/// tau^n for any integer n.
GoldenNumber tau_pow(int n);

/// F_n, F_0 = 0, F_1 = 1.
BigInt fib(unsigned n);

/// F_0 .. F_n inclusive.
std::vector<BigInt> fib_table(unsigned n);

/// F_n as an unsigned 64-bit value; throws std::overflow_error past F_93.
std::uint64_t fib_u64(unsigned n);

struct PropertyCheck {
    std::string name;
    bool passed = true;
    std::string witness;  // first failing index, empty when passed
};

struct FibPropertyReport {
    unsigned n_max = 0;
    std::vector<PropertyCheck> checks;
    bool all_passed() const;
};

/// Checks the six classical Fibonacci identities exactly for every index up to n_max.
/// Requires n_max >= 2.
FibPropertyReport verify_fib_properties(unsigned n_max);

std::string to_string(const Rational& q);

}  // namespace golden
}  // namespace seqlab
