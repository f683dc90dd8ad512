#pragma once

// Asymptotic critical exponents: bispecial-ratio estimates, exact upper bounds
// for the coloured Fibonacci sequences v_delta, and the comparison table
// against known thresholds RTB*(d).

#include "seqlab/analysis.hpp"
#include "seqlab/golden.hpp"
#include "seqlab/words.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace seqlab::exponents {

using golden::GoldenNumber;

struct BispecialRatio {
    unsigned N = 0;
    std::uint64_t bispecial_length = 0;   // |w_N|
    std::uint64_t return_length = 0;      // |v_N|, a shortest return word
    Rational ratio;
};

enum class EstimateMode { critical, asymptotic };

struct ExponentEstimate {
    std::optional<analysis::RepetitionRecord> lower_witness;
    std::vector<BispecialRatio> bispecial_ratios;
    GoldenNumber estimate;
    EstimateMode mode = EstimateMode::asymptotic;
};

/// Ratios |b_N| / |s_N| = (F_{N+3} - 2) / F_{N+1} for N = 0..N_max of f;
/// estimate = 1 + the largest ratio. Requires 3 <= N_max <= 88.
ExponentEstimate asymptotic_exponent_fib_bispecial(unsigned N_max);

struct KappaLambdaBound {
    unsigned n = 0;
    GoldenNumber c;
    BigInt kappa_min;   // F_{n+1}
    BigInt lambda_min;  // F_n
};

struct KappaLambdaCertificate {
    KappaLambdaBound bound;
    std::uint64_t enumeration_limit = 0;   // F_{n+3}
    std::uint64_t pairs_checked = 0;
    std::uint64_t qualifying = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> violations;
    bool anchor_qualifies = false;        // (F_{n+1}, F_n) satisfies |k - tau l| < c
    bool predecessor_excluded = false;    // (F_n, F_{n-1}) does not
    bool passed() const { return violations.empty() && anchor_qualifies && predecessor_excluded; }
};

/// Midpoint of the open interval (|F_{n+1} - tau F_n|, |F_n - tau F_{n-1}|).
GoldenNumber kappa_lambda_default_c(unsigned n);

/// Exhaustive check over 0 <= kappa, lambda <= F_{n+3}, kappa + lambda >= 1:
/// every pair with |kappa - tau lambda| < c has kappa >= F_{n+1}, lambda >= F_n.
/// Throws std::invalid_argument if n < 1, n > 40 or c lies outside the open interval.
KappaLambdaCertificate kappa_lambda_bound(unsigned n, std::optional<GoldenNumber> c = std::nullopt);

struct BoundResult {
    int delta = 0;
    int d = 0;
    std::uint64_t H = 0;
    int N0 = 0;
    GoldenNumber bound;        // 1 + tau^(1 - N0) / H
    std::string bound_decimal; // 6 places
    bool certificate_passed = false;  // delta >= 3: kappa/lambda certificate with c = tau^2 / H passed
};

/// Requires 1 <= delta <= 9.
BoundResult upper_bound_v_delta(int delta);

/// The integer N0 with tau^(N0+1) <= H < tau^(N0+2).
int bracket_exponent(std::uint64_t H);

/// H * F_{N0 + N + 2}: a lower bound on the length of every return word to a
/// sufficiently long bispecial factor of v_delta lying over b_N.
BigInt shortest_return_lower_bound(unsigned N, int delta);

/// 1 + tau^3 / 2^(d-2); checks that upper_bound_v_delta(d/2) is strictly smaller.
/// Throws std::invalid_argument for odd d, d < 2 or d > 18.
GoldenNumber rtb_upper_bound(int d);

/// Replaces the occurrences of `target` alternately by the fresh letters A and B.
/// Throws std::invalid_argument if target does not occur in prefix(probe), or if
/// A or B already occur there.
words::GeneratorPtr split_letter(words::GeneratorPtr gen, words::Letter target, std::size_t probe = 4096);

/// Largest exponent of a repetition with period >= min_period inside
/// prefix(horizon) of v_delta. A lower estimate of a limsup, not the limit.
/// Requires 1 <= delta <= 5 and horizon <= 10^6.
ExponentEstimate empirical_asymptotic_estimate(int delta, std::size_t horizon, std::size_t min_period);

/// Same scan on an arbitrary generator.
ExponentEstimate empirical_estimate(words::SequenceGenerator& gen, std::size_t horizon, std::size_t min_period);

struct TableRow {
    int d = 0;
    BoundResult bound;
    std::string rtb_star_label;    // symbolic form of the known threshold
    std::string rtb_star_decimal;  // 6 places
    char marker = '?';             // '=' or '<' (or '>' if the bound were below)
};

/// Rows d = 2, 4, ..., d_max (d_max even, 2..10).
std::vector<TableRow> reproduce_table(int d_max = 10);

}  // namespace seqlab::exponents
