#pragma once

// Factor analysis on finite prefixes: occurrences, return words, bispecial
// factors, balancedness, derived sequences and repetitions.
//
// All scans take a materialized prefix (a WordView). The generator overloads
// materialize prefix(horizon) first.

#include "seqlab/golden.hpp"
#include "seqlab/words.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace seqlab::analysis {

using words::GeneratorPtr;
using words::Letter;
using words::Word;
using words::WordView;

struct OccurrenceList {
    Word factor;
    std::vector<std::size_t> positions;  // strictly increasing
    std::size_t horizon = 0;
};

/// All i with text[i, i + |w|) == w. Requires |w| >= 1.
OccurrenceList occurrences(WordView w, WordView text);
OccurrenceList occurrences(WordView w, words::SequenceGenerator& gen, std::size_t horizon);

struct ReturnWordSet {
    Word factor;
    std::vector<Word> returns;             // in order of first appearance
    std::vector<std::size_t> first_seen;   // occurrence that first produced returns[k]
    std::vector<std::size_t> occurrences;
    bool complete = false;  // no new return word over the last half of the horizon
    std::size_t horizon = 0;
};

/// Gap words between consecutive occurrences, given the sorted occurrence list.
ReturnWordSet return_words_from(WordView w, WordView text, const std::vector<std::size_t>& positions);

/// Throws std::invalid_argument when w occurs fewer than twice.
ReturnWordSet return_words(WordView w, WordView text);
ReturnWordSet return_words(WordView w, words::SequenceGenerator& gen, std::size_t horizon);

struct BispecialFactor {
    Word factor;
    std::vector<std::size_t> occurrences;  // every occurrence within the scanned prefix
    std::vector<Letter> left_extensions;
    std::vector<Letter> right_extensions;
};

/// Smallest horizon accepted for a bispecial scan up to max_len: 4 * max_len * tau^2.
std::size_t bispecial_min_horizon(std::size_t max_len);

/// Factors of length <= max_len with at least two left and two right
/// extensions inside text, ordered by length. Throws std::invalid_argument if
/// text is shorter than bispecial_min_horizon(max_len).
std::vector<BispecialFactor> bispecial_scan(WordView text, std::size_t max_len);
std::vector<Word> bispecial_factors(WordView text, std::size_t max_len);
std::vector<Word> bispecial_factors(words::SequenceGenerator& gen, std::size_t horizon, std::size_t max_len);

/// The N-th bispecial factor of f together with its prefix return word r_N and
/// non-prefix return word s_N.
struct FibBispecialRecord {
    unsigned N = 0;
    Word b, r, s;
    words::BinaryParikh psi_b, psi_r, psi_s;
};

/// Built from b_0 = eps, r_0 = a, s_0 = b and b_{N+1} = phi(b_N) a,
/// r_{N+1} = phi(r_N), s_{N+1} = phi(s_N).
FibBispecialRecord fib_bispecial(unsigned N);

/// Closed-form Parikh vectors: Psi(r_N) = (F_{N+1}, F_N), Psi(s_N) = (F_N, F_{N-1}),
/// Psi(b_N) = (F_{N+2} - 1, F_{N+1} - 1), with F_{-1} = 1. N <= 90.
struct FibBispecialLengths {
    words::BinaryParikh psi_b, psi_r, psi_s;
    std::uint64_t len_b() const { return psi_b.a + psi_b.b; }
    std::uint64_t len_r() const { return psi_r.a + psi_r.b; }
    std::uint64_t len_s() const { return psi_s.a + psi_s.b; }
};
FibBispecialLengths fib_bispecial_lengths(unsigned N);

/// The N with |w| = F_{N+3} - 2, if any.
std::optional<unsigned> fib_bispecial_index(std::size_t length);

struct BalanceViolation {
    std::size_t length = 0;
    Letter letter;
    std::size_t max_position = 0, max_count = 0;
    std::size_t min_position = 0, min_count = 0;
};

struct BalanceResult {
    bool balanced = true;
    std::optional<BalanceViolation> witness;  // first violation by (length, letter)
};

BalanceResult is_balanced(WordView text, std::size_t max_window);
BalanceResult is_balanced(words::SequenceGenerator& gen, std::size_t horizon, std::size_t max_window);

struct DerivedSequence {
    std::vector<Word> returns;        // index k names returns[k]; order of first appearance
    std::vector<std::size_t> letters; // d_0 d_1 ... up to the last certified occurrence
};

/// Throws std::invalid_argument if w is not a prefix of text or occurs only once.
DerivedSequence derived_sequence(WordView w, WordView text);
DerivedSequence derived_sequence(WordView w, words::SequenceGenerator& gen, std::size_t horizon);

/// |k - tau*l| < tau^2, exactly.
bool parikh_is_fib_factor(std::uint64_t k, std::uint64_t l);

struct RepetitionRecord {
    Word root;                 // text[position, position + period)
    std::size_t position = 0;
    std::size_t period = 0;
    std::size_t length = 0;    // run length; exponent = length / period
    Rational exponent() const { return Rational(length, period); }
    double exponent_value() const { return static_cast<double>(length) / static_cast<double>(period); }
};

/// Maximal exponent of a factor of text with a period in [min_period, max_period].
/// Periods of at least |text| are ignored. Ties go to the smaller period, then
/// the smaller position. Throws std::invalid_argument unless
/// 1 <= min_period <= max_period and min_period < |text|.
RepetitionRecord max_fractional_power(WordView text, std::size_t min_period, std::size_t max_period);
RepetitionRecord max_fractional_power(words::SequenceGenerator& gen, std::size_t horizon,
                                      std::size_t min_period, std::size_t max_period);

/// text[position, position + length) has period `period`.
bool has_period(WordView text, std::size_t position, std::size_t length, std::size_t period);

}  // namespace seqlab::analysis
