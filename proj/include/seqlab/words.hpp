#pragma once

// Finite words, Parikh vectors, morphisms and lazily generated infinite sequences.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace seqlab::words {

/// A letter is either a plain symbol (the Fibonacci letters a and b, the fresh
/// letters A and B introduced by letter splitting, or any other printable
/// character) or a coloured letter j or j-hat, 1 <= j <= 255.
class Letter {
public:
    constexpr Letter() = default;

    static constexpr Letter symbol(char c) { return Letter(static_cast<std::uint16_t>(static_cast<unsigned char>(c))); }

    static Letter coloured(int index, bool hatted);

    constexpr bool is_coloured() const { return code_ >= kColouredBase; }
    constexpr bool is_symbol() const { return !is_coloured(); }

    /// Colour index 1..255; only meaningful for coloured letters.
    constexpr int index() const { return is_coloured() ? ((code_ - kColouredBase) >> 1) + 1 : 0; }
    constexpr bool hatted() const { return is_coloured() && ((code_ - kColouredBase) & 1) != 0; }
    constexpr char as_char() const { return static_cast<char>(code_); }

    constexpr std::uint16_t code() const { return code_; }

    /// "a", "3", "3'" ...
    std::string token() const;

    friend constexpr bool operator==(Letter, Letter) = default;
    friend constexpr auto operator<=>(Letter, Letter) = default;

private:
    static constexpr std::uint16_t kColouredBase = 256;
    constexpr explicit Letter(std::uint16_t code) : code_(code) {}
    std::uint16_t code_ = 0;
};

inline constexpr Letter kA = Letter::symbol('a');
inline constexpr Letter kB = Letter::symbol('b');

using Word = std::vector<Letter>;
using WordView = std::span<const Letter>;

struct WordHash {
    std::size_t operator()(WordView w) const noexcept;
    std::size_t operator()(const Word& w) const noexcept { return (*this)(WordView(w)); }
};

/// Parses the plain-text sequence format. Whitespace between tokens is optional;
/// a token is a run of digits (coloured letter) optionally followed by an
/// apostrophe (hat), or a single non-space character (symbol).
/// Throws std::invalid_argument on a stray apostrophe or a zero colour index.
Word parse_word(std::string_view text);

/// Writes the plain-text format: words containing coloured letters are space
/// separated, symbol-only words are written contiguously.
std::string format_word(WordView w);

Word concat(WordView u, WordView v);

/// Letter-count vector Psi(u).
class ParikhVector {
public:
    ParikhVector() = default;
    explicit ParikhVector(WordView w);

    std::size_t count(Letter c) const;
    std::size_t total() const;
    const std::map<Letter, std::size_t>& counts() const { return counts_; }

    ParikhVector& operator+=(const ParikhVector& o);
    friend ParikhVector operator+(ParikhVector x, const ParikhVector& y) { return x += y; }
    friend bool operator==(const ParikhVector&, const ParikhVector&) = default;

private:
    std::map<Letter, std::size_t> counts_;  // zero counts are never stored
};

/// Number of a's and b's of a binary ({a,b}) word.
struct BinaryParikh {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    friend bool operator==(const BinaryParikh&, const BinaryParikh&) = default;
};

BinaryParikh binary_parikh(WordView w);

class Morphism {
public:
    Morphism() = default;
    explicit Morphism(std::map<Letter, Word> images);

    /// Throws std::invalid_argument for letters without an image.
    const Word& image(Letter c) const;
    bool has_image(Letter c) const { return images_.count(c) != 0; }

    /// Image of the seed starts with the seed and is longer than one letter.
    bool prolongable_on(Letter seed) const;

    Word apply(WordView u) const;

private:
    std::map<Letter, Word> images_;
};

/// phi: a -> ab, b -> a.
const Morphism& fibonacci_morphism();

Word apply_morphism(const Morphism& m, WordView u);

/// Memoizing prefix provider for an infinite sequence. Single writer: callers
/// sharing a generator across threads must serialize calls to `prefix`/`view`.
class SequenceGenerator {
public:
    virtual ~SequenceGenerator() = default;

    /// First n letters, copied.
    Word prefix(std::size_t n);

    /// First n letters without copying; valid until the next extension.
    WordView view(std::size_t n);

    Letter at(std::size_t i);

    std::size_t materialized() const { return buffer_.size(); }

protected:
    /// Appends at least one letter to `out`.
    virtual void grow(Word& out) = 0;

private:
    void ensure(std::size_t n);
    Word buffer_;
};

using GeneratorPtr = std::shared_ptr<SequenceGenerator>;

/// lim m^k(seed). Throws std::invalid_argument when m is not prolongable on seed.
GeneratorPtr fixed_point(Morphism m, Letter seed);

/// The Fibonacci sequence f = abaababaabaab...
GeneratorPtr fibonacci_sequence();

struct ConstantGapSpec {
    int delta = 1;
    std::size_t period = 1;  // H = 2^(delta-1)
};

/// One period of y_delta (or of its hatted copy).
Word constant_gap_period(int delta, bool hatted = false);

struct ConstantGap {
    GeneratorPtr sequence;
    ConstantGapSpec spec;
};

/// y_delta = (period)^omega; throws std::invalid_argument for delta < 1.
ConstantGap constant_gap(int delta, bool hatted = false);

/// Periodic sequence p^omega; p must be non-empty.
GeneratorPtr periodic(Word period);

/// Replaces the a's of `base` by successive letters of `unhatted` and the b's by
/// successive letters of `hatted`.
GeneratorPtr colour(GeneratorPtr base, GeneratorPtr unhatted, GeneratorPtr hatted);

/// v_delta: f coloured by y_delta and its hatted copy.
GeneratorPtr coloured_fibonacci(int delta);

/// Unhatted letters -> a, hatted -> b. Symbols are rejected.
Word discolour(WordView w);
Letter discolour(Letter c);
GeneratorPtr discolour(GeneratorPtr coloured);

/// Generator backed by a letter-wise transform of another generator.
GeneratorPtr map_letters(GeneratorPtr source, std::function<Letter(Letter)> f);

/// Distinct letters of w, sorted.
std::vector<Letter> alphabet_of(WordView w);

}  // namespace seqlab::words
