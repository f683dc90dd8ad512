#include "seqlab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace seqlab::analysis {

using golden::GoldenNumber;

OccurrenceList occurrences(WordView w, WordView text)
{
    if (w.empty())
        throw std::invalid_argument("occurrences: empty factor");
    OccurrenceList out;
    out.factor.assign(w.begin(), w.end());
    out.horizon = text.size();
    if (w.size() > text.size())
        return out;

    // Knuth-Morris-Pratt
    std::vector<std::size_t> fail(w.size(), 0);
    for (std::size_t i = 1, k = 0; i < w.size(); ++i) {
        while (k > 0 && w[i] != w[k])
            k = fail[k - 1];
        if (w[i] == w[k])
            ++k;
        fail[i] = k;
    }
    for (std::size_t i = 0, k = 0; i < text.size(); ++i) {
        while (k > 0 && text[i] != w[k])
            k = fail[k - 1];
        if (text[i] == w[k])
            ++k;
        if (k == w.size()) {
            out.positions.push_back(i + 1 - w.size());
            k = fail[k - 1];
        }
    }
    return out;
}

OccurrenceList occurrences(WordView w, words::SequenceGenerator& gen, std::size_t horizon)
{
    if (horizon < w.size())
        throw std::invalid_argument("occurrences: horizon shorter than the factor");
    return occurrences(w, gen.view(horizon));
}

ReturnWordSet return_words_from(WordView w, WordView text, const std::vector<std::size_t>& positions)
{
    if (positions.size() < 2)
        throw std::invalid_argument("return words undetermined: '" + words::format_word(w) +
                                    "' occurs fewer than twice in the scanned prefix");
    ReturnWordSet out;
    out.factor.assign(w.begin(), w.end());
    out.occurrences = positions;
    out.horizon = text.size();
    std::unordered_map<Word, std::size_t, words::WordHash> index;
    // occurrences are consecutive in the infinite sequence too, since every
    // occurrence inside the prefix was found
    for (std::size_t k = 0; k + 1 < positions.size(); ++k) {
        Word gap(text.begin() + static_cast<std::ptrdiff_t>(positions[k]),
                 text.begin() + static_cast<std::ptrdiff_t>(positions[k + 1]));
        if (index.emplace(gap, out.returns.size()).second) {
            out.returns.push_back(std::move(gap));
            out.first_seen.push_back(positions[k]);
        }
    }
    out.complete = out.first_seen.back() < text.size() / 2;
    return out;
}

ReturnWordSet return_words(WordView w, WordView text)
{
    return return_words_from(w, text, occurrences(w, text).positions);
}

ReturnWordSet return_words(WordView w, words::SequenceGenerator& gen, std::size_t horizon)
{
    return return_words(w, gen.view(horizon));
}

std::size_t bispecial_min_horizon(std::size_t max_len)
{
    // 4 * max_len * tau^2; tau^2 = 2.618...
    return static_cast<std::size_t>(std::ceil(4.0 * static_cast<double>(max_len) * 2.6180339887498949));
}

std::vector<BispecialFactor> bispecial_scan(WordView text, std::size_t max_len)
{
    if (text.size() < bispecial_min_horizon(max_len))
        throw std::invalid_argument("bispecial scan: horizon " + std::to_string(text.size()) +
                                    " below the required " + std::to_string(bispecial_min_horizon(max_len)));
    const std::size_t n = text.size();

    // Starting positions grouped by the factor of the current length. Groups are
    // contiguous, sorted ranges of `pos`. Groups with fewer than two distinct left
    // extensions are dropped: their extensions can never become left special.
    std::vector<std::size_t> pos(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        pos[i] = i;
    struct Group {
        std::size_t begin, end;
    };
    std::vector<Group> groups{{0, pos.size()}};

    std::vector<BispecialFactor> found;
    std::vector<std::size_t> scratch;
    for (std::size_t len = 0; len <= max_len && !groups.empty(); ++len) {
        std::vector<Group> next_groups;
        std::vector<std::size_t> next_pos;
        next_pos.reserve(pos.size());
        for (const Group& g : groups) {
            std::set<Letter> left, right;
            for (std::size_t k = g.begin; k < g.end; ++k) {
                std::size_t i = pos[k];
                if (i > 0)
                    left.insert(text[i - 1]);
                if (i + len < n)
                    right.insert(text[i + len]);
            }
            if (left.size() < 2)
                continue;
            if (right.size() >= 2) {
                BispecialFactor bf;
                std::size_t first = pos[g.begin];
                bf.factor.assign(text.begin() + static_cast<std::ptrdiff_t>(first),
                                 text.begin() + static_cast<std::ptrdiff_t>(first + len));
                bf.occurrences.assign(pos.begin() + static_cast<std::ptrdiff_t>(g.begin),
                                      pos.begin() + static_cast<std::ptrdiff_t>(g.end));
                bf.left_extensions.assign(left.begin(), left.end());
                bf.right_extensions.assign(right.begin(), right.end());
                found.push_back(std::move(bf));
            }
            // refine by the next letter; stable so positions stay sorted
            scratch.clear();
            for (std::size_t k = g.begin; k < g.end; ++k)
                if (pos[k] + len < n)
                    scratch.push_back(pos[k]);
            std::stable_sort(scratch.begin(), scratch.end(), [&](std::size_t x, std::size_t y) {
                return text[x + len] < text[y + len];
            });
            std::size_t k = 0;
            while (k < scratch.size()) {
                std::size_t j = k;
                Letter c = text[scratch[k] + len];
                while (j < scratch.size() && text[scratch[j] + len] == c)
                    ++j;
                if (j - k >= 2) {
                    std::size_t b = next_pos.size();
                    next_pos.insert(next_pos.end(), scratch.begin() + static_cast<std::ptrdiff_t>(k),
                                    scratch.begin() + static_cast<std::ptrdiff_t>(j));
                    next_groups.push_back({b, next_pos.size()});
                }
                k = j;
            }
        }
        pos = std::move(next_pos);
        groups = std::move(next_groups);
    }
    return found;
}

std::vector<Word> bispecial_factors(WordView text, std::size_t max_len)
{
    std::vector<Word> out;
    for (auto& bf : bispecial_scan(text, max_len))
        out.push_back(std::move(bf.factor));
    return out;
}

std::vector<Word> bispecial_factors(words::SequenceGenerator& gen, std::size_t horizon, std::size_t max_len)
{
    return bispecial_factors(gen.view(horizon), max_len);
}

FibBispecialRecord fib_bispecial(unsigned N)
{
    const auto& phi = words::fibonacci_morphism();
    FibBispecialRecord rec;
    rec.N = N;
    rec.r = {words::kA};
    rec.s = {words::kB};
    for (unsigned k = 0; k < N; ++k) {
        rec.b = phi.apply(rec.b);
        rec.b.push_back(words::kA);
        rec.r = phi.apply(rec.r);
        rec.s = phi.apply(rec.s);
    }
    rec.psi_b = words::binary_parikh(rec.b);
    rec.psi_r = words::binary_parikh(rec.r);
    rec.psi_s = words::binary_parikh(rec.s);
    return rec;
}

FibBispecialLengths fib_bispecial_lengths(unsigned N)
{
    if (N > 90)
        throw std::invalid_argument("fib_bispecial_lengths: N must be at most 90");
    auto F = [](unsigned k) { return golden::fib_u64(k); };
    FibBispecialLengths out;
    out.psi_r = {F(N + 1), F(N)};
    out.psi_s = {F(N), N == 0 ? 1 : F(N - 1)};
    out.psi_b = {F(N + 2) - 1, F(N + 1) - 1};
    return out;
}

std::optional<unsigned> fib_bispecial_index(std::size_t length)
{
    for (unsigned N = 0; N <= 88; ++N) {
        std::uint64_t len = golden::fib_u64(N + 3) - 2;
        if (len == length)
            return N;
        if (len > length)
            break;
    }
    return std::nullopt;
}

BalanceResult is_balanced(WordView text, std::size_t max_window)
{
    if (max_window > text.size())
        throw std::invalid_argument("is_balanced: max_window exceeds the horizon");
    BalanceResult result;
    const std::size_t n = text.size();
    for (Letter c : words::alphabet_of(text)) {
        std::vector<std::size_t> prefix_count(n + 1, 0);
        for (std::size_t i = 0; i < n; ++i)
            prefix_count[i + 1] = prefix_count[i] + (text[i] == c ? 1 : 0);
        for (std::size_t len = 1; len <= max_window; ++len) {
            BalanceViolation v{len, c, 0, 0, 0, len + 1};
            for (std::size_t i = 0; i + len <= n; ++i) {
                std::size_t k = prefix_count[i + len] - prefix_count[i];
                if (k > v.max_count) {
                    v.max_count = k;
                    v.max_position = i;
                }
                if (k < v.min_count) {
                    v.min_count = k;
                    v.min_position = i;
                }
            }
            if (v.max_count > v.min_count + 1) {
                bool earlier = !result.witness || len < result.witness->length;
                if (earlier) {
                    result.balanced = false;
                    result.witness = v;
                }
                break;
            }
        }
    }
    return result;
}

BalanceResult is_balanced(words::SequenceGenerator& gen, std::size_t horizon, std::size_t max_window)
{
    return is_balanced(gen.view(horizon), max_window);
}

DerivedSequence derived_sequence(WordView w, WordView text)
{
    if (w.size() > text.size() || !std::equal(w.begin(), w.end(), text.begin()))
        throw std::invalid_argument("derived sequence: '" + words::format_word(w) + "' is not a prefix");
    if (w.empty())
        throw std::invalid_argument("derived sequence: empty prefix");
    auto occ = occurrences(w, text);
    auto rw = return_words_from(w, text, occ.positions);
    std::unordered_map<Word, std::size_t, words::WordHash> index;
    for (std::size_t k = 0; k < rw.returns.size(); ++k)
        index.emplace(rw.returns[k], k);
    DerivedSequence out;
    out.returns = rw.returns;
    for (std::size_t k = 0; k + 1 < occ.positions.size(); ++k) {
        WordView gap = text.subspan(occ.positions[k], occ.positions[k + 1] - occ.positions[k]);
        out.letters.push_back(index.at(Word(gap.begin(), gap.end())));
    }
    return out;
}

DerivedSequence derived_sequence(WordView w, words::SequenceGenerator& gen, std::size_t horizon)
{
    return derived_sequence(w, gen.view(horizon));
}

bool parikh_is_fib_factor(std::uint64_t k, std::uint64_t l)
{
    GoldenNumber gap = golden::abs(GoldenNumber(Rational(BigInt(k))) -
                                   GoldenNumber(Rational(BigInt(l))) * GoldenNumber::tau());
    return gap < golden::tau_pow(2);
}

RepetitionRecord max_fractional_power(WordView text, std::size_t min_period, std::size_t max_period)
{
    const std::size_t n = text.size();
    if (min_period < 1 || min_period > max_period)
        throw std::invalid_argument("max_fractional_power: need 1 <= min_period <= max_period");
    if (min_period >= n)
        throw std::invalid_argument("max_fractional_power: min_period must be shorter than the text");
    max_period = std::min(max_period, n - 1);

    // best so far: run of length best_len with period best_p; start with the
    // trivial exponent 1 at position 0
    std::size_t best_p = min_period, best_len = min_period, best_pos = 0;

    for (std::size_t p = min_period; p <= max_period; ++p) {
        // a stretch of s matches gives a run of s + p; it beats the best iff
        // (s + p) * best_p > best_len * p
        auto needed = [&]() -> std::size_t {
            // smallest s with (s + p) * best_p > best_len * p
            unsigned __int128 lhs = static_cast<unsigned __int128>(best_len) * p;
            std::size_t run = static_cast<std::size_t>(lhs / best_p) + 1;
            return run > p ? run - p : 1;
        };
        const std::size_t limit = n - p;  // indices i with i + p < n
        std::size_t need = needed();
        if (need > limit)
            continue;
        // Match stretches are maximal index ranges with text[i] == text[i + p].
        // Any `need` consecutive indices contain one of need-1, 2need-1, ...,
        // so only those are probed and extended.
        std::size_t probe = need - 1;
        while (probe < limit) {
            if (text[probe] != text[probe + p]) {
                probe += need;
                continue;
            }
            std::size_t x = probe;
            while (x > 0 && text[x - 1] == text[x - 1 + p])
                --x;
            std::size_t y = probe + 1;
            while (y < limit && text[y] == text[y + p])
                ++y;
            std::size_t s = y - x;
            if (s >= need) {
                best_p = p;
                best_len = s + p;
                best_pos = x;
                need = needed();
            }
            // next probe strictly past y (a mismatch or the end)
            std::size_t start = y + 1;
            std::size_t k = (start + 1 + need - 1) / need;  // ceil((start + 1) / need)
            probe = k * need - 1;
        }
    }

    RepetitionRecord rec;
    rec.position = best_pos;
    rec.period = best_p;
    rec.length = best_len;
    rec.root.assign(text.begin() + static_cast<std::ptrdiff_t>(best_pos),
                    text.begin() + static_cast<std::ptrdiff_t>(best_pos + best_p));
    return rec;
}

RepetitionRecord max_fractional_power(words::SequenceGenerator& gen, std::size_t horizon,
                                      std::size_t min_period, std::size_t max_period)
{
    return max_fractional_power(gen.view(horizon), min_period, max_period);
}

bool has_period(WordView text, std::size_t position, std::size_t length, std::size_t period)
{
    if (period == 0 || position + length > text.size())
        return false;
    for (std::size_t i = position; i + period < position + length; ++i)
        if (text[i] != text[i + period])
            return false;
    return true;
}

}  // namespace seqlab::analysis
