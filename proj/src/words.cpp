#include "seqlab/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace seqlab::words {

Letter Letter::coloured(int index, bool hatted)
{
    if (index < 1 || index > 255)
        throw std::invalid_argument("colour index must lie in 1..255, got " + std::to_string(index));
    return Letter(static_cast<std::uint16_t>(kColouredBase + 2 * (index - 1) + (hatted ? 1 : 0)));
}

std::string Letter::token() const
{
    if (is_symbol())
        return std::string(1, as_char());
    std::string t = std::to_string(index());
    if (hatted())
        t += '\'';
    return t;
}

std::size_t WordHash::operator()(WordView w) const noexcept
{
    // FNV-1a over the 16-bit letter codes
    std::uint64_t h = 1469598103934665603ull;
    for (Letter c : w) {
        h ^= c.code();
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

Word parse_word(std::string_view text)
{
    Word out;
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char ch = static_cast<unsigned char>(text[i]);
        if (std::isspace(ch)) {
            ++i;
            continue;
        }
        if (ch == '\'')
            throw std::invalid_argument("apostrophe without a preceding colour index at offset " + std::to_string(i));
        if (std::isdigit(ch)) {
            int index = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                index = index * 10 + (text[i] - '0');
                if (index > 255)
                    throw std::invalid_argument("colour index too large");
                ++i;
            }
            bool hat = i < text.size() && text[i] == '\'';
            if (hat)
                ++i;
            out.push_back(Letter::coloured(index, hat));
            continue;
        }
        out.push_back(Letter::symbol(static_cast<char>(ch)));
        ++i;
    }
    return out;
}

std::string format_word(WordView w)
{
    bool spaced = std::any_of(w.begin(), w.end(), [](Letter c) { return c.is_coloured(); });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (spaced && i > 0)
            out += ' ';
        out += w[i].token();
    }
    return out;
}

Word concat(WordView u, WordView v)
{
    Word out(u.begin(), u.end());
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

ParikhVector::ParikhVector(WordView w)
{
    for (Letter c : w)
        ++counts_[c];
}

std::size_t ParikhVector::count(Letter c) const
{
    auto it = counts_.find(c);
    return it == counts_.end() ? 0 : it->second;
}

std::size_t ParikhVector::total() const
{
    std::size_t s = 0;
    for (const auto& [c, n] : counts_)
        s += n;
    return s;
}

ParikhVector& ParikhVector::operator+=(const ParikhVector& o)
{
    for (const auto& [c, n] : o.counts_)
        counts_[c] += n;
    return *this;
}

BinaryParikh binary_parikh(WordView w)
{
    BinaryParikh p;
    for (Letter c : w) {
        if (c == kA)
            ++p.a;
        else if (c == kB)
            ++p.b;
        else
            throw std::invalid_argument("binary_parikh: letter '" + c.token() + "' is not in {a,b}");
    }
    return p;
}

Morphism::Morphism(std::map<Letter, Word> images) : images_(std::move(images))
{
    for (const auto& [c, img] : images_)
        if (img.empty())
            throw std::invalid_argument("morphism image of '" + c.token() + "' is empty");
}

const Word& Morphism::image(Letter c) const
{
    auto it = images_.find(c);
    if (it == images_.end())
        throw std::invalid_argument("morphism has no image for letter '" + c.token() + "'");
    return it->second;
}

bool Morphism::prolongable_on(Letter seed) const
{
    auto it = images_.find(seed);
    return it != images_.end() && it->second.size() >= 2 && it->second.front() == seed;
}

Word Morphism::apply(WordView u) const
{
    Word out;
    for (Letter c : u) {
        const Word& img = image(c);
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

const Morphism& fibonacci_morphism()
{
    static const Morphism phi({{kA, Word{kA, kB}}, {kB, Word{kA}}});
    return phi;
}

Word apply_morphism(const Morphism& m, WordView u)
{
    return m.apply(u);
}

void SequenceGenerator::ensure(std::size_t n)
{
    while (buffer_.size() < n) {
        std::size_t before = buffer_.size();
        grow(buffer_);
        if (buffer_.size() == before)
            throw std::logic_error("sequence generator made no progress");
    }
}

Word SequenceGenerator::prefix(std::size_t n)
{
    ensure(n);
    return Word(buffer_.begin(), buffer_.begin() + static_cast<std::ptrdiff_t>(n));
}

WordView SequenceGenerator::view(std::size_t n)
{
    ensure(n);
    return WordView(buffer_.data(), n);
}

Letter SequenceGenerator::at(std::size_t i)
{
    ensure(i + 1);
    return buffer_[i];
}

namespace {

// u = m(u) = m(u_0) m(u_1) ...: append the image of the next unread letter.
class FixedPointGenerator final : public SequenceGenerator {
public:
    FixedPointGenerator(Morphism m, Letter seed) : m_(std::move(m)), seed_(seed) {}

protected:
    void grow(Word& out) override
    {
        if (out.empty()) {
            const Word& img = m_.image(seed_);
            out.insert(out.end(), img.begin(), img.end());
            cursor_ = 1;
            return;
        }
        // double the buffer at most per call to avoid quadratic reallocation churn
        std::size_t target = out.size() * 2;
        while (out.size() < target && cursor_ < out.size()) {
            const Word& img = m_.image(out[cursor_++]);
            out.insert(out.end(), img.begin(), img.end());
        }
    }

private:
    Morphism m_;
    Letter seed_;
    std::size_t cursor_ = 0;
};

class PeriodicGenerator final : public SequenceGenerator {
public:
    explicit PeriodicGenerator(Word period) : period_(std::move(period)) {}

protected:
    void grow(Word& out) override
    {
        std::size_t reps = std::max<std::size_t>(1, out.size() / period_.size());
        for (std::size_t r = 0; r < reps; ++r)
            out.insert(out.end(), period_.begin(), period_.end());
    }

private:
    Word period_;
};

class ColouringGenerator final : public SequenceGenerator {
public:
    ColouringGenerator(GeneratorPtr base, GeneratorPtr unhatted, GeneratorPtr hatted)
        : base_(std::move(base)), unhatted_(std::move(unhatted)), hatted_(std::move(hatted))
    {}

protected:
    void grow(Word& out) override
    {
        std::size_t target = std::max<std::size_t>(64, out.size() * 2);
        while (out.size() < target) {
            Letter c = base_->at(out.size());
            if (c == kA)
                out.push_back(unhatted_->at(next_a_++));
            else if (c == kB)
                out.push_back(hatted_->at(next_b_++));
            else
                throw std::invalid_argument("colour: base sequence letter '" + c.token() + "' is not in {a,b}");
        }
    }

private:
    GeneratorPtr base_, unhatted_, hatted_;
    std::size_t next_a_ = 0;
    std::size_t next_b_ = 0;
};

class MappedGenerator final : public SequenceGenerator {
public:
    MappedGenerator(GeneratorPtr source, std::function<Letter(Letter)> f)
        : source_(std::move(source)), f_(std::move(f))
    {}

protected:
    void grow(Word& out) override
    {
        std::size_t target = std::max<std::size_t>(64, out.size() * 2);
        WordView src = source_->view(target);
        for (std::size_t i = out.size(); i < target; ++i)
            out.push_back(f_(src[i]));
    }

private:
    GeneratorPtr source_;
    std::function<Letter(Letter)> f_;
};

}  // namespace

GeneratorPtr fixed_point(Morphism m, Letter seed)
{
    if (!m.prolongable_on(seed))
        throw std::invalid_argument("morphism is not prolongable on '" + seed.token() + "'");
    return std::make_shared<FixedPointGenerator>(std::move(m), seed);
}

GeneratorPtr fibonacci_sequence()
{
    return fixed_point(fibonacci_morphism(), kA);
}

Word constant_gap_period(int delta, bool hatted)
{
    if (delta < 1)
        throw std::invalid_argument("constant gap sequence needs delta >= 1");
    if (delta > 24)
        throw std::invalid_argument("constant gap period 2^(delta-1) too large");
    // y_k sits on the even positions of y_{k+1}, the new letter k+1 on the odd ones
    Word period{Letter::coloured(1, hatted)};
    for (int k = 2; k <= delta; ++k) {
        Word next(period.size() * 2);
        for (std::size_t i = 0; i < period.size(); ++i) {
            next[2 * i] = period[i];
            next[2 * i + 1] = Letter::coloured(k, hatted);
        }
        period = std::move(next);
    }
    return period;
}

ConstantGap constant_gap(int delta, bool hatted)
{
    Word period = constant_gap_period(delta, hatted);
    ConstantGapSpec spec{delta, period.size()};
    return {periodic(std::move(period)), spec};
}

GeneratorPtr periodic(Word period)
{
    if (period.empty())
        throw std::invalid_argument("periodic: empty period");
    return std::make_shared<PeriodicGenerator>(std::move(period));
}

GeneratorPtr colour(GeneratorPtr base, GeneratorPtr unhatted, GeneratorPtr hatted)
{
    return std::make_shared<ColouringGenerator>(std::move(base), std::move(unhatted), std::move(hatted));
}

GeneratorPtr coloured_fibonacci(int delta)
{
    return colour(fibonacci_sequence(), constant_gap(delta, false).sequence, constant_gap(delta, true).sequence);
}

Letter discolour(Letter c)
{
    if (!c.is_coloured())
        throw std::invalid_argument("discolour: letter '" + c.token() + "' is not coloured");
    return c.hatted() ? kB : kA;
}

Word discolour(WordView w)
{
    Word out;
    out.reserve(w.size());
    for (Letter c : w)
        out.push_back(discolour(c));
    return out;
}

GeneratorPtr discolour(GeneratorPtr coloured)
{
    return map_letters(std::move(coloured), [](Letter c) { return discolour(c); });
}

GeneratorPtr map_letters(GeneratorPtr source, std::function<Letter(Letter)> f)
{
    return std::make_shared<MappedGenerator>(std::move(source), std::move(f));
}

std::vector<Letter> alphabet_of(WordView w)
{
    std::set<Letter> seen(w.begin(), w.end());
    return {seen.begin(), seen.end()};
}

}  // namespace seqlab::words
