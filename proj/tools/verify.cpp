#include "verify.hpp"

#include "seqlab/exponents.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace seqlab::verify {

using namespace seqlab::words;
namespace an = seqlab::analysis;
namespace ex = seqlab::exponents;

bool SuiteResult::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"fib-properties", "lemma3", "lemma4",   "prop1",       "derived",
                                                "returns",        "obs1",   "balanced", "theorem5",    "golden-sign",
                                                "all"};
    return names;
}

namespace {

template <typename T>
T pick(T value, T fallback)
{
    return value != T{} ? value : fallback;
}

SuiteResult fib_properties(const SuiteOptions& o)
{
    unsigned n = pick(o.n_hi, 200u);
    SuiteResult r{"fib-properties", {}};
    for (const auto& c : golden::verify_fib_properties(n).checks)
        r.checks.push_back({c.name + " (n<=" + std::to_string(n) + ")", c.passed, c.witness});
    return r;
}

SuiteResult lemma3(const SuiteOptions& o)
{
    const unsigned max = pick(o.max, 60u);
    const std::size_t horizon = pick<std::size_t>(o.horizon, 10000);
    auto f = fibonacci_sequence();
    WordView text = f->view(horizon);

    // Parikh vectors of all factors of length <= 2 max, by sliding windows
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (std::size_t len = 1; len <= 2 * std::size_t{max}; ++len) {
        std::uint64_t a = 0;
        for (std::size_t i = 0; i < len; ++i)
            a += text[i] == kA;
        seen.emplace(a, len - a);
        for (std::size_t i = len; i < text.size(); ++i) {
            a += (text[i] == kA) - (text[i - len] == kA);
            seen.emplace(a, len - a);
        }
    }
    Check c{"|k - tau l| < tau^2 <=> factor Parikh vector, 0<=k,l<=" + std::to_string(max), true, {}};
    std::size_t mismatches = 0;
    for (std::uint64_t k = 0; k <= max; ++k)
        for (std::uint64_t l = 0; l <= max; ++l) {
            if (k + l == 0)
                continue;
            if (an::parikh_is_fib_factor(k, l) != (seen.count({k, l}) != 0)) {
                if (mismatches++ == 0)
                    c.detail = "first mismatch at (" + std::to_string(k) + "," + std::to_string(l) + ")";
            }
        }
    c.passed = mismatches == 0;
    if (!c.passed)
        c.detail += ", " + std::to_string(mismatches) + " mismatches";
    return {"lemma3", {c}};
}

SuiteResult lemma4(const SuiteOptions& o)
{
    unsigned lo = pick(o.n_lo, 1u);
    unsigned hi = pick(o.n_hi, 10u);
    SuiteResult r{"lemma4", {}};
    for (unsigned n = lo; n <= hi; ++n) {
        auto cert = ex::kappa_lambda_bound(n);
        std::ostringstream detail;
        detail << "c=" << cert.bound.c << " pairs=" << cert.pairs_checked << " qualifying=" << cert.qualifying;
        if (!cert.violations.empty())
            detail << " violation=(" << cert.violations.front().first << "," << cert.violations.front().second << ")";
        if (!cert.anchor_qualifies)
            detail << " anchor (F_{n+1},F_n) rejected";
        if (!cert.predecessor_excluded)
            detail << " (F_n,F_{n-1}) accepted";
        r.checks.push_back({"n=" + std::to_string(n), cert.passed(), detail.str()});
    }
    return r;
}

SuiteResult prop1(const SuiteOptions& o)
{
    unsigned lo = pick(o.n_lo, 1u);
    unsigned hi = pick(o.n_hi, 15u);
    std::size_t horizon = pick<std::size_t>(o.horizon, 100000);
    auto f = fibonacci_sequence();
    WordView text = f->view(horizon);
    SuiteResult r{"prop1", {}};
    for (unsigned N = std::max(lo, 1u); N <= hi; ++N) {
        auto rec = an::fib_bispecial(N);
        auto closed = an::fib_bispecial_lengths(N);
        Check c{"N=" + std::to_string(N), true, {}};
        auto fail = [&](const std::string& why) {
            if (c.passed) {
                c.passed = false;
                c.detail = why;
            }
        };
        if (!(rec.psi_r == closed.psi_r && rec.psi_s == closed.psi_s && rec.psi_b == closed.psi_b))
            fail("Parikh vectors differ from the closed form");
        if (rec.b.size() != golden::fib_u64(N + 3) - 2)
            fail("|b_N| != F_{N+3} - 2");
        if (!std::equal(rec.b.begin(), rec.b.end(), rec.b.rbegin()))
            fail("b_N is not a palindrome");
        if (!std::equal(rec.b.begin(), rec.b.end(), text.begin()))
            fail("b_N is not a prefix of f");
        try {
            auto rw = an::return_words(rec.b, text);
            if (rw.returns.size() != 2)
                fail(std::to_string(rw.returns.size()) + " return words scanned");
            else if (rw.returns[0] != rec.r || rw.returns[1] != rec.s)
                fail("scanned return words differ from r_N, s_N");
            else if (!rw.complete)
                fail("scan horizon does not certify the return words");
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
        r.checks.push_back(c);
    }
    return r;
}

SuiteResult derived(const SuiteOptions& o)
{
    unsigned lo = pick(o.n_lo, 1u);
    unsigned hi = pick(o.n_hi, 10u);
    std::size_t horizon = pick<std::size_t>(o.horizon, 30000);
    constexpr std::size_t kLetters = 100;
    auto f = fibonacci_sequence();
    WordView text = f->view(horizon);
    SuiteResult r{"derived", {}};
    for (unsigned N = std::max(lo, 1u); N <= hi; ++N) {
        Check c{"N=" + std::to_string(N), true, {}};
        auto rec = an::fib_bispecial(N);
        auto d = an::derived_sequence(rec.b, text);
        if (d.letters.size() < kLetters) {
            c.passed = false;
            c.detail = "only " + std::to_string(d.letters.size()) + " derived letters within the horizon";
        } else {
            for (std::size_t i = 0; i < kLetters; ++i)
                if ((d.letters[i] == 0 ? kA : kB) != text[i]) {
                    c.passed = false;
                    c.detail = "derived letter " + std::to_string(i) + " differs from f";
                    break;
                }
        }
        r.checks.push_back(c);
    }
    return r;
}

SuiteResult two_returns(const SuiteOptions& o)
{
    const unsigned max_len = pick(o.max, 50u);
    const std::size_t horizon = pick<std::size_t>(o.horizon, 20000);
    auto f = fibonacci_sequence();
    WordView text = f->view(horizon);
    Check c{"every factor of length <= " + std::to_string(max_len) + " has exactly two return words", true, {}};
    std::size_t factors = 0;
    for (std::size_t len = 1; len <= max_len && c.passed; ++len) {
        std::unordered_set<Word, WordHash> seen;
        for (std::size_t i = 0; i + len <= horizon / 4; ++i) {
            WordView w = text.subspan(i, len);
            if (!seen.emplace(w.begin(), w.end()).second)
                continue;
            ++factors;
            auto rw = an::return_words(w, text);
            if (rw.returns.size() != 2 || !rw.complete) {
                c.passed = false;
                c.detail = "factor " + format_word(w) + " has " + std::to_string(rw.returns.size()) + " return words";
                break;
            }
        }
    }
    if (c.passed)
        c.detail = std::to_string(factors) + " factors";
    return {"returns", {c}};
}

SuiteResult obs1(const SuiteOptions& o)
{
    const std::size_t horizon = pick<std::size_t>(o.horizon, 200000);
    std::vector<int> deltas = o.delta ? std::vector<int>{o.delta} : std::vector<int>{2, 3, 4};
    SuiteResult r{"obs1", {}};
    for (int delta : deltas) {
        const std::uint64_t H = std::uint64_t{1} << (delta - 1);
        auto v = coloured_fibonacci(delta);
        WordView text = v->view(horizon);
        std::size_t max_len = std::min<std::size_t>(horizon / 11, 20000);
        Check c{"delta=" + std::to_string(delta), true, {}};
        auto fail = [&](const std::string& why) {
            if (c.passed) {
                c.passed = false;
                c.detail = why;
            }
        };
        std::size_t long_ones = 0, returns_checked = 0;
        for (const auto& bf : an::bispecial_scan(text, max_len)) {
            Word base = discolour(bf.factor);
            auto psi = binary_parikh(base);
            if (psi.a < H || psi.b < H || bf.occurrences.size() < 2)
                continue;
            ++long_ones;
            auto N = an::fib_bispecial_index(bf.factor.size());
            if (!N) {
                fail("bispecial of length " + std::to_string(bf.factor.size()) + " is not F_{N+3}-2");
                continue;
            }
            if (base != an::fib_bispecial(*N).b)
                fail("discoloured bispecial of length " + std::to_string(bf.factor.size()) + " is not b_N");
            BigInt lower = ex::shortest_return_lower_bound(*N, delta);
            auto rw = an::return_words_from(bf.factor, text, bf.occurrences);
            for (const Word& ret : rw.returns) {
                ++returns_checked;
                auto p = binary_parikh(discolour(ret));
                if (p.a % H != 0 || p.b % H != 0)
                    fail("return word to a bispecial of length " + std::to_string(bf.factor.size()) +
                         " has Parikh vector (" + std::to_string(p.a) + "," + std::to_string(p.b) + ")");
                if (BigInt(ret.size()) < lower)
                    fail("return word shorter than H*F_{N0+N+2}");
            }
        }
        if (long_ones == 0)
            fail("no sufficiently long bispecial factor within the horizon");
        if (c.passed)
            c.detail = std::to_string(long_ones) + " bispecials, " + std::to_string(returns_checked) + " return words";
        r.checks.push_back(c);
    }
    return r;
}

SuiteResult balanced(const SuiteOptions& o)
{
    const std::size_t horizon = pick<std::size_t>(o.horizon, 10000);
    std::vector<int> deltas = o.delta ? std::vector<int>{o.delta} : std::vector<int>{1, 2, 3, 4};
    SuiteResult r{"balanced", {}};
    for (int delta : deltas) {
        auto v = coloured_fibonacci(delta);
        auto res = an::is_balanced(*v, horizon, std::min<std::size_t>(200, horizon));
        Check c{"v_" + std::to_string(delta) + " balanced", res.balanced, {}};
        if (res.witness)
            c.detail = "length " + std::to_string(res.witness->length) + ", letter " + res.witness->letter.token();
        r.checks.push_back(c);
    }
    return r;
}

SuiteResult theorem5(const SuiteOptions&)
{
    SuiteResult r{"theorem5", {}};
    for (int delta = 1; delta <= 9; ++delta) {
        auto b = ex::upper_bound_v_delta(delta);
        golden::GoldenNumber H(static_cast<long long>(b.H));
        bool bracket = golden::sign(H - golden::tau_pow(b.N0 + 1)) >= 0 && golden::sign(golden::tau_pow(b.N0 + 2) - H) > 0;
        bool ok = bracket && (delta < 3 || b.certificate_passed);
        r.checks.push_back({"delta=" + std::to_string(delta) + " N0=" + std::to_string(b.N0), ok, b.bound.str()});
    }
    for (int d = 2; d <= 18; d += 2) {
        Check c{"d=" + std::to_string(d) + " refined bound < 1 + tau^3/2^(d-2)", true, {}};
        try {
            c.detail = ex::rtb_upper_bound(d).str();
        } catch (const std::logic_error& e) {
            c.passed = false;
            c.detail = e.what();
        }
        r.checks.push_back(c);
    }
    return r;
}

SuiteResult golden_sign(const SuiteOptions& o)
{
    using Float = boost::multiprecision::cpp_bin_float_100;
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<long long> num(-1'000'000, 1'000'000);
    std::uniform_int_distribution<long long> den(1, 1'000'000);
    const Float tau = (1 + boost::multiprecision::sqrt(Float(5))) / 2;
    Check c{"exact sign agrees with 100-digit evaluation on " + std::to_string(o.samples) + " samples", true, {}};
    for (std::size_t i = 0; i < o.samples; ++i) {
        Rational a(num(rng), den(rng));
        Rational b(num(rng), den(rng));
        if (i % 4 == 0) {
            // near-cancellation: a close to -b * tau via Fibonacci ratios
            unsigned n = 10 + static_cast<unsigned>(i % 60);
            a = -b * Rational(golden::fib(n + 1), golden::fib(n));
        }
        golden::GoldenNumber x(a, b);
        auto to_float = [](const Rational& q) {
            return Float(boost::multiprecision::numerator(q)) / Float(boost::multiprecision::denominator(q));
        };
        Float approx = to_float(a) + to_float(b) * tau;
        int expected = approx > 0 ? 1 : (approx < 0 ? -1 : 0);
        if (boost::multiprecision::abs(approx) < Float("1e-80"))
            continue;
        if (golden::sign(x) != expected) {
            c.passed = false;
            c.detail = "mismatch at " + x.str();
            break;
        }
    }
    return {"golden-sign", {c}};
}

}  // namespace

std::vector<SuiteResult> run_suite(const std::string& name, const SuiteOptions& options)
{
    if (name == "fib-properties")
        return {fib_properties(options)};
    if (name == "lemma3")
        return {lemma3(options)};
    if (name == "lemma4")
        return {lemma4(options)};
    if (name == "prop1")
        return {prop1(options)};
    if (name == "derived")
        return {derived(options)};
    if (name == "returns")
        return {two_returns(options)};
    if (name == "obs1")
        return {obs1(options)};
    if (name == "balanced")
        return {balanced(options)};
    if (name == "theorem5")
        return {theorem5(options)};
    if (name == "golden-sign")
        return {golden_sign(options)};
    if (name == "all") {
        std::vector<SuiteResult> out;
        SuiteOptions defaults;
        defaults.seed = options.seed;
        defaults.samples = options.samples;
        for (const auto& s : suite_names())
            if (s != "all")
                out.push_back(run_suite(s, defaults).front());
        return out;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace seqlab::verify
