// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance               run every criterion
//   acceptance --criterion N run criterion N only

#include "seqlab/analysis.hpp"
#include "seqlab/exponents.hpp"
#include "seqlab/golden.hpp"
#include "seqlab/words.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace seqlab;
using namespace seqlab::words;
namespace an = seqlab::analysis;
namespace ex = seqlab::exponents;
using golden::GoldenNumber;

namespace {

// Tolerances and limits, all fixed here.
constexpr double kTableSeconds = 1.0;
constexpr double kParikhSeconds = 10.0;
constexpr double kCertificateSeconds = 5.0;
constexpr double kReturnsSeconds = 30.0;
constexpr double kEmpiricalSeconds = 300.0;
const Rational kRatioTolerance(1, 100000);   // 1e-5
const Rational kScanTolerance(5, 100);       // 0.05
const Rational kBoundSlack(1, 1000000000);   // 1e-9

struct Outcome {
    bool passed = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            if (!passed)
                detail << "; ";
            detail << what;
            passed = false;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixed(double x, int places = 3)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, x);
    return buf;
}

Word slice(WordView t, std::size_t i, std::size_t len)
{
    return Word(t.begin() + static_cast<long>(i), t.begin() + static_cast<long>(i + len));
}

// 1. bounds rendered to six places and markers for d = 2..10
void table_reproduction(Outcome& o)
{
    const std::vector<std::string> expected{"3.618034", "1.809017", "1.250000", "1.047746", "1.014755"};
    auto t0 = Clock::now();
    auto rows = ex::reproduce_table(10);
    double secs = seconds_since(t0);
    o.require(rows.size() == 5, "expected 5 rows");
    std::string markers;
    for (std::size_t i = 0; i < rows.size() && i < expected.size(); ++i) {
        markers += rows[i].marker;
        if (rows[i].bound.bound_decimal != expected[i])
            o.require(false, "d=" + std::to_string(rows[i].d) + " bound " + rows[i].bound.bound_decimal +
                                 " (exact " + rows[i].bound.bound.str() + ") != " + expected[i]);
    }
    o.require(markers == "==<=<", "markers " + markers);
    o.require(secs < kTableSeconds, "runtime " + fixed(secs) + " s");
    if (o.passed)
        o.detail << "markers " << markers << ", " << fixed(secs) << " s";
}

// 2. exact bound identities
void exact_bounds(Outcome& o)
{
    const GoldenNumber one(1);
    const GoldenNumber tau = GoldenNumber::tau();
    const std::vector<GoldenNumber> expected{
        GoldenNumber(2) + tau,
        one + tau / GoldenNumber(2),
        GoldenNumber(Rational(5, 4)),
        one + golden::inv(GoldenNumber(8) * tau * tau),
        one + golden::inv(GoldenNumber(16) * tau * tau * tau),
    };
    for (int delta = 1; delta <= 5; ++delta) {
        GoldenNumber got = ex::upper_bound_v_delta(delta).bound;
        const GoldenNumber& want = expected[static_cast<std::size_t>(delta - 1)];
        bool same = got.rational_part() == want.rational_part() && got.tau_part() == want.tau_part();
        o.require(same, "delta=" + std::to_string(delta) + ": " + got.str() + " != " + want.str());
    }
    // delta = 4: 1 + (2 - tau)/8 after reduction
    o.require(ex::upper_bound_v_delta(4).bound == one + (GoldenNumber(2) - tau) / GoldenNumber(8),
              "delta=4 reduced form");
    if (o.passed)
        o.detail << "delta 1..5 exact";
}

// 3. |k - tau l| < tau^2 against brute-force factor Parikh vectors of prefix(10^4)
void parikh_oracle(Outcome& o)
{
    constexpr std::uint64_t kMax = 60;
    constexpr std::size_t kHorizon = 10000;
    auto t0 = Clock::now();
    Word f = fibonacci_sequence()->prefix(kHorizon);
    std::vector<std::size_t> pre(kHorizon + 1, 0);  // prefix counts of a
    for (std::size_t i = 0; i < kHorizon; ++i)
        pre[i + 1] = pre[i] + (f[i] == kA);
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (std::size_t len = 1; len <= 2 * kMax + 4; ++len)
        for (std::size_t i = 0; i + len <= kHorizon; ++i) {
            std::uint64_t a = pre[i + len] - pre[i];
            seen.insert({a, len - a});
        }
    std::size_t mismatches = 0, pairs = 0;
    for (std::uint64_t k = 0; k <= kMax; ++k)
        for (std::uint64_t l = 0; l <= kMax; ++l) {
            if (k + l == 0)
                continue;
            ++pairs;
            if (an::parikh_is_fib_factor(k, l) != (seen.count({k, l}) > 0)) {
                if (mismatches++ == 0)
                    o.detail << "first mismatch (" << k << "," << l << ")";
            }
        }
    double secs = seconds_since(t0);
    o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
    o.require(secs < kParikhSeconds, "runtime " + fixed(secs) + " s");
    if (o.passed)
        o.detail << pairs << " pairs, 0 mismatches, " << fixed(secs) << " s";
}

// 4. kappa/lambda certificates for n = 1..10
void certificates(Outcome& o)
{
    auto t0 = Clock::now();
    std::uint64_t checked = 0;
    for (unsigned n = 1; n <= 10; ++n) {
        auto cert = ex::kappa_lambda_bound(n);
        checked += cert.pairs_checked;
        o.require(cert.violations.empty(), "n=" + std::to_string(n) + ": " +
                                               std::to_string(cert.violations.size()) + " violations");
        o.require(cert.anchor_qualifies, "n=" + std::to_string(n) + ": (F_{n+1}, F_n) does not qualify");
        o.require(cert.enumeration_limit == golden::fib_u64(n + 3), "n=" + std::to_string(n) + ": enumeration limit");
    }
    double secs = seconds_since(t0);
    o.require(secs < kCertificateSeconds, "runtime " + fixed(secs) + " s");
    if (o.passed)
        o.detail << checked << " pairs enumerated, " << fixed(secs) << " s";
}

// 5. scanned return words to b_N against closed forms; two return words per short factor
void return_words(Outcome& o)
{
    auto t0 = Clock::now();
    Word f = fibonacci_sequence()->prefix(100000);
    for (unsigned N = 1; N <= 15; ++N) {
        auto rec = an::fib_bispecial(N);
        auto rw = an::return_words(rec.b, f);
        std::set<Word> got(rw.returns.begin(), rw.returns.end());
        o.require(got == std::set<Word>{rec.r, rec.s}, "N=" + std::to_string(N) + ": return words differ");
        std::uint64_t F1 = golden::fib_u64(N + 1), F0 = golden::fib_u64(N), Fm = golden::fib_u64(N - 1);
        auto pr = binary_parikh(rec.r), ps = binary_parikh(rec.s);
        o.require(pr.a == F1 && pr.b == F0 && ps.a == F0 && ps.b == Fm,
                  "N=" + std::to_string(N) + ": Parikh vectors differ");
    }
    // every factor of length <= 50: take factors from the first quarter, returns from the whole prefix
    Word t = slice(f, 0, 20000);
    std::set<Word> factors;
    for (std::size_t len = 1; len <= 50; ++len)
        for (std::size_t i = 0; i + len <= t.size() / 4; ++i)
            factors.insert(slice(t, i, len));
    std::size_t bad = 0;
    for (const auto& w : factors)
        if (an::return_words(w, t).returns.size() != 2)
            ++bad;
    o.require(bad == 0, std::to_string(bad) + " factors without exactly two return words");
    double secs = seconds_since(t0);
    o.require(secs < kReturnsSeconds, "runtime " + fixed(secs) + " s");
    if (o.passed)
        o.detail << "N=1..15 match, " << factors.size() << " factors with two return words, " << fixed(secs) << " s";
}

// 6. return words to long bispecials of v_delta have Parikh counts divisible by H
void divisibility(Outcome& o)
{
    constexpr std::size_t kHorizon = 200000;
    std::ostringstream summary;
    for (int delta = 2; delta <= 4; ++delta) {
        const std::size_t H = std::size_t{1} << (delta - 1);
        Word v = coloured_fibonacci(delta)->prefix(kHorizon);
        std::size_t max_len = kHorizon / 11;
        while (an::bispecial_min_horizon(max_len) > kHorizon)
            --max_len;
        auto bis = an::bispecial_scan(v, max_len);
        std::size_t long_ones = 0, returns = 0;
        for (const auto& bf : bis) {
            auto pw = binary_parikh(discolour(bf.factor));
            if (pw.a < H || pw.b < H)
                continue;
            ++long_ones;
            auto N = an::fib_bispecial_index(bf.factor.size());
            o.require(N.has_value(), "delta=" + std::to_string(delta) + ": bispecial of length " +
                                         std::to_string(bf.factor.size()) + " is not F_{N+3}-2");
            if (bf.occurrences.size() < 2)
                continue;
            auto rw = an::return_words_from(bf.factor, v, bf.occurrences);
            for (const auto& r : rw.returns) {
                ++returns;
                auto p = binary_parikh(discolour(r));
                o.require(p.a % H == 0 && p.b % H == 0,
                          "delta=" + std::to_string(delta) + ": return word with counts (" + std::to_string(p.a) +
                              "," + std::to_string(p.b) + ")");
            }
        }
        o.require(long_ones > 0, "delta=" + std::to_string(delta) + ": no sufficiently long bispecial");
        summary << "delta=" << delta << ": " << long_ones << " bispecials, " << returns << " return words; ";
    }
    if (o.passed)
        o.detail << summary.str();
}

// 7. ratio estimate and repetition scan for f approach 2 + tau
void convergence(Outcome& o)
{
    const GoldenNumber target = GoldenNumber(2) + GoldenNumber::tau();
    auto est = ex::asymptotic_exponent_fib_bispecial(30);
    GoldenNumber gap = golden::abs(est.estimate - target);
    o.require(gap < GoldenNumber(kRatioTolerance), "ratio estimate off by " + gap.decimal(9));
    auto f = fibonacci_sequence();
    auto scan = ex::empirical_estimate(*f, 100000, 100);
    GoldenNumber scan_gap = golden::abs(scan.estimate - GoldenNumber(Rational(3618034, 1000000)));
    o.require(scan_gap < GoldenNumber(kScanTolerance), "scan estimate " + scan.estimate.decimal(6));
    if (o.passed)
        o.detail << "ratio estimate " << est.estimate.decimal(9) << ", scan " << scan.estimate.decimal(6)
                 << " (period " << scan.lower_witness->period << ")";
}

// 8. empirical exponents of v_delta never exceed the exact bounds
void empirical_bounds(Outcome& o)
{
    auto t0 = Clock::now();
    constexpr std::size_t kHorizon = 1000000;
    std::ostringstream summary;
    for (int delta = 1; delta <= 4; ++delta) {
        std::size_t min_period = delta == 4 ? 500 : 100;
        auto est = ex::empirical_asymptotic_estimate(delta, kHorizon, min_period);
        GoldenNumber bound = ex::upper_bound_v_delta(delta).bound;
        o.require(est.estimate <= bound + GoldenNumber(kBoundSlack),
                  "delta=" + std::to_string(delta) + ": " + est.estimate.decimal(9) + " exceeds " + bound.decimal(9));
        if (delta <= 2)
            o.require(bound - est.estimate < GoldenNumber(kScanTolerance),
                      "delta=" + std::to_string(delta) + ": " + est.estimate.decimal(6) + " not within 0.05 of " +
                          bound.decimal(6));
        summary << "delta=" << delta << ": " << est.estimate.decimal(6) << " <= " << bound.decimal(6) << "; ";
    }
    double secs = seconds_since(t0);
    o.require(secs < kEmpiricalSeconds, "runtime " + fixed(secs) + " s");
    if (o.passed)
        o.detail << summary.str() << fixed(secs, 1) << " s";
}

// 9. splitting one letter of v_2 keeps it balanced and does not raise the exponent
void splitting(Outcome& o)
{
    constexpr std::size_t kPrefix = 10000;
    constexpr std::size_t kScanHorizon = 100000;
    auto v = coloured_fibonacci(2);
    auto s = ex::split_letter(v, Letter::coloured(1, false));
    auto letters = alphabet_of(s->prefix(kPrefix));
    o.require(letters.size() == 5, std::to_string(letters.size()) + " letters");
    o.require(an::is_balanced(*s, kPrefix, 200).balanced, "split sequence unbalanced");
    auto before = ex::empirical_estimate(*v, kScanHorizon, 100);
    auto after = ex::empirical_estimate(*s, kScanHorizon, 100);
    o.require(after.estimate <= before.estimate + GoldenNumber(kBoundSlack),
              "exponent rose from " + before.estimate.decimal(9) + " to " + after.estimate.decimal(9));
    if (o.passed)
        o.detail << "5 letters, balanced, exponent " << after.estimate.decimal(6) << " <= " << before.estimate.decimal(6);
}

// 10. balancedness of v_delta and a rejected witness
void balancedness(Outcome& o)
{
    for (int delta = 1; delta <= 4; ++delta) {
        auto r = an::is_balanced(*coloured_fibonacci(delta), 10000, 200);
        o.require(r.balanced, "v_" + std::to_string(delta) + " unbalanced");
    }
    auto bad = an::is_balanced(parse_word("aabb"), 4);
    o.require(!bad.balanced, "aabb accepted");
    if (!bad.balanced) {
        const auto& w = *bad.witness;
        o.require(w.length == 2, "witness length " + std::to_string(w.length));
        o.require(w.max_count == 2 && w.min_count == 0, "witness counts");
    }
    if (o.passed)
        o.detail << "v_1..v_4 balanced; aabb rejected at L=2";
}

// 11. derived sequence of f to b_N is f again
void derived(Outcome& o)
{
    Word f = fibonacci_sequence()->prefix(100000);
    for (unsigned N = 1; N <= 10; ++N) {
        auto rec = an::fib_bispecial(N);
        auto d = an::derived_sequence(rec.b, f);
        if (d.letters.size() < 100 || d.returns.size() != 2) {
            o.require(false, "N=" + std::to_string(N) + ": too few derived letters");
            continue;
        }
        bool same = true;
        for (std::size_t i = 0; i < 100; ++i)
            same = same && (d.letters[i] == 0 ? kA : kB) == f[i];
        o.require(same, "N=" + std::to_string(N) + ": derived prefix differs from f");
        o.require(d.returns[0] == rec.r, "N=" + std::to_string(N) + ": first return word is not r_N");
    }
    if (o.passed)
        o.detail << "N=1..10, 100 letters each";
}

struct Criterion {
    int id;
    const char* name;
    std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv)
{
    const std::vector<Criterion> criteria{
        {1, "table reproduction", table_reproduction},
        {2, "exact bound identities", exact_bounds},
        {3, "Parikh vector oracle equivalence", parikh_oracle},
        {4, "kappa/lambda certificates", certificates},
        {5, "return words to b_N", return_words},
        {6, "return word divisibility in v_delta", divisibility},
        {7, "convergence to 2+tau", convergence},
        {8, "empirical exponents below the bound", empirical_bounds},
        {9, "letter splitting", splitting},
        {10, "balancedness", balancedness},
        {11, "derived sequence self-similarity", derived},
    };

    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--criterion N]\n";
            return 2;
        }
    }

    int failures = 0, ran = 0;
    for (const auto& c : criteria) {
        if (only && c.id != only)
            continue;
        ++ran;
        Outcome o;
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        std::cout << (o.passed ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << o.detail.str()
                  << std::endl;
        failures += !o.passed;
    }
    if (ran == 0) {
        std::cerr << "no criterion " << only << '\n';
        return 2;
    }
    return failures == 0 ? 0 : 1;
}
