#include "seqlab/exponents.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <stdexcept>

namespace seqlab::exponents {

namespace mp = boost::multiprecision;
using golden::sign;
using golden::tau_pow;
using words::Letter;

namespace {

GoldenNumber from_int(const BigInt& v)
{
    return GoldenNumber(Rational(v));
}

// |kappa - tau lambda| < c  <=>  -c < kappa - tau lambda < c
bool within(const GoldenNumber& x, const GoldenNumber& c)
{
    return sign(c - x) > 0 && sign(c + x) > 0;
}

GoldenNumber fib_gap(unsigned n)  // F_{n+1} - tau F_n
{
    return from_int(golden::fib(n + 1)) - GoldenNumber::tau() * from_int(golden::fib(n));
}

}  // namespace

ExponentEstimate asymptotic_exponent_fib_bispecial(unsigned N_max)
{
    if (N_max < 3 || N_max > 88)
        throw std::invalid_argument("asymptotic_exponent_fib_bispecial: N_max must lie in 3..88");
    ExponentEstimate est;
    est.mode = EstimateMode::asymptotic;
    Rational best = 0;
    for (unsigned N = 0; N <= N_max; ++N) {
        auto lens = analysis::fib_bispecial_lengths(N);
        // s_N is the shorter return word (|s_N| = F_{N+1} <= F_{N+2} = |r_N|)
        BispecialRatio r{N, lens.len_b(), lens.len_s(), Rational(BigInt(lens.len_b()), BigInt(lens.len_s()))};
        best = std::max(best, r.ratio);
        est.bispecial_ratios.push_back(std::move(r));
    }
    est.estimate = GoldenNumber(1 + best);
    return est;
}

GoldenNumber kappa_lambda_default_c(unsigned n)
{
    if (n < 1)
        throw std::invalid_argument("kappa_lambda: n must be at least 1");
    return (golden::abs(fib_gap(n)) + golden::abs(fib_gap(n - 1))) * GoldenNumber(Rational(1, 2));
}

KappaLambdaCertificate kappa_lambda_bound(unsigned n, std::optional<GoldenNumber> c)
{
    if (n < 1 || n > 40)
        throw std::invalid_argument("kappa_lambda: n must lie in 1..40");
    GoldenNumber lower = golden::abs(fib_gap(n));
    GoldenNumber upper = golden::abs(fib_gap(n - 1));
    GoldenNumber cc = c ? *c : kappa_lambda_default_c(n);
    if (!(lower < cc && cc < upper))
        throw std::invalid_argument("kappa_lambda: c = " + cc.str() + " is outside (" + lower.str() + ", " +
                                    upper.str() + ")");

    KappaLambdaCertificate cert;
    cert.bound = {n, cc, golden::fib(n + 1), golden::fib(n)};
    const std::uint64_t kappa_min = golden::fib_u64(n + 1);
    const std::uint64_t lambda_min = golden::fib_u64(n);
    cert.enumeration_limit = golden::fib_u64(n + 3);

    const GoldenNumber t = GoldenNumber::tau();
    for (std::uint64_t l = 0; l <= cert.enumeration_limit; ++l) {
        GoldenNumber tl = t * GoldenNumber(static_cast<long long>(l));
        for (std::uint64_t k = 0; k <= cert.enumeration_limit; ++k) {
            if (k + l == 0)
                continue;
            ++cert.pairs_checked;
            if (!within(GoldenNumber(static_cast<long long>(k)) - tl, cc))
                continue;
            ++cert.qualifying;
            if (k < kappa_min || l < lambda_min)
                cert.violations.emplace_back(k, l);
        }
    }
    cert.anchor_qualifies = within(fib_gap(n), cc);
    cert.predecessor_excluded = !within(fib_gap(n - 1), cc);
    return cert;
}

int bracket_exponent(std::uint64_t H)
{
    if (H == 0)
        throw std::invalid_argument("bracket_exponent: H must be positive");
    GoldenNumber h(static_cast<long long>(H));
    for (int N0 = -1;; ++N0) {
        if (sign(h - tau_pow(N0 + 1)) >= 0 && sign(tau_pow(N0 + 2) - h) > 0)
            return N0;
        if (N0 > 200)
            throw std::logic_error("bracket_exponent: no bracketing exponent found");
    }
}

BoundResult upper_bound_v_delta(int delta)
{
    if (delta < 1 || delta > 9)
        throw std::invalid_argument("upper_bound_v_delta: delta must lie in 1..9");
    BoundResult r;
    r.delta = delta;
    r.d = 2 * delta;
    r.H = std::uint64_t{1} << (delta - 1);
    r.N0 = bracket_exponent(r.H);
    GoldenNumber H(static_cast<long long>(r.H));
    r.bound = GoldenNumber(1) + tau_pow(1 - r.N0) / H;
    r.bound_decimal = r.bound.decimal(6);

    if (delta >= 3) {
        // |F_{N0+1} - tau F_{N0}| = tau^-N0 < tau^2 / H < tau^(1-N0), then the
        // certificate with c = tau^2 / H
        GoldenNumber c = tau_pow(2) / H;
        unsigned n = static_cast<unsigned>(r.N0);
        bool bracket = golden::abs(fib_gap(n)) == tau_pow(-r.N0) && tau_pow(-r.N0) < c &&
                       c < tau_pow(1 - r.N0) && golden::abs(fib_gap(n - 1)) == tau_pow(1 - r.N0);
        r.certificate_passed = bracket && kappa_lambda_bound(n, c).passed();
    }
    return r;
}

BigInt shortest_return_lower_bound(unsigned N, int delta)
{
    auto b = upper_bound_v_delta(delta);
    int index = b.N0 + static_cast<int>(N) + 2;
    return BigInt(b.H) * golden::fib(static_cast<unsigned>(index));
}

GoldenNumber rtb_upper_bound(int d)
{
    if (d < 2 || d % 2 != 0 || d > 18)
        throw std::invalid_argument("rtb_upper_bound: d must be even and lie in 2..18");
    GoldenNumber denom(static_cast<long long>(std::uint64_t{1} << (d - 2)));
    GoldenNumber value = GoldenNumber(1) + tau_pow(3) / denom;
    auto b = upper_bound_v_delta(d / 2);
    if (!(b.bound < value))
        throw std::logic_error("rtb_upper_bound: refined bound is not below 1 + tau^3 / 2^(d-2)");
    return value;
}

namespace {

class SplitGenerator final : public words::SequenceGenerator {
public:
    SplitGenerator(words::GeneratorPtr source, Letter target) : source_(std::move(source)), target_(target) {}

protected:
    void grow(words::Word& out) override
    {
        std::size_t target_size = std::max<std::size_t>(64, out.size() * 2);
        words::WordView src = source_->view(target_size);
        for (std::size_t i = out.size(); i < target_size; ++i) {
            if (src[i] == target_)
                out.push_back(words::Letter::symbol((parity_++ % 2 == 0) ? 'A' : 'B'));
            else
                out.push_back(src[i]);
        }
    }

private:
    words::GeneratorPtr source_;
    Letter target_;
    std::size_t parity_ = 0;
};

}  // namespace

words::GeneratorPtr split_letter(words::GeneratorPtr gen, Letter target, std::size_t probe)
{
    words::WordView head = gen->view(probe);
    if (std::find(head.begin(), head.end(), target) == head.end())
        throw std::invalid_argument("split_letter: letter '" + target.token() + "' not found in the first " +
                                    std::to_string(probe) + " letters");
    for (char fresh : {'A', 'B'})
        if (std::find(head.begin(), head.end(), Letter::symbol(fresh)) != head.end())
            throw std::invalid_argument(std::string("split_letter: fresh letter ") + fresh + " already in use");
    return std::make_shared<SplitGenerator>(std::move(gen), target);
}

ExponentEstimate empirical_estimate(words::SequenceGenerator& gen, std::size_t horizon, std::size_t min_period)
{
    ExponentEstimate est;
    est.mode = EstimateMode::asymptotic;
    auto rec = analysis::max_fractional_power(gen.view(horizon), min_period, horizon - 1);
    est.estimate = GoldenNumber(rec.exponent());
    est.lower_witness = std::move(rec);
    return est;
}

ExponentEstimate empirical_asymptotic_estimate(int delta, std::size_t horizon, std::size_t min_period)
{
    if (delta < 1 || delta > 5)
        throw std::invalid_argument("empirical_asymptotic_estimate: delta must lie in 1..5");
    if (horizon > 1'000'000)
        throw std::invalid_argument("empirical_asymptotic_estimate: horizon must not exceed 10^6");
    auto gen = words::coloured_fibonacci(delta);
    return empirical_estimate(*gen, horizon, min_period);
}

namespace {

using Dec50 = mp::cpp_dec_float_50;

Dec50 to_dec(const GoldenNumber& x)
{
    Dec50 tau = (1 + mp::sqrt(Dec50(5))) / 2;
    auto conv = [](const Rational& q) {
        return Dec50(mp::numerator(q).str()) / Dec50(mp::denominator(q).str());
    };
    return conv(x.rational_part()) + conv(x.tau_part()) * tau;
}

std::string dec_fixed(const Dec50& x, int places)
{
    return x.str(places, std::ios_base::fixed);
}

}  // namespace

std::vector<TableRow> reproduce_table(int d_max)
{
    if (d_max < 2 || d_max > 10 || d_max % 2 != 0)
        throw std::invalid_argument("reproduce_table: d_max must be even and lie in 2..10");

    const GoldenNumber t = GoldenNumber::tau();
    std::vector<TableRow> rows;
    for (int d = 2; d <= d_max; d += 2) {
        TableRow row;
        row.d = d;
        row.bound = upper_bound_v_delta(d / 2);
        std::optional<GoldenNumber> exact;  // known threshold when it lies in Q(tau)
        Dec50 numeric;
        switch (d) {
        case 2:
            exact = GoldenNumber(2) + t;
            row.rtb_star_label = "2 + tau";
            break;
        case 4:
            exact = GoldenNumber(1) + t / GoldenNumber(2);
            row.rtb_star_label = "1 + tau/2";
            break;
        case 6:
            numeric = (75 + 3 * mp::sqrt(Dec50(65))) / 80;
            row.rtb_star_label = "(75 + 3*sqrt(65))/80";
            break;
        case 8:
            exact = GoldenNumber(1) + golden::inv(GoldenNumber(8) * tau_pow(2));
            row.rtb_star_label = "1 + 1/(8*tau^2)";
            break;
        case 10:
            numeric = (364 - 21 * mp::sqrt(Dec50(7))) / 304;
            row.rtb_star_label = "(364 - 21*sqrt(7))/304";
            break;
        }
        if (exact) {
            row.rtb_star_decimal = exact->decimal(6);
            int s = sign(row.bound.bound - *exact);
            row.marker = s == 0 ? '=' : (s > 0 ? '<' : '>');
        } else {
            row.rtb_star_decimal = dec_fixed(numeric, 6);
            Dec50 diff = to_dec(row.bound.bound) - numeric;
            if (mp::abs(diff) < Dec50("1e-45"))
                row.marker = '=';
            else
                row.marker = diff > 0 ? '<' : '>';
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace seqlab::exponents
