#include "cli.hpp"

#include "verify.hpp"

#include "seqlab/exponents.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace seqlab::cli {

using json = nlohmann::json;
using namespace seqlab::words;
namespace an = seqlab::analysis;
namespace ex = seqlab::exponents;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string sequence;  // empty: colouring when --delta is given, else fibonacci
    int delta = 0;
    int d = 0;
    bool hatted = false;
    std::string split;
    std::size_t length = 0;
    std::size_t horizon = 10000;
    std::size_t max_window = 200;
    std::size_t max_len = 20;
    std::size_t min_period = 1;
    std::size_t max_period = 0;
    std::size_t limit = 100;
    std::string word;
    std::string text;
    std::uint64_t k = 0, l = 0;
    std::string kind;
    std::string format = "text";
    std::string output;
    std::string suite;
    std::string n_range;
    unsigned max = 0;
    std::uint64_t seed = 20230401;
    std::size_t samples = 10000;
    bool check_theorem6 = false;
};

json letter_json(Letter c)
{
    if (c.is_coloured())
        return {{"index", c.index()}, {"hat", c.hatted()}};
    return {{"symbol", std::string(1, c.as_char())}};
}

json word_json(WordView w)
{
    json letters = json::array();
    for (Letter c : w)
        letters.push_back(letter_json(c));
    return {{"text", format_word(w)}, {"length", w.size()}, {"letters", letters}};
}

json rational_json(const Rational& q)
{
    auto to_json = [](const BigInt& v) -> json {
        if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
            return v.convert_to<long long>();
        return v.str();
    };
    return {{"num", to_json(boost::multiprecision::numerator(q))},
            {"den", to_json(boost::multiprecision::denominator(q))}};
}

json golden_json(const golden::GoldenNumber& x)
{
    auto a = rational_json(x.rational_part());
    auto b = rational_json(x.tau_part());
    return {{"a_num", a["num"]}, {"a_den", a["den"]}, {"b_num", b["num"]}, {"b_den", b["den"]}};
}

std::string tau_power_text(int e)
{
    return e == 1 ? "tau" : "tau^" + std::to_string(e);
}

// 1 + 1/(H tau^(N0-1)) written without negative exponents
std::string symbolic_bound(const ex::BoundResult& b)
{
    int e = b.N0 - 1;
    std::string H = std::to_string(b.H);
    if (e > 0)
        return b.H == 1 ? "1 + 1/" + tau_power_text(e) : "1 + 1/(" + H + "*" + tau_power_text(e) + ")";
    if (e == 0)
        return "1 + 1/" + H;
    return b.H == 1 ? "1 + " + tau_power_text(-e) : "1 + " + tau_power_text(-e) + "/" + H;
}

void check_horizon(std::size_t n)
{
    if (n > max_horizon())
        throw UsageError("horizon " + std::to_string(n) + " exceeds the guard " + std::to_string(max_horizon()) +
                         " (set SEQLAB_MAX_HORIZON to raise it)");
}

void check_delta(int delta)
{
    if (delta < 1 || delta > 9)
        throw UsageError("--delta must lie in 1..9");
}

std::string sequence_name(const Config& cfg)
{
    if (!cfg.sequence.empty())
        return cfg.sequence;
    return cfg.delta ? "colouring" : "fibonacci";
}

GeneratorPtr make_sequence(const Config& cfg)
{
    const std::string name = sequence_name(cfg);
    GeneratorPtr gen;
    if (name == "fibonacci") {
        gen = fibonacci_sequence();
    } else if (name == "constant-gap") {
        check_delta(cfg.delta);
        gen = constant_gap(cfg.delta, cfg.hatted).sequence;
    } else if (name == "colouring" || name == "coloring") {
        check_delta(cfg.delta);
        gen = coloured_fibonacci(cfg.delta);
    } else {
        throw UsageError("unknown sequence '" + name + "' (fibonacci, constant-gap, colouring)");
    }
    if (!cfg.split.empty()) {
        Word target = parse_word(cfg.split);
        if (target.size() != 1)
            throw UsageError("--split expects a single letter");
        gen = ex::split_letter(gen, target.front());
    }
    return gen;
}

class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : out_(&fallback)
    {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_)
                throw UsageError("cannot open output file '" + path + "'");
            out_ = file_.get();
        }
    }
    std::ostream& get() { return *out_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* out_;
};

void check_format(const Config& cfg, bool allow_csv)
{
    if (cfg.format != "text" && cfg.format != "json" && !(allow_csv && cfg.format == "csv"))
        throw UsageError("unsupported --format '" + cfg.format + "'");
}

int cmd_generate(const Config& cfg, std::ostream& out)
{
    check_format(cfg, false);
    check_horizon(cfg.length);
    auto gen = make_sequence(cfg);
    Word w = gen->prefix(cfg.length);
    if (cfg.format == "json") {
        json j = word_json(w);
        j["sequence"] = sequence_name(cfg);
        out << j.dump() << '\n';
    } else {
        out << format_word(w) << '\n';
    }
    return kOk;
}

// Text under analysis: --text (or --word for power/balanced) verbatim, otherwise
// prefix(horizon) of the chosen sequence.
Word analysis_text(const Config& cfg, bool word_is_text)
{
    if (!cfg.text.empty())
        return parse_word(cfg.text);
    if (word_is_text && !cfg.word.empty())
        return parse_word(cfg.word);
    check_horizon(cfg.horizon);
    return make_sequence(cfg)->prefix(cfg.horizon);
}

int cmd_analyze(const Config& cfg, std::ostream& out, std::ostream& err)
{
    check_format(cfg, false);
    const bool as_json = cfg.format == "json";
    json j;
    j["analysis"] = cfg.kind;
    std::ostringstream text;
    int code = kOk;

    auto need_word = [&]() {
        if (cfg.word.empty())
            throw UsageError("analyze " + cfg.kind + " requires --word");
        return parse_word(cfg.word);
    };

    if (cfg.kind == "occurrences") {
        Word w = need_word();
        Word t = analysis_text(cfg, false);
        auto occ = an::occurrences(w, t);
        j["positions"] = occ.positions;
        j["horizon"] = occ.horizon;
        for (std::size_t i = 0; i < occ.positions.size(); ++i)
            text << (i ? " " : "") << occ.positions[i];
        text << '\n';
        if (occ.positions.empty()) {
            err << "factor '" << cfg.word << "' not found within horizon " << t.size() << '\n';
            code = kCheckFailed;
        }
    } else if (cfg.kind == "returns") {
        Word w = need_word();
        Word t = analysis_text(cfg, false);
        auto rw = an::return_words(w, t);
        json list = json::array();
        for (const auto& r : rw.returns) {
            list.push_back(word_json(r));
            text << format_word(r) << '\n';
        }
        j["returns"] = list;
        j["complete"] = rw.complete;
        j["occurrences"] = rw.occurrences.size();
        text << "complete: " << (rw.complete ? "true" : "false") << '\n';
    } else if (cfg.kind == "bispecial") {
        Word t = analysis_text(cfg, false);
        json list = json::array();
        for (const auto& bf : an::bispecial_scan(t, cfg.max_len)) {
            json e = word_json(bf.factor);
            e["occurrences"] = bf.occurrences.size();
            list.push_back(e);
            text << (bf.factor.empty() ? "(empty)" : format_word(bf.factor)) << '\n';
        }
        j["bispecial"] = list;
    } else if (cfg.kind == "balanced") {
        Word t = analysis_text(cfg, true);
        auto res = an::is_balanced(t, std::min(cfg.max_window, t.size()));
        j["balanced"] = res.balanced;
        text << "balanced: " << (res.balanced ? "true" : "false") << '\n';
        if (res.witness) {
            const auto& v = *res.witness;
            j["witness"] = {{"length", v.length},           {"letter", letter_json(v.letter)},
                            {"max_position", v.max_position}, {"max_count", v.max_count},
                            {"min_position", v.min_position}, {"min_count", v.min_count}};
            text << "witness: length " << v.length << ", letter " << v.letter.token() << ": " << v.max_count
                 << " at " << v.max_position << " vs " << v.min_count << " at " << v.min_position << '\n';
            code = kCheckFailed;
        }
    } else if (cfg.kind == "derived") {
        Word w = need_word();
        Word t = analysis_text(cfg, false);
        auto d = an::derived_sequence(w, t);
        json list = json::array();
        for (std::size_t k = 0; k < d.returns.size(); ++k) {
            list.push_back(word_json(d.returns[k]));
            text << k << ": " << format_word(d.returns[k]) << '\n';
        }
        std::vector<std::size_t> head(d.letters.begin(),
                                      d.letters.begin() + static_cast<std::ptrdiff_t>(std::min(cfg.limit, d.letters.size())));
        j["returns"] = list;
        j["letters"] = head;
        j["available"] = d.letters.size();
        for (std::size_t k = 0; k < head.size(); ++k)
            text << (k ? " " : "") << head[k];
        text << '\n';
    } else if (cfg.kind == "power") {
        Word t = analysis_text(cfg, true);
        std::size_t max_p = cfg.max_period ? cfg.max_period : t.size();
        auto rec = an::max_fractional_power(t, cfg.min_period, max_p);
        std::string exponent = golden::to_string(rec.exponent());
        j["root"] = word_json(rec.root);
        j["exponent"] = {{"num", rec.length}, {"den", rec.period}};
        j["exponent_decimal"] = golden::GoldenNumber(rec.exponent()).decimal(6);
        j["position"] = rec.position;
        j["period"] = rec.period;
        j["length"] = rec.length;
        text << "root: " << format_word(rec.root) << '\n'
             << "exponent: " << exponent << " (" << golden::GoldenNumber(rec.exponent()).decimal(6) << ")\n"
             << "position: " << rec.position << "\nperiod: " << rec.period << '\n';
    } else if (cfg.kind == "parikh") {
        bool r = an::parikh_is_fib_factor(cfg.k, cfg.l);
        j["k"] = cfg.k;
        j["l"] = cfg.l;
        j["is_factor"] = r;
        text << (r ? "true" : "false") << '\n';
    } else {
        throw UsageError("unknown analysis '" + cfg.kind +
                         "' (occurrences, returns, bispecial, balanced, derived, power, parikh)");
    }
    if (as_json)
        out << j.dump() << '\n';
    else
        out << text.str();
    return code;
}

int cmd_bound(const Config& cfg, std::ostream& out)
{
    check_format(cfg, false);
    int delta = cfg.delta;
    if (cfg.d != 0) {
        if (cfg.d < 2 || cfg.d > 18 || cfg.d % 2 != 0)
            throw UsageError("--d must be even and lie in 2..18");
        delta = cfg.d / 2;
    }
    check_delta(delta);
    auto b = ex::upper_bound_v_delta(delta);
    json j{{"delta", b.delta}, {"d", b.d},           {"H", b.H},
           {"N0", b.N0},       {"bound", symbolic_bound(b)}, {"bound_exact", golden_json(b.bound)},
           {"bound_decimal", b.bound_decimal}};
    std::ostringstream text;
    text << "delta: " << b.delta << "\nd: " << b.d << "\nH: " << b.H << "\nN0: " << b.N0 << '\n'
         << "bound: " << symbolic_bound(b) << " = " << b.bound << " ~ " << b.bound_decimal << '\n';
    if (cfg.check_theorem6) {
        auto coarse = ex::rtb_upper_bound(b.d);
        j["theorem6"] = {{"value", golden_json(coarse)}, {"decimal", coarse.decimal(6)}, {"strict", true}};
        text << "theorem6: " << b.bound_decimal << " < 1 + tau^3/2^" << (b.d - 2) << " = " << coarse << " ~ "
             << coarse.decimal(6) << '\n';
    }
    out << (cfg.format == "json" ? j.dump() + "\n" : text.str());
    return kOk;
}

int cmd_table(const Config& cfg, std::ostream& out)
{
    check_format(cfg, true);
    auto rows = ex::reproduce_table(10);
    const std::string expected = "==<=<";
    std::string markers;
    for (const auto& r : rows)
        markers += r.marker;

    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"d", r.d},
                           {"H", r.bound.H},
                           {"N0", r.bound.N0},
                           {"bound_exact", golden_json(r.bound.bound)},
                           {"bound_decimal", r.bound.bound_decimal},
                           {"rtb_star_decimal", r.rtb_star_decimal},
                           {"marker", std::string(1, r.marker)}});
        out << arr.dump() << '\n';
    } else if (cfg.format == "csv") {
        out << "d,H,N0,a_num,a_den,b_num,b_den,bound_decimal,rtb_star_decimal,marker\n";
        for (const auto& r : rows) {
            json e = golden_json(r.bound.bound);
            out << r.d << ',' << r.bound.H << ',' << r.bound.N0 << ',' << e["a_num"].dump() << ','
                << e["a_den"].dump() << ',' << e["b_num"].dump() << ',' << e["b_den"].dump() << ','
                << r.bound.bound_decimal << ',' << r.rtb_star_decimal << ',' << r.marker << '\n';
        }
    } else {
        char line[256];
        std::snprintf(line, sizeof line, "%-3s %-4s %-4s %-24s %-10s %-3s %-24s %s\n", "d", "H", "N0", "bound",
                      "decimal", "", "RTB*(d)", "decimal");
        out << line;
        for (const auto& r : rows) {
            std::snprintf(line, sizeof line, "%-3d %-4llu %-4d %-24s %-10s %-3c %-24s %s\n", r.d,
                          static_cast<unsigned long long>(r.bound.H), r.bound.N0, symbolic_bound(r.bound).c_str(),
                          r.bound.bound_decimal.c_str(), r.marker, r.rtb_star_label.c_str(),
                          r.rtb_star_decimal.c_str());
            out << line;
        }
    }
    return markers == expected ? kOk : kCheckFailed;
}

// "7" -> [7, 7], "1..10" -> [1, 10]
std::pair<unsigned, unsigned> parse_range(const std::string& s)
{
    try {
        auto dots = s.find("..");
        if (dots == std::string::npos) {
            unsigned v = static_cast<unsigned>(std::stoul(s));
            return {v, v};
        }
        unsigned lo = static_cast<unsigned>(std::stoul(s.substr(0, dots)));
        unsigned hi = static_cast<unsigned>(std::stoul(s.substr(dots + 2)));
        if (lo > hi)
            throw UsageError("empty range '" + s + "'");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("malformed range '" + s + "'");
    }
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err)
{
    check_format(cfg, false);
    const auto& names = verify::suite_names();
    if (std::find(names.begin(), names.end(), cfg.suite) == names.end())
        throw UsageError("unknown suite '" + cfg.suite + "'");
    verify::SuiteOptions opt;
    if (!cfg.n_range.empty()) {
        auto [lo, hi] = parse_range(cfg.n_range);
        // a single value selects the upper end, e.g. --n 200 for fib-properties
        opt.n_lo = cfg.n_range.find("..") == std::string::npos ? 0 : lo;
        opt.n_hi = hi;
    }
    opt.max = cfg.max;
    opt.horizon = cfg.horizon;
    opt.delta = cfg.delta;
    opt.seed = cfg.seed;
    opt.samples = cfg.samples;
    if (opt.horizon)
        check_horizon(opt.horizon);

    err << "running suite " << cfg.suite << "...\n";
    auto results = verify::run_suite(cfg.suite, opt);
    bool all = true;
    json arr = json::array();
    for (const auto& suite : results) {
        for (const auto& c : suite.checks) {
            all = all && c.passed;
            if (cfg.format == "json")
                arr.push_back({{"suite", suite.suite}, {"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            else
                out << (c.passed ? "PASS " : "FAIL ") << suite.suite << ": " << c.name
                    << (c.detail.empty() ? "" : " [" + c.detail + "]") << '\n';
        }
    }
    if (cfg.format == "json")
        out << json{{"passed", all}, {"checks", arr}}.dump() << '\n';
    else
        out << (all ? "all checks passed" : "some checks FAILED") << '\n';
    return all ? kOk : kCheckFailed;
}

}  // namespace

std::size_t max_horizon()
{
    if (const char* env = std::getenv("SEQLAB_MAX_HORIZON")) {
        try {
            return static_cast<std::size_t>(std::stoull(env));
        } catch (const std::logic_error&) {
        }
    }
    return 10'000'000;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config cfg;
    CLI::App app{"seqlab: balanced sequences from coloured Fibonacci words"};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "text, json (table: also csv)");
        sub->add_option("-o,--output", cfg.output, "write to this file instead of standard output");
    };
    auto add_sequence = [&](CLI::App* sub) {
        sub->add_option("--sequence", cfg.sequence, "fibonacci, constant-gap, colouring");
        sub->add_option("--delta", cfg.delta, "number of colours per letter (1..9)");
        sub->add_flag("--hatted", cfg.hatted, "constant-gap: use hatted letters");
        sub->add_option("--split", cfg.split, "replace this letter alternately by A and B");
    };

    auto* gen = app.add_subcommand("generate", "print a prefix of a sequence");
    add_sequence(gen);
    gen->add_option("--length,--horizon", cfg.length, "prefix length")->required();
    add_format(gen);

    auto* ana = app.add_subcommand("analyze", "factor analysis on a prefix");
    ana->add_option("kind", cfg.kind, "occurrences, returns, bispecial, balanced, derived, power, parikh")->required();
    add_sequence(ana);
    ana->add_option("--word", cfg.word, "factor (or the text itself for power/balanced)");
    ana->add_option("--text", cfg.text, "analyze this literal word instead of a sequence prefix");
    ana->add_option("--horizon", cfg.horizon, "prefix length scanned");
    ana->add_option("--max-window", cfg.max_window, "balanced: largest window length");
    ana->add_option("--max-len", cfg.max_len, "bispecial: longest factor");
    ana->add_option("--min-period", cfg.min_period, "power: smallest period");
    ana->add_option("--max-period", cfg.max_period, "power: largest period");
    ana->add_option("--limit", cfg.limit, "derived: letters printed");
    ana->add_option("--k", cfg.k, "parikh: number of a's");
    ana->add_option("--l", cfg.l, "parikh: number of b's");
    add_format(ana);

    auto* bnd = app.add_subcommand("bound", "exact upper bound on E*(v_delta)");
    bnd->add_option("--delta", cfg.delta, "1..9");
    bnd->add_option("--d", cfg.d, "even alphabet size 2..18");
    bnd->add_flag("--check-theorem6", cfg.check_theorem6, "compare with 1 + tau^3/2^(d-2)");
    add_format(bnd);

    auto* tab = app.add_subcommand("table", "bounds against known thresholds for d = 2..10");
    add_format(tab);

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", cfg.suite, "suite name")->required();
    ver->add_option("--n,--N", cfg.n_range, "index or range a..b");
    ver->add_option("--max", cfg.max, "lemma3: bound on k and l; returns: longest factor");
    ver->add_option("--horizon", cfg.horizon, "prefix length (suite default when omitted)");
    ver->add_option("--delta", cfg.delta, "restrict to one delta");
    ver->add_option("--seed", cfg.seed, "random seed");
    ver->add_option("--samples", cfg.samples, "golden-sign: number of samples");
    add_format(ver);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        // verify defaults its horizon per suite
        cfg.horizon = 0;
        app.parse(reversed);
        if (!ver->parsed() && cfg.horizon == 0)
            cfg.horizon = 10000;

        Sink sink(cfg.output, out);
        if (gen->parsed())
            return cmd_generate(cfg, sink.get());
        if (ana->parsed())
            return cmd_analyze(cfg, sink.get(), err);
        if (bnd->parsed())
            return cmd_bound(cfg, sink.get());
        if (tab->parsed())
            return cmd_table(cfg, sink.get());
        if (ver->parsed())
            return cmd_verify(cfg, sink.get(), err);
        return kUsage;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return kUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
}

}  // namespace seqlab::cli
