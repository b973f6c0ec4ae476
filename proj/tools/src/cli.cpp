#include "romik_cli/cli.hpp"

#include "romik/ergodic_stats.hpp"
#include "romik/errors.hpp"
#include "romik/io.hpp"
#include "romik/maps.hpp"
#include "romik/natural_extension.hpp"
#include "romik/orbit_kernels.hpp"
#include "romik/rcf.hpp"
#include "romik/rewrite.hpp"
#include "romik/romik_expansion.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>

namespace romik::cli {

namespace {

using Row = std::vector<std::string>;

/// What a command produces; rendered as JSON, an aligned table or CSV.
struct Output {
    json data;
    Row headers;
    std::vector<Row> rows;
    std::vector<std::string> notes;  // table footer lines
    std::optional<std::string> csv;  // overrides the generic CSV rendering
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string decimal(long double v, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*Lf", digits, v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

void render(const Output& o, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << o.data.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        if (o.csv) {
            out << *o.csv;
            return;
        }
        auto line = [&](const Row& r) {
            for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i]);
            out << "\n";
        };
        line(o.headers);
        for (const Row& r : o.rows) line(r);
        return;
    }
    std::vector<std::size_t> width(o.headers.size());
    for (std::size_t i = 0; i < width.size(); ++i) width[i] = o.headers[i].size();
    for (const Row& r : o.rows)
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    auto line = [&](const Row& r) {
        std::string s;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) s += "  ";
            s += r[i] + std::string(width[i] - r[i].size(), ' ');
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        out << s << "\n";
    };
    line(o.headers);
    std::size_t total = 0;
    for (std::size_t w : width) total += w;
    out << std::string(total + 2 * (width.empty() ? 0 : width.size() - 1), '-') << "\n";
    for (const Row& r : o.rows) line(r);
    for (const std::string& n : o.notes) out << n << "\n";
}

Scalar scalar_arg(const std::string& what, const std::string& s) {
    try {
        return parse_scalar(s);
    } catch (const ParseError& e) {
        throw UsageError(what + ": " + e.what());
    }
}

Rational rational_arg(const std::string& what, const std::string& s) {
    try {
        return parse_rational(s);
    } catch (const ParseError& e) {
        throw UsageError(what + ": " + e.what());
    }
}

OpenInterval interval_arg(const std::string& what, const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw UsageError(what + ": expected lo,hi");
    OpenInterval i{rational_arg(what, s.substr(0, comma)), rational_arg(what, s.substr(comma + 1))};
    if (i.lo < Rational(0) || Rational(1) < i.hi || i.empty())
        throw UsageError(what + ": need 0 <= lo < hi <= 1");
    return i;
}

int precision_bits() {
    const char* env = std::getenv("ROMIK_PRECISION_BITS");
    if (!env || !*env) return 128;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 2 || v > 1 << 20)
        throw UsageError(std::string("ROMIK_PRECISION_BITS: invalid value '") + env + "'");
    return static_cast<int>(v);
}

/// Full text for short expansions, otherwise the first `keep` digits.
std::string rcf_text(const RcfExpansion& e, std::size_t keep = 16) {
    const std::size_t digits = e.pre.size() + (e.period ? e.period->size() : 0);
    if (digits <= keep + 8) return e.str();
    std::string s = "[" + e.a0.get_str() + ";";
    for (std::size_t i = 1; i <= keep; ++i) s += e.digit(i).get_str() + ",";
    return s + "...]";
}

std::string rcf_quality(const Scalar& x, const Convergent& c) {
    const Scalar q(Rational(c.q));
    Scalar d = x - Scalar(c.value());
    if (d.sign() < 0) d = -d;
    return decimal((q * q * d).to_long_double());
}

Output rcf_table(const Scalar& x, std::size_t depth) {
    const RcfExpansion e = rcf_expand(x);
    std::size_t n = depth;
    if (const auto len = e.length()) n = std::min(n, *len);
    const std::vector<Convergent> cs = rcf_convergents(e, n);
    Output o;
    o.headers = {"n", "a_n", "P_n", "Q_n", "P_n/Q_n", "Q_n^2|x-P_n/Q_n|"};
    json rows = json::array();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const std::string qual = rcf_quality(x, cs[i]);
        const Integer& a = e.digit(i + 1);
        o.rows.push_back({std::to_string(i + 1), a.get_str(), cs[i].p.get_str(), cs[i].q.get_str(),
                          cs[i].value().str(), qual});
        rows.push_back(json{{"n", i + 1}, {"a", integer_json(a)}, {"p", integer_json(cs[i].p)},
                            {"q", integer_json(cs[i].q)}, {"quality", qual}});
    }
    o.data = json{{"x", x}, {"value", decimal(x.to_long_double(), 18)}, {"expansion", e},
                  {"text", e.str()}, {"convergents", rows}};
    o.notes.push_back("x = " + x.str() + " = " + rcf_text(e));
    return o;
}

Output cmd_orbit(const Scalar& x, std::size_t steps) {
    Output o;
    o.headers = {"n", "R^n(x)", "value", "rcf", "branch", ""};
    json rows = json::array();
    Scalar cur = x;
    for (std::size_t n = 0; n <= steps; ++n) {
        const std::string rcf = rcf_text(rcf_expand(cur));
        const bool terminal = cur.is_zero() || cur == Scalar(1L);
        const std::string branch = terminal ? "-" : std::string(to_string(classify(cur)));
        const bool back = n > 0 && cur == x;
        o.rows.push_back({std::to_string(n), cur.str(), decimal(cur.to_long_double()), rcf, branch,
                          back ? "= x" : ""});
        rows.push_back(json{{"n", n}, {"point", cur}, {"text", cur.str()}, {"rcf", rcf},
                            {"branch", terminal ? json(nullptr) : json(branch)}});
        if (terminal) break;
        if (n < steps) cur = romik_step(cur);
    }
    const OrbitRecord rec = romik_orbit(x, steps);
    o.data = json{{"x", x}, {"steps", steps}, {"rows", rows}, {"end", std::string(to_string(rec.end))},
                  {"preperiod", nullptr}, {"period", nullptr}};
    std::string summary = "end: " + std::string(to_string(rec.end));
    if (rec.end == OrbitEnd::Periodic) {
        o.data["preperiod"] = rec.preperiod;
        o.data["period"] = rec.period;
        summary += ", preperiod " + std::to_string(rec.preperiod) + ", period " + std::to_string(rec.period);
    }
    o.notes.push_back(summary);
    return o;
}

void term_rows(Output& o, const std::vector<RomikTerm>& terms) {
    o.headers = {"n", "rho_{n-1}", "a_n"};
    for (std::size_t i = 0; i < terms.size(); ++i)
        o.rows.push_back({std::to_string(i + 1), std::to_string(terms[i].rho), std::to_string(terms[i].a)});
}

Output cmd_romik(const Scalar& x, std::size_t steps) {
    const RomikExpansion e = romik_digits(x, steps);
    Output o;
    term_rows(o, e.terms);
    o.data = json{{"x", x}, {"steps", e.steps}, {"expansion", e}, {"compact", e.compact()},
                  {"text", e.str()}, {"finite", e.finite()}};
    o.notes.push_back(e.compact());
    return o;
}

Output cmd_convert(const std::string& input, std::size_t steps, std::size_t depth) {
    RcfExpansion e;
    if (!input.empty() && input.front() == '[') {
        try {
            e = parse_rcf(input);
        } catch (const ParseError& err) {
            throw UsageError(std::string("input: ") + err.what());
        }
    } else {
        e = rcf_expand(scalar_arg("input", input));
    }
    const Conversion c = convert_rcf_to_romik(e, steps);
    RomikExpansion r;
    r.terms = c.terms(depth);
    const bool finite = c.status == ConversionStatus::Done && !c.periodic_twos &&
                        r.terms.size() == c.settled.size();
    if (finite) r.terminal = Scalar(0L);
    Output o;
    term_rows(o, r.terms);
    SignedCF pending;
    pending.terms = c.pending;
    o.data = json{{"rcf", e.str()}, {"status", std::string(to_string(c.status))},
                  {"steps_used", c.steps_used}, {"periodic_twos", c.periodic_twos},
                  {"terms", r.terms}, {"compact", r.compact()}, {"pending", pending.str()}};
    o.notes.push_back(r.compact());
    o.notes.push_back("status: " + std::string(to_string(c.status)) + " after " +
                      std::to_string(c.steps_used) + " steps");
    return o;
}

Output cmd_romik_convergents(const Scalar& x, std::size_t depth) {
    const RomikExpansion e = romik_terms(x, depth);
    const std::vector<RomikConvergent> cs = convergents(e.terms);
    Output o;
    o.headers = {"n", "term", "p_n/q_n", "M_n", "det", "expected"};
    json rows = json::array();
    for (const RomikConvergent& c : cs) {
        const int expected = expected_det(e.terms, c.n);
        const Integer det = c.m.det();
        o.rows.push_back({std::to_string(c.n), term_str(e.terms[c.n - 1]),
                          c.c.p.get_str() + "/" + c.c.q.get_str(), c.m.str(), det.get_str(),
                          std::to_string(expected)});
        rows.push_back(json{{"n", c.n}, {"term", e.terms[c.n - 1]}, {"p", integer_json(c.c.p)},
                            {"q", integer_json(c.c.q)}, {"matrix", c.m}, {"det", integer_json(det)},
                            {"expected_det", expected}});
    }
    o.data = json{{"x", x}, {"convergents", rows}};
    return o;
}

Output cmd_cylinder(const std::string& prefix) {
    std::vector<DigitPair> ds;
    try {
        ds = parse_digit_pairs(prefix);
    } catch (const ParseError& e) {
        throw UsageError(std::string("prefix: ") + e.what());
    }
    const Interval iv = cylinder_interval(ds);
    Output o;
    o.headers = {"k", "digits", "branch"};
    json branches = json::array(), pairs = json::array();
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const std::string b(to_string(branch_of(ds[i])));
        o.rows.push_back({std::to_string(i + 1),
                          "(" + std::to_string(ds[i].delta) + "," + std::to_string(ds[i].epsilon) + ")", b});
        branches.push_back(b);
        pairs.push_back(json::array({ds[i].delta, ds[i].epsilon}));
    }
    o.data = json{{"prefix", pairs}, {"branches", branches}, {"interval", iv}, {"length", iv.hi - iv.lo}};
    o.notes.push_back("cylinder: [" + iv.lo.str() + ", " + iv.hi.str() + "]");
    return o;
}

/// Random rectangle inside one branch, corners kept off the boundary of the square.
RationalRect random_rect(std::mt19937_64& rng) {
    static const Rational cuts[] = {Rational(0), Rational(1, 3), Rational(1, 2), Rational(1)};
    const long den = 997;
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<long> num(1, den - 1);
    const int b = pick(rng);
    auto inside = [&](const Rational& lo, const Rational& hi) {
        for (;;) {
            Rational a(num(rng), den), c(num(rng), den);
            if (c < a) std::swap(a, c);
            if (a < c && lo <= a && c <= hi) return std::pair{a, c};
        }
    };
    const auto [x1, x2] = inside(cuts[b], cuts[b + 1]);
    const auto [y1, y2] = inside(Rational(0), Rational(1));
    return make_rect(x1, x2, y1, y2);
}

Output cmd_natext(const std::vector<std::string>& rect, std::size_t random, std::uint64_t seed) {
    std::vector<RationalRect> rects;
    if (random > 0) {
        std::mt19937_64 rng(seed);
        for (std::size_t i = 0; i < random; ++i) rects.push_back(random_rect(rng));
    } else {
        if (rect.size() != 4) throw UsageError("rect: expected x1 x2 y1 y2");
        const RationalRect r = make_rect(rational_arg("rect", rect[0]), rational_arg("rect", rect[1]),
                                         rational_arg("rect", rect[2]), rational_arg("rect", rect[3]));
        rects = split_by_branch(r);
    }
    Output o;
    o.headers = {"rect", "image", "log_argument", "equal"};
    json recs = json::array();
    bool all = true;
    auto show = [](const RationalRect& r) {
        return "[" + r.x1.str() + "," + r.x2.str() + "]x[" + r.y1.str() + "," + r.y2.str() + "]";
    };
    for (const RationalRect& r : rects) {
        const InvarianceRecord rec = verify_invariance(r);
        all = all && rec.equal;
        o.rows.push_back({show(rec.rect), show(rec.image), rec.log_argument.str(), rec.equal ? "yes" : "no"});
        recs.push_back(rec);
    }
    o.data = json{{"records", recs}, {"all_equal", all}};
    o.notes.push_back(std::string("invariance: ") + (all ? "holds" : "FAILS") + " on " +
                      std::to_string(rects.size()) + " rectangles");
    return o;
}

Output cmd_induced(const Scalar& x, const Scalar& y, std::size_t steps) {
    Output o;
    o.headers = {"k", "x", "y", "return_time"};
    json rows = json::array();
    PlanarPoint p{x, y};
    o.rows.push_back({"0", x.str(), y.str(), "-"});
    for (std::size_t k = 1; k <= steps; ++k) {
        const InducedStep s = induced_step_O(p);
        p = s.point;
        o.rows.push_back({std::to_string(k), p.x.str(), p.y.str(), std::to_string(s.return_time)});
        rows.push_back(json{{"k", k}, {"x", p.x}, {"y", p.y}, {"return_time", s.return_time}});
        if (p.x.is_zero() || p.x == Scalar(1L)) break;
    }
    o.data = json{{"start", json::array({x, y})}, {"steps", rows}};
    return o;
}

Output cmd_ratio(std::uint64_t first_seed, std::size_t seeds, std::uint64_t n, const OpenInterval& f,
                 const OpenInterval& g, unsigned threads) {
    const int bits = precision_bits();
    std::vector<std::uint64_t> ids(seeds);
    std::iota(ids.begin(), ids.end(), first_seed);
    const std::vector<RatioExperiment> rs = run_ratio_experiments(ids, n, f, g, bits, threads);
    Output o;
    o.csv = ratio_csv(rs);
    o.headers = {"seed", "n", "counts_f", "counts_g", "ratio"};
    std::size_t within = 0;
    for (const RatioExperiment& r : rs) {
        o.rows.push_back({std::to_string(r.seed), std::to_string(r.iterations), std::to_string(r.counts_f),
                          std::to_string(r.counts_g), r.ratio ? decimal(*r.ratio, 6) : "-"});
        if (r.ratio && *r.ratio >= 0.45 && *r.ratio <= 0.55) ++within;
    }
    const MeasureRatio m = measure_ratio_exact(f, g);
    o.data = json{{"precision_bits", bits}, {"backend", std::string(to_string(backend_for_bits(bits)))},
                  {"f", f}, {"g", g}, {"rows", rs}, {"within_0.45_0.55", within},
                  {"expected", m.exact ? json(m.exact->str()) : json(nullptr)}};
    o.notes.push_back(std::to_string(within) + "/" + std::to_string(rs.size()) +
                      " seeds with ratio in [0.45, 0.55]");
    if (m.exact) o.notes.push_back("exact measure ratio: " + m.exact->str());
    return o;
}

Output cmd_skipped(const Scalar& x, std::size_t depth) {
    const SkippedReport r = skipped_convergents(x, depth);
    Output o;
    o.headers = {"n", "P_n/Q_n", "romik"};
    for (const SkippedEntry& e : r.rcf)
        o.rows.push_back({std::to_string(e.index), e.c.value().str(), e.present ? "present" : "missing"});
    o.data = r;
    o.notes.push_back(std::to_string(r.missing) + " of " + std::to_string(r.rcf.size()) + " missing");
    return o;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and floating experiments with the Romik map", "romik"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    CLI::Option* format_opt =
        app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table", "csv"}));

    std::string x, y, input, romik_x, rcf_x, prefix;
    std::vector<std::string> rect;
    std::size_t steps = 0, depth = 0, seeds = 50, random = 0, induced_steps = 1;
    std::uint64_t seed = 1, n = 10000000;
    unsigned threads = 0;
    std::string f_set = "1/2,2/3", g_set = "1/3,2/3";

    std::function<Output()> action;

    auto* orbit = app.add_subcommand("orbit", "R-orbit with RCF expansions of each point");
    orbit->add_option("x", x, "Scalar in [0,1]")->required();
    orbit->add_option("--steps", steps, "Number of applications of R")->default_val(10);
    orbit->callback([&] { action = [&] { return cmd_orbit(scalar_arg("x", x), steps); }; });

    auto* rcf = app.add_subcommand("rcf", "Regular continued fraction and its convergents");
    rcf->add_option("x", x, "Scalar")->required();
    rcf->add_option("--depth", depth, "Number of convergents")->default_val(10);
    rcf->callback([&] { action = [&] { return rcf_table(scalar_arg("x", x), depth); }; });

    auto* romik = app.add_subcommand("romik", "Romik digit expansion");
    romik->add_option("x", x, "Scalar in [0,1]")->required();
    romik->add_option("--steps", steps, "Number of map steps")->default_val(20);
    romik->callback([&] { action = [&] { return cmd_romik(scalar_arg("x", x), steps); }; });

    auto* convert = app.add_subcommand("convert", "Rewrite an RCF expansion into a Romik expansion");
    convert->add_option("input", input, "RCF literal like [0;1,(2)] or a scalar")->required();
    convert->add_option("--steps", steps, "Rewrite budget")->default_val(1000);
    convert->add_option("--depth", depth, "Romik terms to print")->default_val(40);
    convert->callback([&] { action = [&] { return cmd_convert(input, steps, depth); }; });

    auto* conv = app.add_subcommand("convergents", "Romik or RCF convergents");
    auto* romik_opt = conv->add_option("--romik", romik_x, "Scalar, Romik convergents");
    auto* rcf_opt = conv->add_option("--rcf", rcf_x, "Scalar, RCF convergents");
    romik_opt->excludes(rcf_opt);
    conv->add_option("--depth", depth, "Number of convergents")->default_val(9);
    conv->callback([&] {
        if (romik_opt->count() + rcf_opt->count() != 1)
            throw CLI::ValidationError("--romik/--rcf", "exactly one of --romik or --rcf is required");
        action = [&] {
            if (romik_opt->count()) return cmd_romik_convergents(scalar_arg("--romik", romik_x), depth);
            return rcf_table(scalar_arg("--rcf", rcf_x), depth);
        };
    });

    auto* cyl = app.add_subcommand("cylinder", "Cylinder set of a digit prefix");
    cyl->add_option("prefix", prefix, "Digit pairs like (1,1),(1,-1)")->required();
    cyl->callback([&] { action = [&] { return cmd_cylinder(prefix); }; });

    auto* nat = app.add_subcommand("natext-verify", "Exact invariance of the planar measure on rectangles");
    nat->add_option("rect", rect, "x1 x2 y1 y2")->expected(4);
    nat->add_option("--random", random, "Check this many random single-branch rectangles");
    nat->add_option("--seed", seed, "Seed for --random")->default_val(1);
    nat->callback([&] { action = [&] { return cmd_natext(rect, random, seed); }; });

    auto* ind = app.add_subcommand("induced", "First-return map on [0,1]x[0,1/2]");
    ind->add_option("x", x, "First coordinate")->required();
    ind->add_option("y", y, "Second coordinate")->required();
    ind->add_option("--steps", induced_steps, "Number of induced steps")->default_val(1);
    ind->callback([&] {
        action = [&] { return cmd_induced(scalar_arg("x", x), scalar_arg("y", y), induced_steps); };
    });

    auto* ratio = app.add_subcommand("ratio", "Occupation ratios along floating orbits");
    ratio->add_option("--seeds", seeds, "Number of seeds")->default_val(50)->check(CLI::PositiveNumber);
    ratio->add_option("--seed", seed, "First seed")->default_val(1);
    ratio->add_option("--n", n, "Iterations per seed")->default_val(10000000)->check(CLI::PositiveNumber);
    ratio->add_option("--f", f_set, "Numerator interval lo,hi")->default_val("1/2,2/3");
    ratio->add_option("--g", g_set, "Denominator interval lo,hi")->default_val("1/3,2/3");
    ratio->add_option("--threads", threads, "Worker threads, 0 = all cores")->default_val(0);
    ratio->callback([&] {
        action = [&] {
            return cmd_ratio(seed, seeds, n, interval_arg("--f", f_set), interval_arg("--g", g_set), threads);
        };
    });

    auto* skipped = app.add_subcommand("skipped", "RCF convergents missing from the Romik convergents");
    skipped->add_option("x", x, "Quadratic surd or rational")->required();
    skipped->add_option("--depth", depth, "Number of RCF convergents")->default_val(7);
    skipped->callback([&] { action = [&] { return cmd_skipped(scalar_arg("x", x), depth); }; });

    try {
        std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "romik: " << e.what() << "\n";
        return UsageFailure;
    }

    // ratio rows are the CSV contract, so that is its default.
    if (!format_opt->count() && ratio->parsed()) format = "csv";

    try {
        const Output o = action();
        render(o, format, out);
        return Ok;
    } catch (const UsageError& e) {
        err << "romik: " << e.what() << "\n";
        return UsageFailure;
    } catch (const DomainError& e) {
        err << "romik: " << e.what() << "\n";
        return DomainFailure;
    }
}

}  // namespace romik::cli
