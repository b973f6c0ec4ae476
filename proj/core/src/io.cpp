#include "romik/io.hpp"

#include "romik/errors.hpp"

#include <cctype>

namespace romik {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool done() {
        skip_ws();
        return i_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++i_;
        return true;
    }
    bool accept(std::string_view word) {
        skip_ws();
        if (s_.substr(i_, word.size()) != word) return false;
        i_ += word.size();
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    Integer integer() {
        skip_ws();
        const std::size_t start = i_;
        if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::string tok(s_.substr(start, i_ - start));
        if (tok.empty() || tok == "-" || tok == "+") fail("expected an integer");
        if (tok[0] == '+') tok.erase(0, 1);
        return Integer(tok);
    }
    int small_int() {
        const Integer v = integer();
        if (!v.fits_sint_p()) fail("integer out of range");
        return static_cast<int>(v.get_si());
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " at offset " + std::to_string(i_) + " in \"" + std::string(s_) + "\"");
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;
};

Scalar parse_expr(Cursor& c);

Scalar parse_factor(Cursor& c) {
    if (c.accept('-')) return -parse_factor(c);
    if (c.accept('+')) return parse_factor(c);
    if (c.accept('(')) {
        Scalar v = parse_expr(c);
        c.expect(')');
        return v;
    }
    if (c.accept("sqrt")) {
        c.expect('(');
        const Integer d = c.integer();
        c.expect(')');
        if (d < 0) c.fail("negative radicand");
        return surd_canonicalize(0, 1, d, 1);
    }
    if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected a number, sqrt(...) or '('");
    return Scalar(Rational(c.integer()));
}

Scalar parse_term(Cursor& c) {
    Scalar v = parse_factor(c);
    for (;;) {
        if (c.accept('*')) v = v * parse_factor(c);
        else if (c.accept('/')) {
            const Scalar d = parse_factor(c);
            if (d.is_zero()) c.fail("division by zero");
            v = v / d;
        } else return v;
    }
}

Scalar parse_expr(Cursor& c) {
    Scalar v = parse_term(c);
    for (;;) {
        if (c.accept('+')) v = v + parse_term(c);
        else if (c.accept('-')) v = v - parse_term(c);
        else return v;
    }
}

// "[d0;" ... "]": returns the cursor positioned after ';' (or at ']' for "[d0]").
Integer open_bracket(Cursor& c) {
    c.expect('[');
    const Integer d0 = c.integer();
    if (!c.accept(';') && c.peek() != ']') c.fail("expected ';'");
    return d0;
}

void close_bracket(Cursor& c) {
    c.expect(']');
    if (!c.done()) c.fail("trailing characters");
}

}  // namespace

Scalar parse_scalar(std::string_view s) {
    Cursor c(s);
    Scalar v;
    try {
        v = parse_expr(c);
    } catch (const MixedDiscriminant& e) {
        throw ParseError(std::string("mixed radicands in \"") + std::string(s) + "\"");
    }
    if (!c.done()) c.fail("trailing characters");
    return v;
}

Rational parse_rational(std::string_view s) {
    const Scalar v = parse_scalar(s);
    if (!v.is_rational()) throw ParseError("expected a rational, got \"" + std::string(s) + "\"");
    return v.rational();
}

RcfExpansion parse_rcf(std::string_view s) {
    Cursor c(s);
    RcfExpansion e;
    e.a0 = open_bracket(c);
    auto positive = [&] {
        Integer a = c.integer();
        if (a < 1) c.fail("partial quotients must be positive");
        return a;
    };
    if (c.peek() != ']') {
        do {
            if (c.accept('(')) {
                std::vector<Integer> per;
                do per.push_back(positive());
                while (c.accept(','));
                c.expect(')');
                e.period = std::move(per);
                break;
            }
            e.pre.push_back(positive());
        } while (c.accept(','));
    }
    close_bracket(c);
    return e;
}

SignedCF parse_signed_cf(std::string_view s) {
    Cursor c(s);
    SignedCF cf;
    cf.d0 = open_bracket(c);
    if (c.peek() != ']') {
        do {
            const Integer first = c.integer();
            SignedTerm t;
            if (c.accept('/')) {
                if (first != 1 && first != -1) c.fail("numerator must be 1 or -1");
                t.c = static_cast<int>(first.get_si());
                t.d = c.integer();
            } else {
                t.d = first;
            }
            if (t.d < 0) c.fail("partial quotients must be nonnegative");
            cf.terms.push_back(std::move(t));
        } while (c.accept(','));
    }
    close_bracket(c);
    return cf;
}

std::vector<RomikTerm> parse_romik_terms(std::string_view s) {
    const SignedCF cf = parse_signed_cf(s);
    if (cf.d0 != 0) throw ParseError("Romik expansions start with [0;");
    std::vector<RomikTerm> terms;
    for (const SignedTerm& t : cf.terms) {
        if (!t.d.fits_sint_p()) throw ParseError("digit out of range");
        terms.push_back({t.c, static_cast<int>(t.d.get_si())});
    }
    return terms;
}

std::vector<DigitPair> parse_digit_pairs(std::string_view s) {
    Cursor c(s);
    std::vector<DigitPair> out;
    const bool bracketed = c.accept('[');
    if (c.peek() != ']' && !c.done()) {
        do {
            c.expect('(');
            DigitPair p;
            p.delta = c.small_int();
            c.expect(',');
            p.epsilon = c.small_int();
            c.expect(')');
            out.push_back(p);
        } while (c.accept(','));
    }
    if (bracketed) c.expect(']');
    if (!c.done()) c.fail("trailing characters");
    return out;
}

json integer_json(const Integer& n) {
    if (n.fits_slong_p()) return json(static_cast<std::int64_t>(n.get_si()));
    return json(n.get_str());
}

void to_json(json& j, const Rational& r) { j = r.str(); }

void to_json(json& j, const QuadSurd& s) {
    j = json{{"a", integer_json(s.a())}, {"e", integer_json(s.e())}, {"d", integer_json(s.d())},
             {"c", integer_json(s.c())}};
}

void to_json(json& j, const Scalar& s) {
    if (s.is_rational()) to_json(j, s.rational());
    else to_json(j, s.surd());
}

void to_json(json& j, const Mobius& m) {
    j = json::array({json::array({integer_json(m.m11), integer_json(m.m12)}),
                     json::array({integer_json(m.m21), integer_json(m.m22)})});
}

void to_json(json& j, const Convergent& c) { j = c.value().str(); }

void to_json(json& j, const RcfExpansion& e) {
    json pre = json::array();
    for (const Integer& a : e.pre) pre.push_back(integer_json(a));
    json period = nullptr;
    if (e.period) {
        period = json::array();
        for (const Integer& a : *e.period) period.push_back(integer_json(a));
    }
    j = json{{"a0", integer_json(e.a0)}, {"pre", pre}, {"period", period}};
}

void to_json(json& j, const RomikTerm& t) { j = json{{"rho", t.rho}, {"a", t.a}}; }

void to_json(json& j, const RomikExpansion& e) {
    j = json{{"terms", e.terms}, {"terminal", nullptr}};
    if (e.terminal) j["terminal"] = *e.terminal;
}

void to_json(json& j, const OrbitRecord& o) {
    j = json{{"points", o.points}, {"end", std::string(to_string(o.end))}};
    if (o.end == OrbitEnd::Periodic) {
        j["preperiod"] = o.preperiod;
        j["period"] = o.period;
    } else {
        j["preperiod"] = nullptr;
        j["period"] = nullptr;
    }
}

void to_json(json& j, const Interval& i) { j = json::array({i.lo, i.hi}); }

void to_json(json& j, const RationalRect& r) { j = json::array({r.x1, r.x2, r.y1, r.y2}); }

void to_json(json& j, const InvarianceRecord& r) {
    j = json{{"rect", r.rect}, {"image_rect", r.image}, {"log_argument", r.log_argument},
             {"equal", r.equal}};
}

void to_json(json& j, const SignedCF& cf) { j = cf.str(); }

void to_json(json& j, const OpenInterval& i) { j = json::array({i.lo, i.hi}); }

void to_json(json& j, const RatioExperiment& r) {
    j = json{{"seed", r.seed}, {"n", r.iterations}, {"f", r.f_set}, {"g", r.g_set},
             {"counts_f", r.counts_f}, {"counts_g", r.counts_g}, {"ratio", nullptr}};
    if (r.ratio) j["ratio"] = *r.ratio;
}

void to_json(json& j, const SkippedReport& r) {
    json rows = json::array();
    for (const SkippedEntry& e : r.rcf)
        rows.push_back(json{{"n", e.index}, {"convergent", e.c}, {"present", e.present}});
    json missing = json::array(), present = json::array();
    for (const SkippedEntry& e : r.rcf) (e.present ? present : missing).push_back(e.c);
    j = json{{"rcf", rows}, {"missing", missing}, {"present", present},
             {"missing_count", r.missing}, {"ratio", r.ratio}, {"running_ratio", r.running_ratio},
             {"romik_terms", r.romik_terms}};
}

}  // namespace romik
