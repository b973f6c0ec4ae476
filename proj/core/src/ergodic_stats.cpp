#include "romik/ergodic_stats.hpp"

#include "romik/errors.hpp"
#include "romik/romik_expansion.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace romik {

Rational sample_start(std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    Integer a = static_cast<unsigned long>(gen() >> 11);
    const Integer b = static_cast<unsigned long>(gen() >> 11);
    if (a == 0) a = 1;
    Integer num = a;
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 53);
    num += b;
    Integer den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 106);
    return Rational(num, den);
}

RatioExperiment hopf_ratio(const Rational& x0, std::uint64_t n, const OpenInterval& f,
                           const OpenInterval& g, int precision_bits) {
    if (n == 0) throw OutOfDomain("hopf_ratio needs n >= 1");
    if (!(Rational(0) < x0 && x0 < Rational(1))) throw OutOfDomain("x0 outside (0,1): " + x0.str());
    RatioExperiment e;
    e.iterations = n;
    e.f_set = f;
    e.g_set = g;
    const OrbitCounts c = count_orbit_visits(x0, n, f, g, precision_bits);
    e.counts_f = c.f;
    e.counts_g = c.g;
    if (e.counts_g > 0) e.ratio = static_cast<double>(e.counts_f) / static_cast<double>(e.counts_g);
    return e;
}

RatioExperiment hopf_ratio_seeded(std::uint64_t seed, std::uint64_t n, const OpenInterval& f,
                                  const OpenInterval& g, int precision_bits) {
    RatioExperiment e = hopf_ratio(sample_start(seed), n, f, g, precision_bits);
    e.seed = seed;
    return e;
}

std::vector<RatioExperiment> run_ratio_experiments(const std::vector<std::uint64_t>& seeds,
                                                   std::uint64_t n, const OpenInterval& f,
                                                   const OpenInterval& g, int precision_bits,
                                                   unsigned threads) {
    std::vector<RatioExperiment> out(seeds.size());
    std::vector<std::exception_ptr> errors(seeds.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, seeds.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < seeds.size(); i = next++) {
            try {
                out[i] = hopf_ratio_seeded(seeds[i], n, f, g, precision_bits);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    return out;
}

std::string ratio_csv(const std::vector<RatioExperiment>& rows) {
    std::ostringstream os;
    os << "seed,n,counts_f,counts_g,ratio\n";
    for (const RatioExperiment& r : rows) {
        os << r.seed << ',' << r.iterations << ',' << r.counts_f << ',' << r.counts_g << ',';
        if (r.ratio) os << std::setprecision(17) << *r.ratio;
        os << '\n';
    }
    return os.str();
}

PrimitivePower primitive_power(const Rational& r) {
    if (r.sign() <= 0 || r == Rational(1)) throw OutOfDomain("primitive power of " + r.str());
    const Integer& p = r.num();
    const Integer& q = r.den();
    const std::size_t bits = std::max(mpz_sizeinbase(p.get_mpz_t(), 2), mpz_sizeinbase(q.get_mpz_t(), 2));
    for (unsigned long k = bits; k >= 2; --k) {
        Integer rp, rq;
        const bool exact_p = mpz_root(rp.get_mpz_t(), p.get_mpz_t(), k) != 0;
        if (!exact_p) continue;
        if (mpz_root(rq.get_mpz_t(), q.get_mpz_t(), k) != 0)
            return {Rational(rp, rq), Integer(static_cast<unsigned long>(k))};
    }
    return {r, Integer(1)};
}

namespace {

// Argument of the closed form log[x2(1-x1) / (x1(1-x2))]; 1 for empty sets.
Rational mu_argument(const OpenInterval& s) {
    if (s.empty()) return Rational(1);
    if (!(Rational(0) < s.lo && s.hi < Rational(1)))
        throw OutOfDomain("interval must lie inside (0,1)");
    return s.hi * (1 - s.lo) / (s.lo * (1 - s.hi));
}

}  // namespace

MeasureRatio measure_ratio_exact(const OpenInterval& f, const OpenInterval& g) {
    MeasureRatio m;
    m.arg_f = mu_argument(f);
    m.arg_g = mu_argument(g);
    m.measure_f = log(m.arg_f);
    m.measure_g = log(m.arg_g);
    if (m.arg_g == Rational(1)) return m;
    m.value = m.measure_f / m.measure_g;
    if (m.arg_f == Rational(1)) {
        m.exact = Rational(0);
        return m;
    }
    const PrimitivePower pf = primitive_power(m.arg_f), pg = primitive_power(m.arg_g);
    if (pf.base == pg.base) m.exact = Rational(pf.exponent, pg.exponent);
    else if (pf.base == reciprocal(pg.base)) m.exact = Rational(-pf.exponent, pg.exponent);
    return m;
}

SkippedReport skipped_convergents(const Scalar& x, std::size_t depth) {
    if (x.sign() <= 0 || compare(x, Scalar(1L)) >= 0) throw OutOfDomain("x must lie in (0,1)");
    const RcfExpansion e = rcf_expand(x);
    std::size_t avail = depth;
    if (const auto len = e.length()) avail = std::min(avail, *len);
    const std::vector<Convergent> rcf = rcf_convergents(e, avail);

    SkippedReport rep;
    const Integer q_max = rcf.empty() ? Integer(0) : rcf.back().q;
    // Once min(q_{n-1}, q_n) > q_max no later Romik convergent has a denominator <= q_max.
    RomikExpansion re = romik_start(x);
    Integer p0 = 1, q0 = 0, p1 = 0, q1 = 1;  // (p_{n-1}, q_{n-1}) and (p_n, q_n), starting at n = 0
    std::set<std::pair<Integer, Integer>> seen;
    std::size_t consumed = 0;
    for (;;) {
        if (re.terms.size() == consumed && !romik_advance(re)) break;
        const RomikTerm& t = re.terms[consumed++];
        Integer p2 = t.a * p1 + t.rho * p0, q2 = t.a * q1 + t.rho * q0;
        p0 = std::move(p1);
        q0 = std::move(q1);
        p1 = std::move(p2);
        q1 = std::move(q2);
        if (seen.emplace(p1, q1).second) rep.romik.push_back({p1, q1});
        if (std::min(q0, q1) > q_max) break;
    }
    rep.romik_terms = consumed;

    rep.running_ratio.reserve(rcf.size());
    for (std::size_t i = 0; i < rcf.size(); ++i) {
        const bool present = seen.count({rcf[i].p, rcf[i].q}) > 0;
        rep.rcf.push_back({i + 1, rcf[i], present});
        if (!present) ++rep.missing;
        rep.running_ratio.push_back(static_cast<double>(rep.missing) / static_cast<double>(i + 1));
    }
    if (!rcf.empty()) rep.ratio = rep.running_ratio.back();
    return rep;
}

}  // namespace romik
