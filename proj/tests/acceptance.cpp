// Acceptance suite: one PASS/FAIL line per criterion; exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sus/sus.hpp>

namespace {

using sus::Interval;
using sus::pos_t;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Tally {
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string first_failure;

    void expect(bool cond, const std::function<std::string()>& what) {
        ++checks;
        if (cond) return;
        if (failures++ == 0) first_failure = what();
    }
};

std::string describe(const std::vector<Interval>& ivs) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < ivs.size(); ++i) os << (i ? "," : "") << ivs[i];
    os << '}';
    return os.str();
}

std::string describe(const sus::Text& t) {
    std::ostringstream os;
    os << "text[n=" << t.size() << "]:";
    for (pos_t i = 1; i <= std::min<pos_t>(t.size(), 24); ++i) os << ' ' << t[i];
    if (t.size() > 24) os << " ...";
    return os.str();
}

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] %d. %s: %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

sus::Text random_text(std::mt19937_64& rng, pos_t n, pos_t sigma) {
    std::vector<sus::Text::symbol_type> s(n);
    for (auto& c : s) c = static_cast<sus::Text::symbol_type>(rng() % sigma);
    return sus::Text(std::move(s));
}

// ---------------------------------------------------------------------------

void paper_example() {
    const auto t0 = Clock::now();
    const auto t = sus::Text::from_bytes("bcaacaabcaaababca");
    const auto built = sus::build_indexes(t);
    const auto& ivs = *built.interval;
    const auto& pts = *built.point;
    Tally tally;
    const std::vector<Interval> mus{{4, 5}, {5, 8}, {6, 9}, {7, 11}, {10, 12}, {13, 14}};
    tally.expect(built.mus().intervals() == mus, [&] { return "MUS set " + describe(built.mus().intervals()); });
    const auto iq = ivs.query(8, 10).intervals;
    tally.expect(iq == std::vector<Interval>{{6, 10}, {7, 11}, {8, 12}}, [&] { return "SUS([8,10]) " + describe(iq); });
    const auto pq = pts.query(7).intervals;
    tally.expect(pq == std::vector<Interval>{{4, 7}, {5, 8}, {6, 9}}, [&] { return "SUS(7) " + describe(pq); });
    tally.expect(pts.leftmost(7) == Interval{4, 7}, [] { return std::string("leftmost SUS(7)"); });
    tally.expect(pts.rightmost(7) == Interval{6, 9}, [] { return std::string("rightmost SUS(7)"); });
    tally.expect(!pts.meaningful_starts()[7], [] { return std::string("MUSbegin[7] is set"); });
    const double secs = seconds_since(t0);
    tally.expect(secs < 1.0, [&] { return "took " + std::to_string(secs) + " s"; });
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << tally.checks << " checks, " << secs * 1000 << " ms";
    if (tally.failures) os << "; first failure: " << tally.first_failure;
    report(1, "worked example (MUS set, interval [8,10], point 7, leftmost/rightmost, meaningless MUS at 7)",
           tally.failures == 0, os.str());
}

// ---------------------------------------------------------------------------

struct Corpus {
    Tally equivalence;  // exact agreement with the oracle
    Tally probes;       // probes <= 20 (occ + 1)
    Tally invariants;   // structural properties
    Tally counts;       // count(p) == |query(p)|
    std::uint64_t texts = 0;
    double seconds = 0;
};

void check_text(const sus::Text& t, bool all_intervals, std::mt19937_64& rng, Corpus& c) {
    const pos_t n = t.size();
    const sus::oracle::Report ref(t);
    const auto built = sus::build_indexes(t);
    const auto& ivs = *built.interval;
    const auto& pts = *built.point;
    const auto mus = built.mus().intervals();
    ++c.texts;

    // builders, succinct PLCP, non-nesting
    const auto ctx = sus::build_suffix_context(t);
    const auto splcp = sus::SuccinctPlcp::build(ctx);
    const auto mus_b = sus::build_mus_from_plcp_rank_next(splcp, ctx.rank_next, n);
    c.invariants.expect(mus_b == built.mus(), [&] { return "MUS builders disagree on " + describe(t); });
    bool plcp_ok = true;
    for (pos_t i = 1; i <= n; ++i) plcp_ok = plcp_ok && splcp[i] == ctx.plcp[i];
    c.invariants.expect(plcp_ok, [&] { return "succinct PLCP differs on " + describe(t); });
    for (std::size_t k = 1; k < mus.size(); ++k) {
        c.invariants.expect(mus[k - 1].start < mus[k].start && mus[k - 1].end < mus[k].end,
                            [&] { return "nested MUSs on " + describe(t); });
    }

    c.equivalence.expect(mus == ref.mus(), [&] { return "MUS set on " + describe(t) + ": " + describe(mus); });
    std::vector<Interval> meaningful;
    for (const auto& m : mus) {
        if (pts.meaningful_starts()[m.start]) meaningful.push_back(m);
    }
    c.equivalence.expect(meaningful == ref.meaningful_mus(),
                         [&] { return "meaningful MUS set on " + describe(t) + ": " + describe(meaningful); });

    for (pos_t p = 1; p <= n; ++p) {
        const pos_t len = pts.length_at(p);
        c.equivalence.expect(len == ref.lengths()[p], [&] { return "LENGTH[" + std::to_string(p) + "] on " + describe(t); });
        if (p < n) {
            const pos_t next = pts.length_at(p + 1);
            c.invariants.expect(len <= next + 1 && next <= len + 1,
                                [&] { return "LENGTH step at " + std::to_string(p) + " on " + describe(t); });
        }
        sus::ProbeCounter counter;
        const auto got = pts.query(p, &counter).intervals;
        const auto want = ref.sus(p);
        c.equivalence.expect(got == want, [&] {
            return "SUS(" + std::to_string(p) + ") on " + describe(t) + ": " + describe(got) + " vs " + describe(want);
        });
        if (!want.empty()) {
            c.equivalence.expect(pts.leftmost(p) == want.front() && pts.rightmost(p) == want.back(),
                                 [&] { return "leftmost/rightmost SUS(" + std::to_string(p) + ") on " + describe(t); });
        }
        c.probes.expect(counter.count <= 20 * (got.size() + 1), [&] {
            return "point " + std::to_string(p) + " used " + std::to_string(counter.count) + " probes on " + describe(t);
        });
        c.counts.expect(pts.count(p) == got.size(), [&] { return "count(" + std::to_string(p) + ") on " + describe(t); });
        for (const auto& iv : got) {
            const auto inside = std::count_if(mus.begin(), mus.end(), [&](const Interval& m) { return iv.contains(m); });
            c.invariants.expect(inside == 1, [&] { return "SUS " + describe({iv}) + " holds " + std::to_string(inside) + " MUSs"; });
            c.invariants.expect(p + 1 <= iv.start + len && iv.start <= p && p <= iv.end && iv.end + 1 <= p + len,
                                [&] { return "SUS " + describe({iv}) + " outside window of " + std::to_string(p); });
        }
    }

    auto interval = [&](pos_t s, pos_t e) {
        sus::ProbeCounter counter;
        const auto got = ivs.query(s, e, &counter).intervals;
        const auto want = ref.sus(s, e);
        c.equivalence.expect(got == want, [&] {
            return "SUS([" + std::to_string(s) + "," + std::to_string(e) + "]) on " + describe(t) + ": " + describe(got) +
                   " vs " + describe(want);
        });
        c.probes.expect(counter.count <= 20 * (got.size() + 1), [&] {
            return "interval [" + std::to_string(s) + "," + std::to_string(e) + "] used " +
                   std::to_string(counter.count) + " probes";
        });
    };
    if (all_intervals) {
        for (pos_t s = 1; s <= n; ++s) {
            for (pos_t e = s; e <= n; ++e) interval(s, e);
        }
    } else {
        std::uniform_int_distribution<pos_t> pick(1, n);
        for (int q = 0; q < 50; ++q) {
            auto a = pick(rng);
            auto b = pick(rng);
            if (a > b) std::swap(a, b);
            interval(a, b);
        }
    }
}

Corpus run_corpus() {
    Corpus c;
    const auto t0 = Clock::now();
    std::mt19937_64 rng(20240601);
    for (pos_t n = 1; n <= 12; ++n) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<sus::Text::symbol_type> s(n);
            for (pos_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1U;
            check_text(sus::Text(std::move(s)), true, rng, c);
        }
    }
    const pos_t sigmas[] = {1, 2, 4, 26};
    for (int k = 0; k < 1000; ++k) {
        const pos_t n = 1 + rng() % 200;
        check_text(random_text(rng, n, sigmas[k % 4]), false, rng, c);
    }
    c.seconds = seconds_since(t0);
    return c;
}

std::string summary(const Tally& t, const std::string& extra = "") {
    std::ostringstream os;
    os << t.checks << " checks, " << t.failures << " failures" << extra;
    if (t.failures) os << "; first: " << t.first_failure;
    return os.str();
}

// ---------------------------------------------------------------------------

struct OccStats {
    double probes = 0;
    double occ = 0;
    std::uint64_t queries = 0;

    void add(std::uint64_t p, std::size_t o) {
        probes += static_cast<double>(p);
        occ += static_cast<double>(o);
        ++queries;
    }
    [[nodiscard]] double mean_probes() const { return probes / static_cast<double>(queries); }
    [[nodiscard]] double mean_occ() const { return occ / static_cast<double>(queries); }
};

// Passes when mean probes grow from occ == 1 to occ >= 8 queries by at most
// four times the growth of mean occ.
std::string occ_scaling(const char* kind, const OccStats& lo, const OccStats& hi, bool& ok) {
    std::ostringstream os;
    os << kind << ": ";
    if (lo.queries == 0 || hi.queries == 0) {
        ok = false;
        os << "not enough queries (occ=1: " << lo.queries << ", occ>=8: " << hi.queries << ")";
        return os.str();
    }
    const double probe_ratio = hi.mean_probes() / lo.mean_probes();
    const double occ_ratio = hi.mean_occ() / lo.mean_occ();
    ok = probe_ratio <= 4.0 * occ_ratio;
    os.precision(3);
    os << "occ=1 x" << lo.queries << " mean probes " << lo.mean_probes() << "; occ>=8 x" << hi.queries
       << " mean occ " << hi.mean_occ() << " mean probes " << hi.mean_probes() << "; probe ratio " << probe_ratio
       << " vs occ ratio " << occ_ratio << " (occ/probe growth " << occ_ratio / probe_ratio << ")";
    return os.str();
}

void output_sensitivity(const Corpus& c) {
    std::mt19937_64 rng(77);
    const pos_t n = 100000;
    const auto t = random_text(rng, n, 2);
    const auto built = sus::build_indexes(t);
    const auto& ivs = *built.interval;
    const auto& pts = *built.point;

    Tally bound = c.probes;
    OccStats point_lo, point_hi, iv_lo, iv_hi;
    for (pos_t p = 1; p <= n; ++p) {
        sus::ProbeCounter counter;
        const auto occ = pts.query(p, &counter).occ();
        bound.expect(counter.count <= 20 * (occ + 1), [&] { return "point " + std::to_string(p) + " on the large text"; });
        if (occ == 1) point_lo.add(counter.count, occ);
        if (occ >= 8) point_hi.add(counter.count, occ);
    }
    std::uniform_int_distribution<pos_t> start(1, n);
    for (int q = 0; q < 200000; ++q) {
        const pos_t s = start(rng);
        const pos_t e = std::min(n, s + rng() % 8);
        sus::ProbeCounter counter;
        const auto occ = ivs.query(s, e, &counter).occ();
        bound.expect(counter.count <= 20 * (occ + 1), [&] {
            return "interval [" + std::to_string(s) + "," + std::to_string(e) + "] on the large text";
        });
        if (occ == 1) iv_lo.add(counter.count, occ);
        if (occ >= 8) iv_hi.add(counter.count, occ);
    }
    bool point_ok = false, iv_ok = false;
    const auto point_line = occ_scaling("point", point_lo, point_hi, point_ok);
    const auto iv_line = occ_scaling("interval", iv_lo, iv_hi, iv_ok);
    report(3, "output sensitivity (probes <= 20(occ+1); probe growth within 4x of occ growth on a 10^5-char text)",
           bound.failures == 0 && point_ok && iv_ok, summary(bound) + "; " + point_line + "; " + iv_line);
}

// ---------------------------------------------------------------------------

struct SectionBits {
    double mus = 0, rmq = 0, point = 0, interval_total = 0;
};

SectionBits per_char(const sus::BuiltIndexes& built, pos_t n) {
    const auto d = static_cast<double>(n);
    SectionBits b;
    b.mus = static_cast<double>(built.mus().total_bits()) / d;
    b.rmq = static_cast<double>(built.interval->rmq().total_bits()) / d;
    b.point = static_cast<double>(built.point->total_bits()) / d;
    b.interval_total = b.mus + b.rmq;
    return b;
}

void space_budget() {
    std::mt19937_64 rng(1000000);
    const pos_t big = 1000000, small = 10000;
    const auto t0 = Clock::now();
    const auto built = sus::build_indexes(random_text(rng, big, 4));
    const double build_secs = seconds_since(t0);
    const auto built_small = sus::build_indexes(random_text(rng, small, 4));
    const auto b = per_char(built, big);
    const auto s = per_char(built_small, small);

    // An n log n section would grow by log(10^6)/log(10^4) = 1.5 per character.
    const double growth_limit = 1.2;
    const bool interval_ok = b.interval_total <= 6.0;
    const bool point_ok = b.point <= 6.0;
    const bool linear = b.mus <= growth_limit * s.mus && b.rmq <= growth_limit * s.rmq && b.point <= growth_limit * s.point;
    const bool stages = built.log.stages().size() >= 6 && built.log.peak_bits() > 0;

    std::ostringstream os;
    os.precision(3);
    os << std::fixed << "n=10^6 sigma=4 m=" << built.mus().count() << ": interval " << b.interval_total
       << " bits/char (MUSIX " << b.mus << " + IVSUS " << b.rmq << "), point " << b.point
       << " bits/char; per-char at n=10^4: MUSIX " << s.mus << " IVSUS " << s.rmq << " PTSUS " << s.point
       << "; build " << build_secs << " s, " << built.log.stages().size() << " stages, peak "
       << static_cast<double>(built.log.peak_bits()) / static_cast<double>(big) << " bits/char";
    report(4, "space budget (interval <= 6, point <= 6 bits/char at 10^6; sections linear; stages reported)",
           interval_ok && point_ok && linear && stages, os.str());
    for (const auto& st : built.log.stages()) {
        std::printf("      stage %-48s %10.3f bits/char\n", st.name.c_str(),
                    static_cast<double>(st.working_bits) / static_cast<double>(big));
    }
}

// ---------------------------------------------------------------------------

void serialization() {
    std::mt19937_64 rng(4242);
    Tally tally;
    const pos_t sigmas[] = {1, 2, 4, 26};
    for (int k = 0; k < 100; ++k) {
        const auto t = random_text(rng, 1 + rng() % 200, sigmas[k % 4]);
        const auto built = sus::build_indexes(t);
        const auto bytes = sus::IndexContainer::from(built).encode();
        const auto loaded = sus::IndexContainer::decode(bytes);
        const auto ivs = loaded.interval_index();
        for (pos_t p = 1; p <= t.size(); ++p) {
            tally.expect(loaded.point->query(p).intervals == built.point->query(p).intervals,
                         [&] { return "point " + std::to_string(p) + " after reload of " + describe(t); });
            for (pos_t e = p; e <= t.size(); ++e) {
                tally.expect(ivs.query(p, e).intervals == built.interval->query(p, e).intervals,
                             [&] { return "interval after reload of " + describe(t); });
            }
        }
        auto bad = bytes;
        bad[rng() % bad.size()] ^= static_cast<std::uint8_t>(1U << (rng() % 8));
        bool rejected = false;
        try {
            (void)sus::IndexContainer::decode(bad);
        } catch (const sus::io::format_error&) {
            rejected = true;
        }
        tally.expect(rejected, [&] { return "corrupted container accepted for " + describe(t); });
        auto bad_sum = bytes;
        bad_sum.back() ^= 0x40;
        rejected = false;
        try {
            (void)sus::IndexContainer::decode(bad_sum);
        } catch (const sus::io::format_error&) {
            rejected = true;
        }
        tally.expect(rejected, [&] { return "corrupted checksum accepted for " + describe(t); });
    }
    report(7, "serialization (round trip on 100 random texts; corrupted files rejected)", tally.failures == 0,
           summary(tally));
}

}  // namespace

int main() {
    paper_example();

    const auto corpus = run_corpus();
    std::ostringstream c2;
    c2.precision(3);
    c2 << std::fixed << ", " << corpus.texts << " texts in " << corpus.seconds << " s";
    report(2, "oracle equivalence (all binary texts n <= 12 with every interval; 1000 random texts n <= 200)",
           corpus.equivalence.failures == 0 && corpus.seconds <= 300.0, summary(corpus.equivalence, c2.str()));

    output_sensitivity(corpus);
    space_budget();

    report(5, "structural invariants (non-nesting, LENGTH step, one MUS per SUS, window, succinct PLCP, builders)",
           corpus.invariants.failures == 0, summary(corpus.invariants));
    report(6, "count consistency (count(p) equals the number of enumerated SUSs)", corpus.counts.failures == 0,
           summary(corpus.counts));

    serialization();
    std::printf("%d of 7 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
