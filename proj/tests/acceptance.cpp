// Acceptance run: one line per criterion with its pinned tolerance and time
// limit. Exit status is nonzero when a criterion fails, except those listed
// as known to be unattainable (they still print FAIL).

#include "absorb/basic_code.hpp"
#include "absorb/bounds.hpp"
#include "absorb/channel.hpp"
#include "absorb/equivalence.hpp"
#include "absorb/errors.hpp"
#include "absorb/improved.hpp"
#include "absorb/marker.hpp"
#include "absorb/stats.hpp"
#include "absorb/sweep.hpp"
#include "absorb/vt.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace absorb;

namespace {

using Clock = std::chrono::steady_clock;
using bounds::cpp_int;
using bounds::cpp_rational;

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    int id;
    const char* title;
    double limitSeconds;
    std::function<Outcome()> run;
    const char* unattainable = nullptr; // reason, when the criterion cannot pass as stated
};

Word w(const char* text, int q) { return Word::parse(text, q); }

std::vector<Word> sorted(std::vector<Word> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Tallies named sub-checks; the detail string lists the failed ones.
class Checks {
public:
    void expect(bool ok, const std::string& what) {
        ++total_;
        if (!ok) {
            if (!failed_.empty()) failed_ += "; ";
            failed_ += what;
        }
    }
    Outcome outcome(const std::string& summary) const {
        std::ostringstream out;
        out << summary;
        if (!failed_.empty()) out << " | failed: " << failed_;
        return {failed_.empty(), out.str()};
    }
    bool ok() const { return failed_.empty(); }

private:
    std::size_t total_ = 0;
    std::string failed_;
};

template <class F>
void for_all_words(int q, std::size_t n, F&& f) {
    const std::uint64_t total = word_space_size(q, n, std::uint64_t{1} << 32);
    for (std::uint64_t i = 0; i < total; ++i) f(word_from_index(q, n, i));
}

// Random member of the marker-constrained set with segment cap delta.
Word random_r_member(std::mt19937_64& rng, int q, std::size_t n, std::size_t delta) {
    std::uniform_int_distribution<int> sym(0, q - 1);
    std::vector<Symbol> out;
    while (out.size() < n) {
        const std::size_t rest = n - out.size();
        std::size_t len = rest;
        if (rest > delta) len = std::uniform_int_distribution<std::size_t>(4, std::min(delta, rest - 4))(rng);
        std::vector<Symbol> seg;
        while (seg.size() + 4 < len) {
            seg.push_back(static_cast<Symbol>(sym(rng)));
            const std::size_t m = seg.size();
            if (m >= 4 && seg[m - 4] == 0 && seg[m - 3] == 0 && seg[m - 2] == 1 && seg[m - 1] == 1) seg.pop_back();
        }
        seg.insert(seg.end(), {0, 0, 1, 1});
        out.insert(out.end(), seg.begin(), seg.end());
    }
    return Word(q, std::move(out));
}

Outcome golden_examples() {
    Checks c;
    const Word x = w("011011111", 3);
    c.expect(apply_absorptions(x, parse_pattern("0;2:2,6:1")) == w("021211", 3), "absorption 0;2:2,6:1 -> 021211");
    c.expect(apply_absorptions(x, parse_pattern("1;2:2")) == w("021111", 3), "absorption 1;2:2 -> 021111");
    c.expect(absorption_ball(w("011000", 2), 1) == sorted({w("11000", 2), w("01000", 2), w("01100", 2)}), "binary ball");
    c.expect(absorption_ball(w("110110", 3), 1) == sorted({w("20110", 3), w("11110", 3), w("11020", 3), w("11011", 3)}),
             "ternary ball");
    c.expect(marker::segment(w("00111230320011", 4)) == std::vector<Word>{w("0011", 4), w("1230320011", 4)}, "segmentation");
    const Word phiX = equivalence::phi(w("0121201", 3), 1);
    c.expect(phiX == w("00101001", 3), "prefix-sum map");
    c.expect(equivalence::phi(contract_at(w("0121201", 3), 2), 0) == w("0001001", 3), "contraction image");
    return c.outcome("7 golden values");
}

Outcome binary_exhaustive() {
    Checks c;
    std::uint64_t words = 0, corruptions = 0;
    for (std::size_t n = 2; n <= 10; ++n) {
        bool contained = true;
        for_all_words(2, n, [&](const Word& x) {
            ++words;
            const auto del = deletion_ball(x, 1);
            for (const Word& y : absorption_ball(x, 1)) contained = contained && std::binary_search(del.begin(), del.end(), y);
        });
        c.expect(contained, "containment n=" + std::to_string(n));
        const sweep::VerificationReport r = sweep::verify_vt(n, std::uint64_t{1} << 12);
        corruptions += r.totalCorruptions;
        c.expect(r.passed(), "VT sweep n=" + std::to_string(n) + " (" + std::to_string(r.failureCount) + " failures)");
    }
    return c.outcome(std::to_string(words) + " words, " + std::to_string(corruptions) + " VT corruptions decoded");
}

Outcome basic_code_sweep() {
    Checks c;
    const int q = 3;
    const std::size_t n = 8;
    const sweep::VerificationReport r = sweep::verify_basic(q, n, std::uint64_t{1} << 20);
    c.expect(r.passed(), std::to_string(r.failureCount) + " decode or overlap failures");
    // Each word lies in the tuple computed from it; sizes then sum to q^n.
    std::map<std::vector<std::uint64_t>, std::uint64_t> sizes;
    bool selfMember = true;
    for_all_words(q, n, [&](const Word& x) {
        const basic::BasicParams p = basic::params_of(x);
        selfMember = selfMember && basic::code_membership(x, p);
        std::vector<std::uint64_t> key(p.s.begin(), p.s.end());
        key.insert(key.end(), {p.t1, p.t2, p.d1, p.d2});
        ++sizes[key];
    });
    std::uint64_t sum = 0, largest = 0;
    for (const auto& [k, v] : sizes) {
        sum += v;
        largest = std::max(largest, v);
    }
    c.expect(selfMember, "membership of own tuple");
    c.expect(sum == 6561, "sizes sum to 3^8");
    // 3^8 / (4^2 * 8 * 2 * 24 * 13) < 1, so any nonempty tuple meets it; compare exactly.
    c.expect(cpp_rational(largest) >= cpp_rational(6561, 16 * 8 * 2 * 24 * 13), "size lower bound");
    return c.outcome(std::to_string(r.totalCodewords) + " codewords, " + std::to_string(r.totalClasses) + " tuples, " +
                     std::to_string(r.totalCorruptions) + " corruptions, largest tuple " + std::to_string(largest));
}

struct WindowTally {
    std::uint64_t corruptions = 0, exactHits = 0, same = 0, merged = 0, split = 0, damaged = 0;
};

// Samples for the localization and decoding criteria, shared so both use the same codewords.
const std::vector<Word>& window_samples() {
    static const std::vector<Word> samples = [] {
        std::mt19937_64 rng(20240501);
        std::vector<Word> out;
        for (int i = 0; i < 50; ++i) out.push_back(random_r_member(rng, 3, 500, 12));
        return out;
    }();
    return samples;
}

Outcome window_localization() {
    Checks c;
    const std::size_t delta = 12;
    const double bound = 2.0 / 3.0 * delta * delta + 2.0 * delta - 1.0;
    WindowTally tally;
    for (const Word& x : window_samples()) {
        const improved::ImprovedParams p = improved::params_of(x, delta);
        const std::size_t lx = marker::segment_lengths(x).size();
        for (std::size_t pos = 1; pos <= x.size(); ++pos) {
            const Word y = absorb_at(x, pos);
            ++tally.corruptions;
            const improved::WindowResult res = improved::locate_window(y, p);
            if (std::holds_alternative<improved::MarkerDamaged>(res)) {
                ++tally.damaged;
                c.expect(pos + 4 >= x.size(), "marker damage away from the end at " + std::to_string(pos));
                continue;
            }
            if (!std::holds_alternative<improved::Window>(res)) {
                c.expect(false, "no window at " + std::to_string(pos));
                continue;
            }
            const auto win = std::get<improved::Window>(res);
            const double size = static_cast<double>(win.end - win.start + 1);
            if (size > bound) c.expect(false, "window too large at " + std::to_string(pos));
            // The true position, or one that produces the same word, lies in the window.
            bool explained = false;
            for (std::size_t q = win.start; q <= win.end && q <= x.size() && !explained; ++q) explained = absorb_at(x, q) == y;
            if (!explained) c.expect(false, "window misses position " + std::to_string(pos));
            if (pos >= win.start && pos <= win.end) ++tally.exactHits;
            const int shift = static_cast<int>(marker::segment_lengths(y).size()) - static_cast<int>(lx);
            (shift == 0 ? tally.same : shift < 0 ? tally.merged : tally.split) += 1;
        }
    }
    c.expect(tally.same > 0 && tally.merged > 0 && tally.split > 0, "all three segment-count cases");
    std::ostringstream s;
    s << window_samples().size() << " codewords, " << tally.corruptions << " corruptions; cases same/merged/split/damaged "
      << tally.same << "/" << tally.merged << "/" << tally.split << "/" << tally.damaged << "; true position inside "
      << tally.exactHits << "; |W| <= " << bound;
    return c.outcome(s.str());
}

Outcome improved_decoding() {
    Checks c;
    const std::size_t delta = 12;
    std::uint64_t corruptions = 0, trailing = 0;
    const auto layout = improved::intervals(500, improved::window_bound(delta));
    const bool uneven = 500 % (2 * improved::window_bound(delta) + 1) != 0;
    c.expect(uneven && !layout.second.empty(), "layout with a short final interval");
    for (const Word& x : window_samples()) {
        const improved::ImprovedParams p = improved::params_of(x, delta);
        c.expect(improved::decode_improved(x, p) == x, "error-free word");
        for (std::size_t pos = 1; pos <= x.size(); ++pos) {
            const Word y = absorb_at(x, pos);
            ++corruptions;
            if (pos + 4 >= x.size() && !marker::ends_with_marker(y)) ++trailing;
            Word got;
            try {
                got = improved::decode_improved(y, p);
            } catch (const std::exception& e) {
                c.expect(false, "position " + std::to_string(pos) + ": " + e.what());
                continue;
            }
            if (got != x) c.expect(false, "wrong word for position " + std::to_string(pos));
        }
    }
    c.expect(trailing > 0, "trailing marker damage exercised");
    return c.outcome(std::to_string(corruptions) + " corruptions, " + std::to_string(trailing) +
                     " with a damaged final marker, intervals " + std::to_string(layout.first.size()) + "+" +
                     std::to_string(layout.second.size()));
}

Outcome marker_round_trip(double perMessageLimit) {
    Checks c;
    const std::size_t n = 10000;
    const marker::MarkerParams p = marker::encoder_params(3, n);
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> sym(0, 2);
    double slowest = 0;
    for (int m = 0; m <= 100; ++m) {
        std::vector<Symbol> s(n, 0);
        if (m > 0) {
            for (auto& v : s) v = static_cast<Symbol>(sym(rng));
        }
        const Word x(3, std::move(s));
        const auto start = Clock::now();
        const Word enc = marker::encode_to_marker_set(x, p);
        const Word dec = marker::decode_from_marker_set(enc, p);
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        slowest = std::max(slowest, secs);
        const std::string tag = m == 0 ? "all-zero message" : "message " + std::to_string(m);
        c.expect(enc.size() == n + 5, tag + " length");
        c.expect(marker::r_membership(enc, p.delta), tag + " constraint");
        c.expect(dec == x, tag + " round trip");
        c.expect(secs < perMessageLimit, tag + " time");
    }
    std::ostringstream s;
    s << "101 messages, delta " << p.delta << ", slowest " << slowest << " s (limit " << perMessageLimit << " s each)";
    return c.outcome(s.str());
}

Outcome multi_absorption() {
    Checks c;
    std::ostringstream s;
    for (std::size_t n : {7u, 8u}) {
        const sweep::VerificationReport r = sweep::verify_multi(3, n, 2, std::uint64_t{1} << 20);
        c.expect(r.passed(), "n=" + std::to_string(n) + " (" + std::to_string(r.failureCount) + " failures)");
        s << "n=" << n << ": " << r.totalCodewords << " codewords in " << r.scope.params.at("baseClasses").get<std::size_t>()
          << " classes, " << r.totalCorruptions << " corruptions, audit violations "
          << r.scope.params.at("auditViolations").get<std::uint64_t>() << "; ";
    }
    return c.outcome(s.str());
}

Outcome bounds_checks() {
    Checks c;
    bool displayed = true, exact = true;
    std::string firstMismatch;
    for (int q : {2, 3}) {
        for (std::size_t n = 2; n <= 9; ++n) {
            std::map<std::size_t, std::uint64_t> byRuns;
            for_all_words(q, n - 1, [&](const Word& y) { ++byRuns[zero_run_count(y)]; });
            for (std::size_t k = 1; k <= n / 2; ++k) {
                const cpp_int shown = bounds::zero_run_class_count(n, q, k);
                if (shown != byRuns[k] && displayed) {
                    firstMismatch = "q=" + std::to_string(q) + " n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " +
                                    shown.str() + " vs " + std::to_string(byRuns[k]);
                }
                displayed = displayed && shown == byRuns[k];
                exact = exact && bounds::zero_run_class_count_exact(n, q, k) == byRuns[k];
            }
        }
    }
    c.expect(displayed, "displayed class count vs enumeration (first mismatch " + firstMismatch + ")");
    bool sumDisplayed = true, sumExact = true;
    for (int q : {2, 3}) {
        for (std::size_t n = 2; n <= 8; ++n) {
            const cpp_rational direct = bounds::direct_weight_sum(q, n);
            sumDisplayed = sumDisplayed && bounds::displayed_transversal_value(q, n) == direct;
            sumExact = sumExact && bounds::fractional_transversal_value(q, n) == direct;
        }
    }
    c.expect(sumDisplayed, "displayed four-term sum vs direct weighted sum");
    bool below = true;
    for (std::size_t n = 1; n <= 6; ++n) {
        const std::uint64_t opt = bounds::brute_force_optimum(2, n);
        below = below && (n < 2 || cpp_rational(opt) <= bounds::fractional_transversal_value(2, n));
    }
    c.expect(below, "exact optimum <= tau*");
    c.expect(bounds::closed_form_bound(2, 12).a == 2050, "bound formula at q=2, n=12");
    std::ostringstream s;
    s << "exact class count matches enumeration: " << (exact ? "yes" : "no")
      << "; exact weight sum matches direct sum: " << (sumExact ? "yes" : "no");
    return c.outcome(s.str());
}

Outcome equivalence_checks() {
    Checks c;
    std::uint64_t mapped = 0, balls = 0;
    for (std::size_t t = 0; t <= 2; ++t) {
        for (std::size_t n = t + 1; n <= 8; ++n) {
            std::set<Word> images;
            std::uint64_t domain = 0, codomain = 0;
            bool roundTrip = true;
            for_all_words(3, n, [&](const Word& x) {
                if (!equivalence::in_a_set(x, t)) return;
                ++domain;
                const Word y = equivalence::phi(x, t);
                roundTrip = roundTrip && equivalence::in_b_set(y, t) && equivalence::phi_inverse(y, t) == x;
                images.insert(y);
            });
            for_all_words(3, n + 1, [&](const Word& y) { codomain += equivalence::in_b_set(y, t); });
            mapped += domain;
            const std::string tag = "n=" + std::to_string(n) + " t=" + std::to_string(t);
            c.expect(roundTrip, "round trip " + tag);
            c.expect(images.size() == domain && codomain == domain, "bijection " + tag);
        }
    }
    for (std::size_t t = 1; t <= 2; ++t) {
        for (std::size_t n = t + 1; n <= 7; ++n) {
            bool equal = true;
            for_all_words(3, n, [&](const Word& x) {
                if (!equivalence::in_a_set(x, t)) return;
                ++balls;
                equal = equal && equivalence::equivalence_check(x, t);
            });
            c.expect(equal, "ball images n=" + std::to_string(n) + " t=" + std::to_string(t));
        }
    }
    return c.outcome(std::to_string(mapped) + " words mapped, " + std::to_string(balls) + " ball images compared");
}

Outcome containment() {
    Checks c;
    std::uint64_t pairs = 0;
    for (std::size_t t = 1; t <= 2; ++t) {
        for (std::size_t n = t + 1; n <= 7; ++n) {
            bool ok = true;
            for_all_words(3, n, [&](const Word& x) {
                const auto ds = ds_ball(x, t);
                for (const Word& y : absorption_ball(x, t)) {
                    ++pairs;
                    ok = ok && std::binary_search(ds.begin(), ds.end(), y);
                }
            });
            c.expect(ok, "n=" + std::to_string(n) + " t=" + std::to_string(t));
        }
    }
    return c.outcome(std::to_string(pairs) + " absorption outcomes inside the deletion-substitution ball");
}

} // namespace

int main() {
    const double perMessage = 10.0;
    const std::vector<Criterion> criteria = {
        {1, "golden examples", 1.0, golden_examples},
        {2, "binary containment and VT decoding, n <= 10", 30.0, binary_exhaustive},
        {3, "q-ary basic code, q=3 n=8, all tuples", 600.0, basic_code_sweep},
        {4, "window localization, delta=12 n=500", 300.0, window_localization},
        {5, "improved decoder, delta=12 n=500", 600.0, improved_decoding},
        {6, "marker encoder round trip, q=3 n=10^4", 101 * perMessage, [&] { return marker_round_trip(perMessage); }},
        {7, "multi-absorption, q=3 t=2 n in {7,8}", 1800.0, multi_absorption},
        {8, "bounds", 300.0, bounds_checks,
         "the displayed zero-run class count treats each nonzero run as one repeated symbol, so it and the "
         "four-term weight sum built from it are exact only for q=2"},
        {9, "contraction/deletion equivalence", 300.0, equivalence_checks},
        {10, "absorption ball inside deletion-substitution ball", 300.0, containment},
    };

    int unexpected = 0;
    for (const Criterion& cr : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = cr.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        const bool inTime = secs < cr.limitSeconds;
        const bool pass = o.ok && inTime;
        std::printf("criterion %2d %s  %s  [%.2f s, limit %.0f s%s]  %s", cr.id, pass ? "PASS" : "FAIL", cr.title, secs,
                    cr.limitSeconds, inTime ? "" : ", over time", o.detail.c_str());
        if (!pass && cr.unattainable) std::printf("  (known unattainable: %s)", cr.unattainable);
        std::printf("\n");
        std::fflush(stdout);
        if (!pass && !cr.unattainable) ++unexpected;
    }
    return unexpected == 0 ? 0 : 1;
}
