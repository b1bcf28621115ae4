#include "absorb/bounds.hpp"
#include "absorb/channel.hpp"
#include "absorb/equivalence.hpp"
#include "absorb/errors.hpp"
#include "absorb/stats.hpp"
#include "absorb/vt.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <map>

using namespace absorb;
using namespace absorb::bounds;
using namespace absorb::equivalence;
using absorb::testing::as_set;
using absorb::testing::w;
using absorb::testing::words;

namespace {

// Exhaustive subset search over the distinct zero-deletion sets.
std::uint64_t matching_by_subsets(int q, std::size_t n) {
    std::set<std::set<Word>> edges;
    testing::for_all_words(q, n, [&](const Word& x) {
        if (zero_run_count(x) > 0) edges.insert(as_set(zero_deletion_set(x)));
    });
    const std::vector<std::set<Word>> e(edges.begin(), edges.end());
    std::uint64_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e.size()); ++mask) {
        std::set<Word> used;
        bool ok = true;
        std::uint64_t count = 0;
        for (std::size_t i = 0; i < e.size() && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            ++count;
            for (const Word& y : e[i]) ok = ok && used.insert(y).second;
        }
        if (ok) best = std::max(best, count);
    }
    return best;
}

} // namespace

TEST_CASE("upper bound formula") {
    CHECK(closed_form_bound(2, 12).a == 2050);
    CHECK(closed_form_bound(2, 12).cmax == 2051);
    CHECK(closed_form_bound(2, 13).a == 2 + static_cast<long>(std::ceil(8.0 * 4096 / 9)));
    CHECK(closed_form_bound(3, 12).a == 2048 + 1 + static_cast<long>(std::ceil(8.0 * 177147 / 16)));
    CHECK_THROWS_AS(closed_form_bound(2, 11), DomainError);
    CHECK_THROWS_AS(closed_form_bound(13, 12), DomainError);
}

TEST_CASE("zero-deletion sets") {
    CHECK(zero_deletion_set(w("0110010111", 2)) == words({"110010111", "011010111", "011001111"}, 2));
    CHECK(zero_deletion_set(w("1111", 2)).empty());
    testing::for_all_words(3, 6, [](const Word& x) {
        const auto d = zero_deletion_set(x);
        CHECK(d.size() == zero_run_count(x));
        std::set<Word> brute;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] != 0) continue;
            std::vector<Symbol> s(x.symbols());
            s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
            brute.emplace(3, s);
        }
        CHECK(as_set(d) == brute);
    });
}

TEST_CASE("zero-run class counts match enumeration") {
    for (int q : {2, 3, 4}) {
        for (std::size_t n = 2; n <= (q == 4 ? 7u : 9u); ++n) {
            std::map<std::size_t, std::uint64_t> byRuns;
            testing::for_all_words(q, n - 1, [&](const Word& y) { ++byRuns[zero_run_count(y)]; });
            cpp_int total = cpp_int(byRuns[0]);
            for (std::size_t k = 1; k <= n / 2; ++k) {
                CHECK(zero_run_class_count_exact(n, q, k) == byRuns[k]);
                if (q == 2) CHECK(zero_run_class_count(n, q, k) == byRuns[k]);
                total += zero_run_class_count_exact(n, q, k);
            }
            CHECK(cpp_int(byRuns[0]) == boost::multiprecision::pow(cpp_int(q - 1), static_cast<unsigned>(n - 1)));
            CHECK(total == boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(n - 1)));
        }
    }
    CHECK(zero_run_class_count(4, 2, 2) == 1); // 010
    CHECK(zero_run_class_count(4, 3, 2) == 2); // 010, 020
    CHECK_THROWS_AS(zero_run_class_count(6, 3, 4), DomainError);
    CHECK_THROWS_AS(zero_run_class_count(6, 3, 0), DomainError);
}

TEST_CASE("the displayed count undercounts mixed nonzero runs") {
    // Length 3, one run of zeros: 0ab, a0b, ab0 (4 each), 00a, a00 (2 each), 000.
    CHECK(zero_run_class_count_exact(4, 3, 1) == 17);
    CHECK(zero_run_class_count(4, 3, 1) == 13);
    // The four words 012, 021, 120, 210 have a nonzero run of two distinct symbols.
    CHECK(displayed_transversal_value(3, 4) < fractional_transversal_value(3, 4));
    for (std::size_t n = 2; n <= 8; ++n) CHECK(displayed_transversal_value(2, n) == fractional_transversal_value(2, n));
}

TEST_CASE("exact weight sum against the upper bound formula") {
    // Binary: the displayed counts are exact and the sum stays below the bound.
    for (std::size_t n = 12; n <= 40; ++n) CHECK(fractional_transversal_value(2, n) <= cpp_rational(closed_form_bound(2, n).a));
    // Ternary: below up to n = 16, above from n = 17 on.
    for (std::size_t n = 12; n <= 16; ++n) CHECK(fractional_transversal_value(3, n) <= cpp_rational(closed_form_bound(3, n).a));
    for (std::size_t n = 17; n <= 30; ++n) CHECK(fractional_transversal_value(3, n) > cpp_rational(closed_form_bound(3, n).a));
    CHECK(fractional_transversal_value(4, 12) > cpp_rational(closed_form_bound(4, 12).a));
    // The displayed expansion always stays below.
    for (int q : {3, 4, 5}) {
        for (std::size_t n = std::max<std::size_t>(12, static_cast<std::size_t>(q)); n <= 30; ++n) {
            CHECK(displayed_transversal_value(q, n) <= cpp_rational(closed_form_bound(q, n).a));
        }
    }
}

TEST_CASE("weighted sum equals the word-by-word sum") {
    CHECK(fractional_transversal_value(2, 2) == 2);
    for (int q : {2, 3}) {
        for (std::size_t n = 2; n <= 8; ++n) CHECK(fractional_transversal_value(q, n) == direct_weight_sum(q, n));
    }
}

TEST_CASE("the weight is a fractional transversal") {
    // Every hyperedge has total weight at least 1.
    for (std::size_t n = 2; n <= 7; ++n) {
        testing::for_all_words(3, n, [](const Word& x) {
            if (zero_run_count(x) == 0) return;
            cpp_rational sum = 0;
            for (const Word& y : zero_deletion_set(x)) {
                const auto r = zero_run_count(y);
                sum += r == 0 ? cpp_rational(1) : cpp_rational(1, static_cast<long long>(r));
            }
            CHECK(sum >= 1);
        });
    }
}

TEST_CASE("exact matching number") {
    CHECK(brute_force_optimum(2, 2) == 2);
    for (std::size_t n = 2; n <= 4; ++n) CHECK(brute_force_optimum(2, n) == matching_by_subsets(2, n));
    CHECK(brute_force_optimum(3, 3, 100) == matching_by_subsets(3, 3));
    std::uint64_t previous = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        const std::uint64_t opt = brute_force_optimum(2, n);
        CHECK(opt >= previous);
        if (n >= 2) CHECK(cpp_rational(opt) <= fractional_transversal_value(2, n));
        previous = opt;
    }
    CHECK_THROWS_AS(brute_force_optimum(2, 7), ResourceLimit);
}

TEST_CASE("bound report") {
    const BoundReport r = bound_report(2, 5, true);
    CHECK_FALSE(r.formula.has_value());
    REQUIRE(r.bruteForce.has_value());
    CHECK(cpp_rational(*r.bruteForce) <= r.transversal);
    CHECK(bound_report(2, 12, false).formula->a == 2050);
}

TEST_CASE("VT codewords containing 0 correct one zero deletion") {
    for (std::size_t n = 2; n <= 8; ++n) {
        std::set<Word> seen;
        testing::for_all_words(2, n, [&](const Word& c) {
            if (!vt::vt_membership(c, {n, 0}) || zero_run_count(c) == 0) return;
            for (const Word& y : zero_deletion_set(c)) CHECK(seen.insert(y).second);
        });
    }
}

TEST_CASE("prefix-sum map on the worked example") {
    const Word x = w("0121201", 3);
    const Word y = phi(x, 1);
    CHECK(y == w("00101001", 3));
    CHECK(phi_inverse(y, 1) == x);
    const Word once = contract_at(x, 2);
    CHECK(once == w("001201", 3));
    CHECK(phi(once, 0) == w("0001001", 3));
    CHECK(phi(once, 0) == y.prefix(2) + y.suffix_from(4));
    const Word twice = w("01201", 3);
    CHECK(contract_at(once, 2) == twice);
    CHECK(phi(twice, 0) == w("001001", 3));
    CHECK(phi(twice, 0) == y.prefix(2) + y.suffix_from(5));
    CHECK(equivalence_check(x, 1));
    CHECK_THROWS_AS(equivalence_check(x, 2), DomainError); // x_2 = 1, so x is outside A(7, 2)
}

TEST_CASE("prefix-sum map is a bijection") {
    for (std::size_t t = 0; t <= 2; ++t) {
        for (std::size_t n = t + 1; n <= 8; ++n) {
            std::set<Word> images;
            std::size_t domain = 0;
            testing::for_all_words(3, n, [&](const Word& x) {
                if (!in_a_set(x, t)) return;
                ++domain;
                const Word y = phi(x, t);
                CHECK(in_b_set(y, t));
                CHECK(phi_inverse(y, t) == x);
                images.insert(y);
            });
            CHECK(images.size() == domain);
            std::size_t codomain = 0;
            testing::for_all_words(3, n + 1, [&](const Word& y) { codomain += in_b_set(y, t); });
            CHECK(codomain == domain);
        }
    }
    CHECK_THROWS_AS(phi(w("102", 3), 1), DomainError);
    CHECK_THROWS_AS(phi_inverse(w("0102", 3), 1), DomainError);
}

TEST_CASE("contractions correspond to deletions") {
    for (std::size_t t = 1; t <= 2; ++t) {
        for (std::size_t n = t + 1; n <= 7; ++n) {
            testing::for_all_words(3, n, [&](const Word& x) {
                if (in_a_set(x, t)) CHECK(equivalence_check(x, t));
            });
        }
    }
    for (std::size_t t = 1; t <= 2; ++t) {
        const Word z = Word::zeros(3, 6);
        CHECK(mapped_contraction_ball(z, t) == std::vector<Word>{Word::zeros(3, 7 - t)});
        CHECK(deletion_ball(phi(z, t), t) == std::vector<Word>{Word::zeros(3, 7 - t)});
    }
}

TEST_CASE("count changes under one contraction") {
    using C = ContractionCase;
    CHECK(classify_contraction_case(0, 2, 3).kind == C::ZeroDeletion);
    CHECK(classify_contraction_case(0, 2, 3).countDeltas == std::vector<int>{1, 0, 0});
    CHECK(classify_contraction_case(0, 0, 3).countDeltas == std::vector<int>{1, 0, 0});
    const auto dbl = classify_contraction_case(2, 2, 3);
    CHECK(dbl.kind == C::DoubledSymbol);
    CHECK(dbl.merged == 1);
    CHECK(dbl.countDeltas == std::vector<int>{0, -1, 2});
    const auto dist = classify_contraction_case(1, 3, 5);
    CHECK(dist.kind == C::DistinctPair);
    CHECK(dist.countDeltas == std::vector<int>{0, 1, 0, 1, -1});

    // Compare against the counts of actual contracted words.
    std::mt19937_64 rng(83);
    for (int q : {3, 4, 5}) {
        for (int trial = 0; trial < 200; ++trial) {
            const Word x = testing::random_word(rng, q, 9);
            const std::size_t i = 1 + static_cast<std::size_t>(rng() % 8);
            const Word y = contract_at(x, i);
            const auto d = classify_contraction_case(x.at(i), x.at(i + 1), q);
            const auto cx = symbol_counts(x);
            const auto cy = symbol_counts(y);
            for (int s = 0; s < q; ++s) CHECK(static_cast<int>(cx[s]) - static_cast<int>(cy[s]) == d.countDeltas[s]);
        }
    }
}
