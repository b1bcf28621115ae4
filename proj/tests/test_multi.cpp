#include "absorb/basic_code.hpp"
#include "absorb/channel.hpp"
#include "absorb/e1.hpp"
#include "absorb/e2.hpp"
#include "absorb/errors.hpp"
#include "absorb/improved.hpp"
#include "absorb/marker.hpp"
#include "absorb/multi.hpp"
#include "absorb/separating.hpp"
#include "support.hpp"

#include <doctest.h>

#include <map>

using namespace absorb;
using namespace absorb::multi;
using absorb::testing::as_set;
using absorb::testing::w;

namespace {

// Every improved-code class at q = 3, length n, segment cap n.
std::vector<improved::ImprovedParams> improved_classes(std::size_t n) {
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<improved::ImprovedParams> out;
    testing::for_all_words(3, n, [&](const Word& x) {
        if (!marker::r_membership(x, n)) return;
        const auto p = improved::params_of(x, n);
        std::vector<std::uint64_t> key{p.r1, p.r2, p.alpha.descent, p.alpha.inv, p.alpha.syn, p.alpha.loc,
                                       p.beta.descent, p.beta.inv, p.beta.syn, p.beta.loc};
        for (auto c : p.alpha.counts) key.push_back(c);
        for (auto c : p.beta.counts) key.push_back(c);
        if (seen.insert(key).second) out.push_back(p);
    });
    return out;
}

const SeparatingFunction& sep_for(std::size_t n) {
    static std::map<std::size_t, SeparatingFunction> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, brute_force_separating_function(n, 3, 2)).first;
    return it->second;
}

bool balls_meet(const Word& a, const Word& b, std::size_t t) {
    const auto ba = as_set(absorption_ball(a, t));
    for (const Word& z : absorption_ball(b, t)) {
        if (ba.count(z)) return true;
    }
    return false;
}

// Exhaustive check of one multi-absorption code family over a base code.
void check_code(const MultiCode& code) {
    const std::size_t t = code.t();
    for (const Word& u : code.base()) {
        const auto& nb = code.neighbors(u);
        CHECK(nb.size() < code.neighbor_bound());
        CHECK(as_set(nb) == as_set(neighbor_set(u, code.base(), t)));
        for (const Word& v : nb) {
            CHECK(code.fbar(u) != code.fbar(v));
            CHECK(code.sep()(u) % code.fbar(u).modulus != code.sep()(v) % code.fbar(u).modulus);
        }
    }
    for (const Label& a : code.labels()) {
        const auto cw = code.codewords(a);
        for (std::size_t i = 0; i < cw.size(); ++i) {
            for (std::size_t j = i + 1; j < cw.size(); ++j) CHECK_FALSE(balls_meet(cw[i], cw[j], t));
        }
        for (const Word& c : cw) {
            CHECK(code.e_membership(c, a));
            for (const Word& y : absorption_ball(c, t)) {
                CHECK(code.decode(y, a) == c);
                CHECK(code.decode_by_search(y, a) == c);
            }
        }
    }
}

} // namespace

TEST_CASE("brute-force separating function passes the conflicting-pair audit") {
    const SeparatingFunction sep = brute_force_separating_function(5, 3, 1);
    CHECK(sep.contract() == std::string(SeparatingFunction::kDsContract));
    CHECK(audit_separation(sep).passed());

    // Independent oracle: intersect the explicit balls of every pair.
    const auto all = all_words(3, 5, 1000);
    std::vector<std::set<Word>> balls;
    for (const Word& u : all) balls.push_back(as_set(ds_ball(u, 1)));
    std::size_t conflicts = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(sep(all[i]) < sep.range_bound());
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            const bool meet = std::any_of(balls[j].begin(), balls[j].end(), [&](const Word& z) { return balls[i].count(z) != 0; });
            if (!meet) continue;
            ++conflicts;
            CHECK(sep(all[i]) != sep(all[j]));
        }
    }
    CHECK(conflicts > 0);
}

TEST_CASE("coloring uses fewer labels than words") {
    const SeparatingFunction sep = brute_force_separating_function(4, 2, 1);
    CHECK(sep.colors_used() < 16);
    CHECK(sep.range_bound() >= sep.colors_used());
    CHECK(audit_separation(sep).passed());
    // No word is isolated, so at least two labels are in use.
    CHECK(sep.colors_used() >= 2);

    std::vector<std::uint64_t> bad(16, 0);
    CHECK_FALSE(audit_separation(SeparatingFunction::from_table(2, 4, 1, bad)).passed());
    CHECK_THROWS_AS(brute_force_separating_function(12, 3, 2, 1000), ResourceLimit);
    CHECK_THROWS_AS(SeparatingFunction::from_table(2, 4, 1, std::vector<std::uint64_t>(15, 0)), DomainError);
}

TEST_CASE("t = 2 separating functions at n = 7 and 8") {
    for (std::size_t n : {7u, 8u}) {
        const auto& sep = sep_for(n);
        CHECK(audit_separation(sep).passed());
        CHECK(sep.range_bound() % 3 == 0);
    }
}

TEST_CASE("separating modulus and label packing") {
    CHECK(separating_modulus(5, {}, 10) == 1);
    CHECK(separating_modulus(5, {1, 3}, 10) == 3);
    CHECK(separating_modulus(7, {1}, 10) == 4);
    CHECK_THROWS_AS(separating_modulus(5, {5}, 100), InternalInconsistency);

    const SeparatingFunction sep = brute_force_separating_function(4, 3, 1);
    const Label lone = compress_syndrome(w("0011", 3), sep, {});
    CHECK(lone == Label{0, 1});

    CHECK(label_width(3, 1) == 1);
    CHECK(label_width(3, 2) == 1);
    CHECK(label_width(3, 3) == 2);
    CHECK(label_width(3, 8) == 2);
    CHECK(label_width(3, 9) == 3);
    for (std::uint64_t P = 1; P <= 26; ++P) {
        for (std::uint64_t r = 0; r < P; ++r) CHECK(unpack_label(pack_label({r, P}, 3, 3), 3) == Label{r, P});
    }
    CHECK(pack_label({2, 7}, 3, 2) == w("0221", 3));
    CHECK_THROWS_AS(pack_label({0, 9}, 3, 2), DomainError);
    CHECK_THROWS_AS(unpack_label(w("1101", 3), 2), DecodeFailure);
}

TEST_CASE("neighbor enumeration: direct and splitting-based") {
    for (std::size_t n : {7u, 8u}) {
        for (const auto& p : improved_classes(n)) {
            const auto cls = improved_class(p);
            const Membership member = [&](const Word& x) { return improved::d_membership(x, p); };
            for (const Word& u : cls) {
                const auto direct = neighbor_set(u, cls, 2);
                CHECK(direct.size() < 9 * n * n * n);
                const auto split = as_set(splitting_neighbor_set(u, member, 2));
                for (const Word& v : direct) CHECK(split.count(v) == 1);
            }
        }
    }
    const Word u = w("1200011", 3);
    CHECK(neighbor_set(u, std::vector<Word>{u}, 2).empty());
    CHECK(neighbor_set(u, [&](const Word& x) { return x == u; }, 2).empty());
}

TEST_CASE("predicate-driven neighbor scan agrees with the codebook scan") {
    const improved::ImprovedParams p = improved_classes(7).front();
    const auto cls = improved_class(p);
    const Membership member = [&](const Word& x) { return improved::d_membership(x, p); };
    for (const Word& u : cls) CHECK(neighbor_set(u, member, 2) == neighbor_set(u, cls, 2));
}

TEST_CASE("improved-code classes: labels, ball disjointness and decoding, n = 7 and 8") {
    for (std::size_t n : {7u, 8u}) {
        std::size_t words = 0;
        for (const auto& p : improved_classes(n)) {
            const MultiCode code = make_multi_code(p, 2, sep_for(n));
            words += code.base().size();
            check_code(code);
            for (const Label& a : code.labels()) {
                const MultiParams mp = make_multi_params(code, p, a);
                CHECK(mp.N == 9 * n * n * n);
                for (const Word& c : code.codewords(a)) {
                    CHECK(e_membership(c, code, mp));
                    const Word y = absorb_at(absorb_at(c, 1), 1);
                    CHECK(decode_t_absorptions(y, code, mp) == c);
                }
            }
        }
        // Every member of R_{3,n} lies in exactly one class.
        std::size_t rwords = 0;
        testing::for_all_words(3, n, [&](const Word& x) { rwords += marker::r_membership(x, n); });
        CHECK(words == rwords);
    }
}

TEST_CASE("basic-code classes as the base code") {
    // The improved-code classes above are singletons at this length; these
    // classes have up to four members, so the labels must actually separate.
    const auto& sep = sep_for(8);
    std::map<std::vector<std::uint64_t>, std::vector<Word>> classes;
    testing::for_all_words(3, 8, [&](const Word& x) {
        const auto p = basic::params_of(x);
        std::vector<std::uint64_t> key{p.t1, p.t2, p.d1, p.d2};
        for (auto s : p.s) key.push_back(s);
        classes[key].push_back(x);
    });
    std::size_t checked = 0, separated = 0;
    for (const auto& [key, cls] : classes) {
        if (cls.size() < 3) continue;
        const basic::BasicParams p = basic::params_of(cls.front());
        const MultiCode code(cls, [p](const Word& x) { return basic::code_membership(x, p); }, 2, sep);
        separated += code.labels().size() > 1;
        check_code(code);
        ++checked;
    }
    CHECK(checked == 114);
    CHECK(separated > 0);
}

TEST_CASE("the whole marker-constrained set as the base code") {
    std::vector<Word> base;
    testing::for_all_words(3, 8, [&](const Word& x) {
        if (marker::r_membership(x, 8)) base.push_back(x);
    });
    const MultiCode code(base, [](const Word& x) { return x.size() == 8 && marker::r_membership(x, 8); }, 2, sep_for(8));
    CHECK(code.base().size() == 81);
    CHECK(code.labels().size() > 1);
    CHECK(code.pmax() > 1);
    check_code(code);
}

TEST_CASE("received words outside every ball fail to decode") {
    const auto& sep = sep_for(8);
    for (const auto& p : improved_classes(8)) {
        const MultiCode code = make_multi_code(p, 2, sep);
        const Label a = code.labels().front();
        std::set<Word> covered;
        for (const Word& c : code.codewords(a)) {
            for (const Word& y : absorption_ball(c, 2)) covered.insert(y);
        }
        int negatives = 0;
        testing::for_all_words(3, 6, [&](const Word& y) {
            if (covered.count(y) || negatives >= 20) return;
            ++negatives;
            CHECK_THROWS_AS(code.decode(y, a), DecodeFailure);
        });
        CHECK(negatives == 20);
        CHECK_THROWS_AS(code.decode(Word::zeros(3, 7), a), DomainError);
        break;
    }
}

TEST_CASE("tail code for the label part") {
    const e2::TailCode tc(3, 2, 2);
    CHECK(tc.info_len() == 4);
    for (std::uint64_t h = 0; h < 9; ++h) {
        const Word info = Word::zeros(3, 2) + word_from_index(3, 2, h);
        const Word c = info + tc.tail(info);
        CHECK(c.size() == tc.length());
        for (const Word& z : absorption_ball(c, 2)) CHECK(tc.decode_info(z) == info);
    }
    CHECK_THROWS_AS(tc.tail(w("1000", 3)), DomainError);
}

TEST_CASE("E2: round trip, split property and every 2-absorption") {
    for (std::size_t n : {1u, 2u}) {
        const e2::E2Code code(e1::make_params(3, n), 2);
        CHECK(code.length() == code.first_len() + 2 + code.h_len() + code.tail_code().tail_len());
        const std::size_t n1 = code.first_len();
        const std::size_t n2 = code.length();
        testing::for_all_words(3, n, [&](const Word& x) {
            const Word c = code.encode(x);
            CHECK(c.size() == n2);
            CHECK(code.decode(c) == x);
            const Word c1 = c.prefix(n1);
            const Word c2 = c.suffix_from(n1 + 1);
            CHECK(c2.prefix(2) == Word::zeros(3, 2));
            const auto ball = absorption_ball(c, 2);
            for (std::size_t k = 0; k < ball.size(); k += (n == 1 ? 1 : 7)) {
                const Word& y = ball[k];
                CHECK(in_absorption_ball(y.prefix(n1 - 2), c1, 2));
                CHECK(in_absorption_ball(y.slice(n1 + 1, n2 - 2), c2, 2));
                CHECK(code.decode(y) == x);
            }
        });
    }
}

TEST_CASE("E2 rejects malformed input") {
    const e2::E2Code code(e1::make_params(3, 1), 2);
    CHECK_THROWS_AS(code.decode(Word::zeros(3, code.length() - 1)), DomainError);
    Word c = code.encode(w("2", 3));
    std::vector<Symbol> s = c.symbols();
    s[0] = static_cast<Symbol>((s[0] + 1) % 3);
    CHECK_THROWS_AS(code.decode(Word(3, s)), DecodeFailure);
}
