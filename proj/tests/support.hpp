#ifndef ABSORB_TESTS_SUPPORT_HPP
#define ABSORB_TESTS_SUPPORT_HPP

#include "absorb/word.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace absorb::testing {

inline Word w(const char* text, int q) { return Word::parse(text, q); }

inline std::vector<Word> words(std::initializer_list<const char*> texts, int q) {
    std::vector<Word> out;
    for (const char* t : texts) out.push_back(Word::parse(t, q));
    std::sort(out.begin(), out.end());
    return out;
}

inline Word random_word(std::mt19937_64& rng, int q, std::size_t n) {
    std::uniform_int_distribution<int> d(0, q - 1);
    std::vector<Symbol> s(n);
    for (auto& v : s) v = static_cast<Symbol>(d(rng));
    return Word(q, std::move(s));
}

template <class F>
void for_all_words(int q, std::size_t n, F&& f) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(q);
    for (std::uint64_t i = 0; i < total; ++i) f(word_from_index(q, n, i));
}

// Random member of R_{q,n}: segments of length in [4, delta], each a 0011-free
// prefix followed by 0011. Needs n >= 4 and delta >= 8.
inline Word random_r_member(std::mt19937_64& rng, int q, std::size_t n, std::size_t delta) {
    std::uniform_int_distribution<int> sym(0, q - 1);
    std::vector<Symbol> out;
    while (out.size() < n) {
        const std::size_t rest = n - out.size();
        std::size_t len = rest;
        if (rest > delta) {
            std::uniform_int_distribution<std::size_t> pick(4, std::min(delta, rest - 4));
            len = pick(rng);
        }
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

inline std::set<Word> as_set(const std::vector<Word>& v) { return {v.begin(), v.end()}; }

} // namespace absorb::testing

#endif
