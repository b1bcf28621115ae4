#ifndef ABSORB_WORD_HPP
#define ABSORB_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace absorb {

using Symbol = std::uint8_t;

constexpr int kMaxAlphabet = 256;

// Checks 2 <= q <= kMaxAlphabet.
void require_alphabet(int q);

/// A finite sequence over {0, ..., q-1} that carries its alphabet size.
/// Storage is 0-based; the `at` accessor uses 1-based positions.
class Word {
public:
    Word() = default;
    Word(int q, std::vector<Symbol> symbols);

    static Word zeros(int q, std::size_t n);
    static Word constant(int q, std::size_t n, Symbol s);

    // Digits for q <= 10, comma-separated decimals otherwise.
    static Word parse(std::string_view text, int q);
    std::string str() const;

    int q() const noexcept { return q_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    Symbol at(std::size_t pos) const;
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
    std::span<const Symbol> span() const noexcept { return symbols_; }

    // 1-based inclusive range; first = last + 1 yields the empty word.
    Word slice(std::size_t first, std::size_t last) const;
    Word prefix(std::size_t len) const { return slice(1, len); }
    Word suffix_from(std::size_t first) const { return slice(first, size()); }
    Word concat(const Word& other) const;
    bool ends_with(std::span<const Symbol> tail) const;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    int q_ = 2;
    std::vector<Symbol> symbols_;
};

Word operator+(const Word& a, const Word& b);

// Rejects operations that mix alphabets.
void require_same_alphabet(const Word& a, const Word& b);

// Lexicographic rank of a word among all words of its length (MSB first).
std::uint64_t word_index(const Word& w);
Word word_from_index(int q, std::size_t n, std::uint64_t index);
// q^n, or throws ResourceLimit when it exceeds `cap`.
std::uint64_t word_space_size(int q, std::size_t n, std::uint64_t cap);
std::vector<Word> all_words(int q, std::size_t n, std::uint64_t cap);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

} // namespace absorb

#endif
