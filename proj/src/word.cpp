#include "absorb/word.hpp"

#include "absorb/errors.hpp"

#include <algorithm>
#include <charconv>

namespace absorb {

void require_alphabet(int q) {
    if (q < 2 || q > kMaxAlphabet) {
        throw DomainError("alphabet size must lie in [2, 256], got " + std::to_string(q));
    }
}

Word::Word(int q, std::vector<Symbol> symbols) : q_(q), symbols_(std::move(symbols)) {
    require_alphabet(q);
    for (Symbol s : symbols_) {
        if (static_cast<int>(s) >= q) {
            throw DomainError("symbol " + std::to_string(s) + " out of range for q=" + std::to_string(q));
        }
    }
}

Word Word::zeros(int q, std::size_t n) { return constant(q, n, 0); }

Word Word::constant(int q, std::size_t n, Symbol s) { return Word(q, std::vector<Symbol>(n, s)); }

Word Word::parse(std::string_view text, int q) {
    require_alphabet(q);
    std::vector<Symbol> out;
    if (q <= 10) {
        out.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c > '9') {
                throw DomainError("unexpected character in word: '" + std::string(1, c) + "'");
            }
            out.push_back(static_cast<Symbol>(c - '0'));
        }
        return Word(q, std::move(out));
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(pos, comma - pos);
        int value = -1;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc{} || ptr != item.data() + item.size() || value < 0 || value >= q) {
            throw DomainError("bad symbol '" + std::string(item) + "' for q=" + std::to_string(q));
        }
        out.push_back(static_cast<Symbol>(value));
        pos = comma + 1;
        if (comma + 1 == text.size()) throw DomainError("trailing comma in word");
    }
    return Word(q, std::move(out));
}

std::string Word::str() const {
    std::string out;
    if (q_ <= 10) {
        out.reserve(symbols_.size());
        for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
        return out;
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(symbols_[i]);
    }
    return out;
}

Symbol Word::at(std::size_t pos) const {
    if (pos < 1 || pos > symbols_.size()) {
        throw DomainError("position " + std::to_string(pos) + " outside [1, " + std::to_string(size()) + "]");
    }
    return symbols_[pos - 1];
}

Word Word::slice(std::size_t first, std::size_t last) const {
    if (first < 1 || last > size() || first > last + 1) {
        throw DomainError("slice [" + std::to_string(first) + ", " + std::to_string(last) + "] outside word of length " +
                          std::to_string(size()));
    }
    Word out;
    out.q_ = q_;
    out.symbols_.assign(symbols_.begin() + static_cast<std::ptrdiff_t>(first - 1),
                        symbols_.begin() + static_cast<std::ptrdiff_t>(last));
    return out;
}

Word Word::concat(const Word& other) const {
    require_same_alphabet(*this, other);
    Word out = *this;
    out.symbols_.insert(out.symbols_.end(), other.symbols_.begin(), other.symbols_.end());
    return out;
}

bool Word::ends_with(std::span<const Symbol> tail) const {
    if (tail.size() > size()) return false;
    return std::equal(tail.begin(), tail.end(), symbols_.end() - static_cast<std::ptrdiff_t>(tail.size()));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.q_ <=> b.q_; c != 0) return c;
    return a.symbols_ <=> b.symbols_;
}

Word operator+(const Word& a, const Word& b) { return a.concat(b); }

void require_same_alphabet(const Word& a, const Word& b) {
    if (a.q() != b.q()) {
        throw DomainError("alphabet mismatch: q=" + std::to_string(a.q()) + " vs q=" + std::to_string(b.q()));
    }
}

std::uint64_t word_index(const Word& w) {
    std::uint64_t v = 0;
    for (Symbol s : w.symbols()) v = v * static_cast<std::uint64_t>(w.q()) + s;
    return v;
}

Word word_from_index(int q, std::size_t n, std::uint64_t index) {
    std::vector<Symbol> out(n);
    for (std::size_t i = n; i-- > 0;) {
        out[i] = static_cast<Symbol>(index % static_cast<std::uint64_t>(q));
        index /= static_cast<std::uint64_t>(q);
    }
    return Word(q, std::move(out));
}

std::uint64_t word_space_size(int q, std::size_t n, std::uint64_t cap) {
    require_alphabet(q);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > cap / static_cast<std::uint64_t>(q)) {
            throw ResourceLimit("q^n exceeds the enumeration cap of " + std::to_string(cap));
        }
        total *= static_cast<std::uint64_t>(q);
    }
    if (total > cap) throw ResourceLimit("q^n exceeds the enumeration cap of " + std::to_string(cap));
    return total;
}

std::vector<Word> all_words(int q, std::size_t n, std::uint64_t cap) {
    const std::uint64_t total = word_space_size(q, n, cap);
    std::vector<Word> out;
    out.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) out.push_back(word_from_index(q, n, i));
    return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::size_t h = static_cast<std::size_t>(w.q()) * 0x9e3779b97f4a7c15ULL;
    for (Symbol s : w.symbols()) h = (h ^ s) * 0x100000001b3ULL;
    return h ^ w.size();
}

} // namespace absorb
