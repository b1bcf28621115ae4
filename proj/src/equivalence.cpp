#include "absorb/equivalence.hpp"

#include "absorb/channel.hpp"
#include "absorb/errors.hpp"

#include <algorithm>
#include <string>

namespace absorb::equivalence {

bool in_a_set(const Word& x, std::size_t t) {
    if (x.size() < t + 1) return false;
    return std::all_of(x.symbols().begin(), x.symbols().begin() + static_cast<std::ptrdiff_t>(t), [](Symbol s) { return s == 0; });
}

bool in_b_set(const Word& y, std::size_t t) {
    if (y.size() < t + 2) return false;
    return std::all_of(y.symbols().begin(), y.symbols().begin() + static_cast<std::ptrdiff_t>(t + 1), [](Symbol s) { return s == 0; });
}

Word phi(const Word& x, std::size_t t) {
    if (!in_a_set(x, t)) throw DomainError("phi needs a word of length > t starting with " + std::to_string(t) + " zeros");
    const int q = x.q();
    std::vector<Symbol> y{0};
    y.reserve(x.size() + 1);
    for (Symbol s : x.symbols()) y.push_back(modular_add(y.back(), s, q));
    return Word(q, std::move(y));
}

Word phi_inverse(const Word& y, std::size_t t) {
    if (!in_b_set(y, t)) throw DomainError("phi_inverse needs a word starting with " + std::to_string(t + 1) + " zeros");
    const int q = y.q();
    std::vector<Symbol> x;
    x.reserve(y.size() - 1);
    for (std::size_t i = 0; i + 1 < y.size(); ++i) x.push_back(static_cast<Symbol>((y[i + 1] + q - y[i]) % q));
    return Word(q, std::move(x));
}

std::vector<Word> mapped_contraction_ball(const Word& x, std::size_t t) {
    if (!in_a_set(x, t)) throw DomainError("x must start with t zeros");
    std::vector<Word> out;
    for (const Word& c : contraction_ball(x, t)) out.push_back(phi(c, 0));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool equivalence_check(const Word& x, std::size_t t) {
    return mapped_contraction_ball(x, t) == deletion_ball(phi(x, t), t);
}

ContractionDescriptor classify_contraction_case(Symbol a, Symbol b, int q) {
    require_alphabet(q);
    if (a >= q || b >= q) throw DomainError("symbol out of range");
    ContractionDescriptor d;
    d.merged = modular_add(a, b, q);
    d.countDeltas.assign(static_cast<std::size_t>(q), 0);
    d.countDeltas[a] += 1;
    d.countDeltas[b] += 1;
    d.countDeltas[d.merged] -= 1;
    if (a == 0 || b == 0) {
        d.kind = ContractionCase::ZeroDeletion;
    } else if (a == b) {
        d.kind = ContractionCase::DoubledSymbol;
    } else {
        d.kind = ContractionCase::DistinctPair;
    }
    return d;
}

} // namespace absorb::equivalence
