#include "absorb/stats.hpp"

#include "absorb/errors.hpp"

namespace absorb {

std::uint64_t vt_syndrome(std::span<const Symbol> z) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < z.size(); ++i) s += (i + 1) * static_cast<std::uint64_t>(z[i]);
    return s;
}

std::uint64_t vt_syndrome(const Word& z) { return vt_syndrome(z.span()); }

std::uint64_t inversions(std::span<const Symbol> z, int q) {
    // seen[a]: symbols equal to a met so far; greater = count of earlier symbols above the current one.
    std::vector<std::uint64_t> seen(static_cast<std::size_t>(q), 0);
    std::uint64_t total = 0;
    for (Symbol s : z) {
        for (int a = s + 1; a < q; ++a) total += seen[static_cast<std::size_t>(a)];
        ++seen[s];
    }
    return total;
}

std::uint64_t inversions(const Word& z) { return inversions(z.span(), z.q()); }

std::vector<Symbol> descent_bits(std::span<const Symbol> z) {
    std::vector<Symbol> out;
    if (z.size() < 2) return out;
    out.reserve(z.size() - 1);
    for (std::size_t i = 0; i + 1 < z.size(); ++i) out.push_back(z[i + 1] >= z[i] ? 1 : 0);
    return out;
}

Word descent_map(const Word& z) {
    if (z.empty()) throw DomainError("descent map needs a non-empty word");
    return Word(2, descent_bits(z.span()));
}

Word location_sequence(const Word& x) {
    std::vector<Symbol> out(x.size());
    const auto top = static_cast<Symbol>(x.q() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] == top ? 1 : 0;
    return Word(2, std::move(out));
}

std::vector<std::size_t> symbol_counts(std::span<const Symbol> x, int q) {
    std::vector<std::size_t> counts(static_cast<std::size_t>(q), 0);
    for (Symbol s : x) ++counts[s];
    return counts;
}

std::vector<std::size_t> symbol_counts(const Word& x) { return symbol_counts(x.span(), x.q()); }

std::size_t zero_run_count(const Word& x) {
    std::size_t runs = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0 && (i == 0 || x[i - 1] != 0)) ++runs;
    }
    return runs;
}

StatVector compute_stats(const Word& x) {
    return StatVector{vt_syndrome(x), inversions(x), symbol_counts(x), zero_run_count(x)};
}

} // namespace absorb
