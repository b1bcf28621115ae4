#ifndef ABSORB_STATS_HPP
#define ABSORB_STATS_HPP

#include "absorb/word.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace absorb {

// Sum of i * z_i over 1-based positions.
std::uint64_t vt_syndrome(std::span<const Symbol> z);
std::uint64_t vt_syndrome(const Word& z);

// Number of pairs i < j with z_i > z_j.
std::uint64_t inversions(std::span<const Symbol> z, int q);
std::uint64_t inversions(const Word& z);

// Binary word of length |z| - 1 with bit i set iff z_{i+1} >= z_i.
Word descent_map(const Word& z);
std::vector<Symbol> descent_bits(std::span<const Symbol> z);

// Binary word marking the positions holding q - 1.
Word location_sequence(const Word& x);

std::vector<std::size_t> symbol_counts(const Word& x);
std::vector<std::size_t> symbol_counts(std::span<const Symbol> x, int q);

// Number of maximal runs of 0.
std::size_t zero_run_count(const Word& x);

struct StatVector {
    std::uint64_t syn = 0;
    std::uint64_t inv = 0;
    std::vector<std::size_t> counts;
    std::size_t r0 = 0;
};

StatVector compute_stats(const Word& x);

} // namespace absorb

#endif
