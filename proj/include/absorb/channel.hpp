#ifndef ABSORB_CHANNEL_HPP
#define ABSORB_CHANNEL_HPP

#include "absorb/word.hpp"

#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace absorb {

Symbol saturating_add(Symbol a, Symbol b, int q);
Symbol modular_add(Symbol a, Symbol b, int q);

// How two merged neighbours combine: a(+)b = min(a+b, q-1) or (a+b) mod q.
enum class MergeRule { Saturating, Modular };

Symbol merge(MergeRule rule, Symbol a, Symbol b, int q);

/// One event replaces symbols [start, start + count] (1-based) by their merge.
struct AbsorptionEvent {
    std::size_t start = 1;
    std::size_t count = 1;
    friend bool operator==(const AbsorptionEvent&, const AbsorptionEvent&) = default;
};

/// Multi-absorption descriptor: events on the head, then the last tPrime
/// symbols are dropped.
struct AbsorptionPattern {
    std::size_t tPrime = 0;
    std::vector<AbsorptionEvent> events;

    std::size_t weight() const;
    friend bool operator==(const AbsorptionPattern&, const AbsorptionPattern&) = default;
};

// Throws InvalidPattern unless the pattern is applicable to a word of length n.
void validate_pattern(const AbsorptionPattern& p, std::size_t n);

// Text form "t';start:count,start:count", e.g. "0;2:2,6:1". An empty event
// list is written "t';".
AbsorptionPattern parse_pattern(std::string_view text);
std::string format_pattern(const AbsorptionPattern& p);

// Weight-t pattern for words of length n: t' uniform in [0, t], then t - t'
// distinct merge positions in [2, n - t'] grouped into maximal runs.
AbsorptionPattern random_pattern(std::size_t n, std::size_t t, std::mt19937_64& rng);
// t distinct 1-based positions, sorted.
std::vector<std::size_t> random_positions(std::size_t n, std::size_t t, std::mt19937_64& rng);
Word delete_positions(const Word& x, const std::vector<std::size_t>& positions);

// Calls `fn` for every valid pattern of weight t on words of length n.
void for_each_pattern(std::size_t n, std::size_t t, const std::function<void(const AbsorptionPattern&)>& fn);

Word apply_pattern(const Word& x, const AbsorptionPattern& p, MergeRule rule);
Word apply_absorptions(const Word& x, const AbsorptionPattern& p);
Word apply_contraction(const Word& x, const AbsorptionPattern& p);

// Single error at 1-based position i: merges x_i and x_{i+1} for i < n,
// drops x_n for i = n.
Word absorb_at(const Word& x, std::size_t i);
Word contract_at(const Word& x, std::size_t i);

// Balls are returned sorted and without duplicates.
std::vector<Word> absorption_ball(const Word& x, std::size_t t);
std::vector<Word> contraction_ball(const Word& x, std::size_t t);
std::vector<Word> deletion_ball(const Word& x, std::size_t t);
std::vector<Word> ds_ball(const Word& x, std::size_t t);

// Ranks (see word_index) of the members of the deletion-substitution ball.
std::vector<std::uint64_t> ds_ball_indices(const Word& x, std::size_t t);

// t-fold composition of single absorptions; cross-check for absorption_ball.
std::vector<Word> iterated_absorption_ball(const Word& x, std::size_t t);

// Membership test without enumerating the ball.
bool in_ball(const Word& y, const Word& x, std::size_t t, MergeRule rule);
bool in_absorption_ball(const Word& y, const Word& x, std::size_t t);

// Inverse of one absorption: append a symbol, or expand z_i into ab with a(+)b = z_i.
std::vector<Word> splittings(const Word& z);
// Words reachable from z by `rounds` splittings, deduplicated per round.
std::vector<Word> split_closure(const Word& z, std::size_t rounds);

} // namespace absorb

#endif
