#ifndef ABSORB_EQUIVALENCE_HPP
#define ABSORB_EQUIVALENCE_HPP

#include "absorb/word.hpp"

#include <vector>

namespace absorb::equivalence {

// Prefix-sum map: y_1 = 0, y_i = x_1 + ... + x_{i-1} mod q. x must start
// with t zeros; the image has length |x| + 1 and starts with t + 1 zeros.
Word phi(const Word& x, std::size_t t);
// Difference map x_i = y_{i+1} - y_i mod q; y must start with t + 1 zeros.
Word phi_inverse(const Word& y, std::size_t t = 0);

bool in_a_set(const Word& x, std::size_t t);
bool in_b_set(const Word& y, std::size_t t);

// Images under phi of the t-contraction ball of x, sorted.
std::vector<Word> mapped_contraction_ball(const Word& x, std::size_t t);
// True iff the mapped contraction ball equals deletion_ball(phi(x), t).
bool equivalence_check(const Word& x, std::size_t t);

enum class ContractionCase { ZeroDeletion, DoubledSymbol, DistinctPair };

struct ContractionDescriptor {
    ContractionCase kind = ContractionCase::ZeroDeletion;
    Symbol merged = 0;              // a (+) b mod q
    std::vector<int> countDeltas;   // N_d(x) - N_d(y) for each symbol d
};

// Effect of contracting the adjacent pair (a, b) on the symbol counts.
ContractionDescriptor classify_contraction_case(Symbol a, Symbol b, int q);

} // namespace absorb::equivalence

#endif
