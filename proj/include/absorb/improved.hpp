#ifndef ABSORB_IMPROVED_HPP
#define ABSORB_IMPROVED_HPP

#include "absorb/basic_code.hpp"
#include "absorb/word.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

namespace absorb::improved {

// Largest window the localization step can return for segment cap delta:
// max(ceil(2/3 d^2 + 2d - 1), ceil(2/5 d^2 + d)).
std::size_t window_bound(std::size_t delta);

/// Per-block syndrome: (N_a mod 4)_{a<q-1}, Syn(descent) mod 2L+1, Inv mod 2,
/// Syn mod q(2L+1), Syn(location sequence) mod 4L-1.
struct BlockSyndrome {
    std::vector<std::uint32_t> counts;
    std::uint64_t descent = 0;
    std::uint64_t inv = 0;
    std::uint64_t syn = 0;
    std::uint64_t loc = 0;
    friend bool operator==(const BlockSyndrome&, const BlockSyndrome&) = default;
};

BlockSyndrome zero_syndrome(int q);
basic::Moduli block_moduli(int q, std::size_t L);
BlockSyndrome add(const BlockSyndrome& a, const BlockSyndrome& b, int q, std::size_t L);
BlockSyndrome subtract(const BlockSyndrome& a, const BlockSyndrome& b, int q, std::size_t L);
// Number of distinct values a BlockSyndrome can take.
boost::multiprecision::cpp_int syndrome_space(int q, std::size_t L);

struct ImprovedParams {
    int q = 3;
    std::size_t n = 0;
    std::size_t delta = 12;
    std::size_t L = 0;
    std::uint64_t r1 = 0; // f(x) mod 2n
    std::uint64_t r2 = 0; // g(x) = l_x mod 3
    BlockSyndrome alpha;
    BlockSyndrome beta;
    friend bool operator==(const ImprovedParams&, const ImprovedParams&) = default;
};

void validate(const ImprovedParams& p);

// f(x) = sum_j j |z_j| mod `modulus` (2n for the code), and g(x) = l_x mod 3.
std::uint64_t marker_moment(const Word& x, std::uint64_t modulus);
std::uint64_t marker_moment(const Word& x);
std::uint64_t marker_count(const Word& x);

using Interval = std::pair<std::size_t, std::size_t>; // 1-based, inclusive

struct IntervalFamilies {
    std::vector<Interval> first;
    std::vector<Interval> second;
};

// Block layout of [1, n] for window length L. When n <= 2L+1 the layout is
// the single interval [1, n].
IntervalFamilies intervals(std::size_t n, std::size_t L);

BlockSyndrome block_syndrome(const Word& z, std::size_t L);
BlockSyndrome g1_hat(const Word& x, std::size_t L);
BlockSyndrome g2_hat(const Word& x, std::size_t L);

// The class (r, alpha, beta) that x belongs to; x must lie in R_{q,n}.
ImprovedParams params_of(const Word& x, std::size_t delta, std::size_t L);
ImprovedParams params_of(const Word& x, std::size_t delta);

bool d1_membership(const Word& x, const ImprovedParams& p);
bool d_membership(const Word& x, const ImprovedParams& p);

struct ErrorFree {};
struct MarkerDamaged {};
struct Window {
    std::size_t start = 0; // 1-based positions of y
    std::size_t end = 0;
    int lengthShift = 0; // l_y - l_x
};
using WindowResult = std::variant<ErrorFree, MarkerDamaged, Window>;

WindowResult locate_window(const Word& y, const ImprovedParams& p);

struct BlockChoice {
    int family = 1; // 1 or 2
    std::size_t index = 0; // 0-based within the family
    Interval interval;
};

// An interval [a, b] with the window inside [a, b-1], searched from the last
// interval of the first family, then the second family.
BlockChoice choose_block(const IntervalFamilies& fam, const Window& w);

// Restores the final 0011 of a word whose last marker an absorption destroyed.
Word repair_marker(const Word& y);

Word decode_improved(const Word& y, const ImprovedParams& p);

} // namespace absorb::improved

#endif
