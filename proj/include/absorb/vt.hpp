#ifndef ABSORB_VT_HPP
#define ABSORB_VT_HPP

#include "absorb/word.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace absorb::vt {

/// VT_a(n): binary words of length n with syndrome congruent to a mod n+1.
struct VtParams {
    std::size_t n = 0;
    std::uint64_t a = 0;
};

void validate(const VtParams& p);

bool vt_membership(const Word& c, const VtParams& p);

// Reinserts one bit into y so that the syndrome becomes a mod `modulus`.
// Correct for any modulus >= |y| + 2; nullopt when no insertion fits.
std::optional<std::vector<Symbol>> reinsert_bit(std::span<const Symbol> y, std::uint64_t a, std::uint64_t modulus);

Word vt_decode_deletion(const Word& y, const VtParams& p);

// One absorption on a binary word acts as a single deletion.
Word absorption_decode_binary(const Word& y, const VtParams& p);

// Smallest N with N - ceil(log2(N + 1)) = k.
std::size_t systematic_length(std::size_t k);
Word vt_systematic_encode(const Word& u);
Word vt_systematic_decode(const Word& c);

} // namespace absorb::vt

#endif
