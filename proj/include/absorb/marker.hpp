#ifndef ABSORB_MARKER_HPP
#define ABSORB_MARKER_HPP

#include "absorb/word.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <vector>

namespace absorb::marker {

using boost::multiprecision::cpp_int;

inline constexpr std::array<Symbol, 4> kMarker{0, 0, 1, 1};

// Smallest k with q^k >= n (0 for n <= 1).
std::size_t ceil_log(int q, std::uint64_t n);

/// Segment cap and the derived lengths of the splice blocks used by the
/// marker encoder. A block is 0 . position . compressed payload . 0011 and has
/// length delta - 4, the same as the substring it replaces.
struct MarkerParams {
    int q = 3;
    std::size_t n = 1;     // message length
    std::size_t delta = 8; // segment-length cap

    std::size_t pos_len() const { return ceil_log(q, n); }
    std::size_t block_len() const { return delta - 4; }
    std::size_t compressed_len() const { return delta - pos_len() - 9; }
    friend bool operator==(const MarkerParams&, const MarkerParams&) = default;
};

// (q^4 - 1)^(blockLen / 4) <= q^targetLen, evaluated exactly.
bool counting_inequality_holds(int q, std::size_t blockLen, std::size_t targetLen);
void validate(const MarkerParams& p);

struct MarkerConstants {
    std::size_t c1 = 0;
    std::size_t c2 = 0;
};

// Smallest multiples of 4 with (c1 - 4) log_q(e) / (4 q^4) >= 5 and c2 log_q(e) / (4 q^4) >= 1,
// the conditions under which the encoder is guaranteed to work.
MarkerConstants encoder_constants(int q);
// Smallest multiples of 4 with (q^4/(q^4-1))^(c1/4 - 1) >= q/(q-1) and (q^4/(q^4-1))^(c2/4) >= q.
MarkerConstants density_constants(int q);
// delta = c1 + c2 * ceil(log_q n) with the encoder constants.
MarkerParams encoder_params(int q, std::size_t n);
// Smallest delta accepted by validate() for this (q, n).
MarkerParams minimal_params(int q, std::size_t n);

// Splits x into consecutive pieces that each end with the only 0011 they contain.
std::vector<Word> segment(const Word& x);
std::vector<std::size_t> segment_lengths(const Word& x);
bool ends_with_marker(const Word& x);
bool r_membership(const Word& x, std::size_t delta);

// Injective map from 0011-free words of length blockLen (a multiple of 4) to
// Sigma_q^targetLen, via radix q^4 - 1 over the length-4 chunks.
Word compress_block(const Word& s, std::size_t targetLen);
Word decompress_block(const Word& v, std::size_t blockLen);
Word compress_block(const Word& s, const MarkerParams& p);
Word decompress_block(const Word& v, const MarkerParams& p);

// Base-q numeral of i - 2 on pos_len() digits, for i in [2, n+1].
Word position_code(std::size_t i, const MarkerParams& p);
std::size_t position_decode(const Word& digits, const MarkerParams& p);

Word encode_to_marker_set(const Word& x, const MarkerParams& p);
Word decode_from_marker_set(const Word& c, const MarkerParams& p);

// |R_{q,n}| for segment cap delta.
cpp_int count_r_set(std::size_t n, int q, std::size_t delta);

} // namespace absorb::marker

#endif
