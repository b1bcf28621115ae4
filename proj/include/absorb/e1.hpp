#ifndef ABSORB_E1_HPP
#define ABSORB_E1_HPP

#include "absorb/improved.hpp"
#include "absorb/marker.hpp"
#include "absorb/word.hpp"

namespace absorb::e1 {

/// Systematic single-absorption code: Enc(x) 010 Q(f, g, g1_hat, g2_hat),
/// where Enc is the marker encoder and Q packs the syndromes of Enc(x) as a
/// fixed-width mixed-radix numeral.
struct E1Params {
    marker::MarkerParams marker;
    std::size_t L = 0;

    int q() const { return marker.q; }
    std::size_t message_len() const { return marker.n; }
    std::size_t enc_len() const { return marker.n + 5; }
    std::size_t tail_len() const;
    std::size_t length() const { return enc_len() + 3 + tail_len(); }
    std::size_t redundancy() const { return length() - message_len(); }
};

// Smallest valid segment cap for (q, n), L = window_bound(delta).
E1Params make_params(int q, std::size_t n);
E1Params make_params(const marker::MarkerParams& mp);

// Q and its inverse for the syndromes of a length-enc_len() word.
Word pack_syndromes(const improved::ImprovedParams& ip, const E1Params& p);
improved::ImprovedParams unpack_syndromes(const Word& tail, const E1Params& p);

Word e1_encode(const Word& x, const E1Params& p);
// Accepts the codeword or any word of its single-absorption ball.
Word e1_decode(const Word& c, const E1Params& p);

} // namespace absorb::e1

#endif
