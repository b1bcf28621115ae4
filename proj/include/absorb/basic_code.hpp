#ifndef ABSORB_BASIC_CODE_HPP
#define ABSORB_BASIC_CODE_HPP

#include "absorb/word.hpp"

#include <cstdint>
#include <vector>

namespace absorb::basic {

/// Moduli of the descent, position-weighted and location syndromes.
/// The natural choice for length n is (n, q*n, 2n-3); any larger values
/// keep the decoder correct, which the block-wise improved code relies on.
struct Moduli {
    std::uint64_t descent = 0;
    std::uint64_t syn = 0;
    std::uint64_t loc = 0;
    friend bool operator==(const Moduli&, const Moduli&) = default;
};

Moduli natural_moduli(int q, std::size_t n);

/// Parameter tuple of the code C(n; s, t, d).
struct BasicParams {
    int q = 3;
    std::size_t n = 3;
    std::vector<std::uint32_t> s; // N_a mod 4 for a in [0, q-2]
    std::uint64_t t1 = 0;         // descent syndrome
    std::uint64_t t2 = 0;         // inversion parity
    std::uint64_t d1 = 0;         // position-weighted syndrome
    std::uint64_t d2 = 0;         // syndrome of the location sequence
    Moduli moduli;

    // Residue required of N_{q-1}: (n - sum s_a) mod 4.
    std::uint32_t s_last() const;
    std::uint32_t count_residue(Symbol a) const;
    friend bool operator==(const BasicParams&, const BasicParams&) = default;
};

void validate(const BasicParams& p);
// The tuple whose code contains x.
BasicParams params_of(const Word& x);
BasicParams params_of(const Word& x, const Moduli& m);

bool c1_membership(const Word& x, const BasicParams& p);
bool c2_membership(const Word& x, const BasicParams& p);
bool c3_membership(const Word& z, std::uint64_t d2, std::uint64_t modulus);
bool c3_membership(const Word& z, std::uint64_t d2);
bool code_membership(const Word& x, const BasicParams& p);

enum class CaseKind { ZeroInvolved, MaxInvolved, DoubledSymbol, DistinctPair };

/// Which adjacent pair was absorbed, as read off the count residues of y.
struct CaseClassification {
    CaseKind kind = CaseKind::ZeroInvolved;
    Symbol a = 0;
    Symbol b = 0;
    friend bool operator==(const CaseClassification&, const CaseClassification&) = default;
};

CaseClassification classify_case(const Word& y, const BasicParams& p);

// z' arose from a binary z with Syn(z) = d2 mod `modulus` by turning one 00
// into 1. Returns the 1-based position of that 1 in z'.
std::size_t locate_00_to_1(const Word& zPrime, std::uint64_t d2, std::uint64_t modulus);
std::size_t locate_00_to_1(const Word& zPrime, std::uint64_t d2);

// y is x with one copy of `deleted` removed and Syn(descent(x)) = t1 mod `modulus`.
Word tenengolts_decode_known_symbol(const Word& y, std::uint64_t t1, Symbol deleted, std::uint64_t modulus);
Word tenengolts_decode_known_symbol(const Word& y, std::uint64_t t1, Symbol deleted);

Word decode_single_absorption(const Word& y, const BasicParams& p);

} // namespace absorb::basic

#endif
