#include "absorb/basic_code.hpp"

#include "absorb/channel.hpp"
#include "absorb/errors.hpp"
#include "absorb/stats.hpp"
#include "absorb/vt.hpp"

#include <algorithm>
#include <string>

namespace absorb::basic {
namespace {

void require_length(const Word& x, std::size_t n) {
    if (x.size() != n) throw DomainError("word length " + std::to_string(x.size()) + " != " + std::to_string(n));
}

void require_params_match(const Word& x, const BasicParams& p) {
    validate(p);
    if (x.q() != p.q) throw DomainError("alphabet of word does not match the code");
}

Moduli effective(const BasicParams& p) {
    Moduli m = p.moduli;
    const Moduli nat = natural_moduli(p.q, p.n);
    if (m.descent == 0) m.descent = nat.descent;
    if (m.syn == 0) m.syn = nat.syn;
    if (m.loc == 0) m.loc = nat.loc;
    return m;
}

// Candidate with y_j (0-based) expanded into (u, v).
std::vector<Symbol> expand_at(const Word& y, std::size_t j, Symbol u, Symbol v) {
    std::vector<Symbol> out;
    out.reserve(y.size() + 1);
    out.insert(out.end(), y.symbols().begin(), y.symbols().begin() + static_cast<std::ptrdiff_t>(j));
    out.push_back(u);
    out.push_back(v);
    out.insert(out.end(), y.symbols().begin() + static_cast<std::ptrdiff_t>(j) + 1, y.symbols().end());
    return out;
}

// Expands y_j into the pair {a, b}, ordered to match the inversion parity t2.
std::vector<Symbol> expand_by_parity(const Word& y, std::size_t j, Symbol a, Symbol b, std::uint64_t t2) {
    auto cand = expand_at(y, j, a, b);
    if (a != b && inversions(cand, y.q()) % 2 != t2) cand = expand_at(y, j, b, a);
    return cand;
}

} // namespace

Moduli natural_moduli(int q, std::size_t n) {
    if (n < 3) throw DomainError("the basic code needs n >= 3");
    return {n, static_cast<std::uint64_t>(q) * n, 2 * n - 3};
}

std::uint32_t BasicParams::s_last() const {
    std::uint64_t sum = 0;
    for (auto v : s) sum += v;
    return static_cast<std::uint32_t>((n % 4 + 4 - sum % 4) % 4);
}

std::uint32_t BasicParams::count_residue(Symbol a) const {
    return static_cast<int>(a) == q - 1 ? s_last() : s[a];
}

void validate(const BasicParams& p) {
    if (p.q < 3 || p.q > kMaxAlphabet) throw DomainError("the basic code needs q >= 3");
    if (p.n < 3) throw DomainError("the basic code needs n >= 3");
    if (p.s.size() != static_cast<std::size_t>(p.q - 1)) throw DomainError("s must have q-1 entries");
    for (auto v : p.s) {
        if (v > 3) throw DomainError("s entries are residues mod 4");
    }
    const Moduli m = effective(p);
    const Moduli nat = natural_moduli(p.q, p.n);
    if (m.descent < nat.descent || m.syn < nat.syn || m.loc < nat.loc) {
        throw DomainError("syndrome moduli below the natural values for n=" + std::to_string(p.n));
    }
    if (p.t1 >= m.descent || p.t2 >= 2 || p.d1 >= m.syn || p.d2 >= m.loc) {
        throw DomainError("syndrome residue out of range");
    }
}

BasicParams params_of(const Word& x) { return params_of(x, natural_moduli(x.q(), x.size())); }

BasicParams params_of(const Word& x, const Moduli& m) {
    BasicParams p;
    p.q = x.q();
    p.n = x.size();
    p.moduli = m;
    const auto counts = symbol_counts(x);
    for (int a = 0; a + 1 < x.q(); ++a) p.s.push_back(static_cast<std::uint32_t>(counts[static_cast<std::size_t>(a)] % 4));
    p.t1 = vt_syndrome(descent_bits(x.span())) % m.descent;
    p.t2 = inversions(x) % 2;
    p.d1 = vt_syndrome(x) % m.syn;
    p.d2 = vt_syndrome(location_sequence(x)) % m.loc;
    validate(p);
    return p;
}

bool c1_membership(const Word& x, const BasicParams& p) {
    require_params_match(x, p);
    require_length(x, p.n);
    const auto counts = symbol_counts(x);
    for (int a = 0; a + 1 < p.q; ++a) {
        if (counts[static_cast<std::size_t>(a)] % 4 != p.s[static_cast<std::size_t>(a)]) return false;
    }
    return true;
}

bool c2_membership(const Word& x, const BasicParams& p) {
    if (!c1_membership(x, p)) return false;
    const Moduli m = effective(p);
    return vt_syndrome(descent_bits(x.span())) % m.descent == p.t1 && inversions(x) % 2 == p.t2;
}

bool c3_membership(const Word& z, std::uint64_t d2, std::uint64_t modulus) {
    if (z.q() != 2) throw DomainError("location sequences are binary");
    if (modulus == 0) throw DomainError("modulus must be positive");
    return vt_syndrome(z) % modulus == d2;
}

bool c3_membership(const Word& z, std::uint64_t d2) {
    if (z.size() < 3) throw DomainError("C3 needs length >= 3");
    return c3_membership(z, d2, 2 * z.size() - 3);
}

bool code_membership(const Word& x, const BasicParams& p) {
    if (!c2_membership(x, p)) return false;
    const Moduli m = effective(p);
    return vt_syndrome(x) % m.syn == p.d1 && c3_membership(location_sequence(x), p.d2, m.loc);
}

CaseClassification classify_case(const Word& y, const BasicParams& p) {
    require_params_match(y, p);
    require_length(y, p.n - 1);
    const int q = p.q;
    const auto counts = symbol_counts(y);
    std::vector<std::pair<Symbol, std::uint32_t>> off; // symbols whose count residue moved
    for (int a = 0; a < q; ++a) {
        const auto want = p.count_residue(static_cast<Symbol>(a));
        const auto e = static_cast<std::uint32_t>((counts[static_cast<std::size_t>(a)] % 4 + 4 - want) % 4);
        if (e != 0) off.emplace_back(static_cast<Symbol>(a), e);
    }
    const auto sat = [q](int u, int v) { return static_cast<Symbol>(std::min(u + v, q - 1)); };
    const auto interior = [q](int u) { return u > 0 && u < q - 1; };

    if (off.size() == 1 && off[0].second == 3) {
        if (off[0].first == 0) return {CaseKind::ZeroInvolved, 0, 0};
        return {CaseKind::MaxInvolved, off[0].first, off[0].first};
    }
    if (off.size() == 2) {
        for (int k = 0; k < 2; ++k) {
            const auto [a, ea] = off[static_cast<std::size_t>(k)];
            const auto [c, ec] = off[static_cast<std::size_t>(1 - k)];
            if (ea == 2 && ec == 1 && interior(a) && sat(a, a) == c) return {CaseKind::DoubledSymbol, a, a};
        }
    }
    if (off.size() == 3) {
        std::vector<Symbol> threes;
        Symbol one = 0;
        int ones = 0;
        for (auto [s, e] : off) {
            if (e == 3) threes.push_back(s);
            if (e == 1) {
                one = s;
                ++ones;
            }
        }
        if (threes.size() == 2 && ones == 1 && interior(threes[0]) && interior(threes[1]) &&
            sat(threes[0], threes[1]) == one) {
            return {CaseKind::DistinctPair, threes[0], threes[1]};
        }
    }
    throw DecodeFailure("count residues of " + y.str() + " match no single-absorption case");
}

std::size_t locate_00_to_1(const Word& zPrime, std::uint64_t d2, std::uint64_t modulus) {
    if (zPrime.q() != 2) throw DomainError("location sequences are binary");
    if (modulus == 0) throw DomainError("modulus must be positive");
    const std::uint64_t syn = vt_syndrome(zPrime);
    std::uint64_t onesAfter = 0;
    for (Symbol b : zPrime.symbols()) onesAfter += b;
    for (std::size_t i = 1; i <= zPrime.size(); ++i) {
        if (zPrime.at(i) != 1) continue;
        --onesAfter;
        // Replacing the 1 at i by 00 removes weight i and shifts later ones right.
        const std::uint64_t candidate = syn - i + onesAfter;
        if (candidate % modulus == d2 % modulus) return i;
    }
    throw DecodeFailure("no 1 in " + zPrime.str() + " expands to a member of C3");
}

std::size_t locate_00_to_1(const Word& zPrime, std::uint64_t d2) {
    const std::size_t n = zPrime.size() + 1;
    if (n < 3) throw DomainError("C3 needs length >= 3");
    return locate_00_to_1(zPrime, d2, 2 * n - 3);
}

Word tenengolts_decode_known_symbol(const Word& y, std::uint64_t t1, Symbol deleted, std::uint64_t modulus) {
    const int q = y.q();
    if (static_cast<int>(deleted) >= q) throw DomainError("deleted symbol out of range");
    const std::size_t m = y.size() + 1;
    if (modulus < m) throw DomainError("descent modulus must be at least the codeword length");
    if (m == 1) return Word(q, {deleted});

    const auto& ys = y.symbols();
    const std::vector<Symbol> have = descent_bits(ys);
    const auto target = vt::reinsert_bit(have, t1, modulus);
    if (!target) throw DecodeFailure("descent syndrome inconsistent with " + y.str());
    const std::vector<Symbol>& want = *target; // length m-1

    // Longest agreeing prefix of have/want, and earliest k from which have[k-1] == want[k] to the end.
    std::size_t prefix = 0;
    while (prefix < have.size() && have[prefix] == want[prefix]) ++prefix;
    std::size_t suffixFrom = want.size();
    while (suffixFrom > 1 && have[suffixFrom - 2] == want[suffixFrom - 1]) --suffixFrom;

    for (std::size_t p = 0; p < m; ++p) {
        // Inserting before y[p]: bits p-1 and p are new, the rest copy `have`.
        if (p >= 2 && p - 1 > prefix) break;
        if (p + 1 < suffixFrom) continue;
        if (p >= 1 && want[p - 1] != (deleted >= ys[p - 1] ? 1 : 0)) continue;
        if (p + 1 < m && want[p] != (ys[p] >= deleted ? 1 : 0)) continue;
        std::vector<Symbol> x;
        x.reserve(m);
        x.insert(x.end(), ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(p));
        x.push_back(deleted);
        x.insert(x.end(), ys.begin() + static_cast<std::ptrdiff_t>(p), ys.end());
        return Word(q, std::move(x));
    }
    throw DecodeFailure("no reinsertion of " + std::to_string(deleted) + " into " + y.str() + " matches the descent syndrome");
}

Word tenengolts_decode_known_symbol(const Word& y, std::uint64_t t1, Symbol deleted) {
    return tenengolts_decode_known_symbol(y, t1, deleted, y.size() + 1);
}

Word decode_single_absorption(const Word& y, const BasicParams& p) {
    const CaseClassification cls = classify_case(y, p);
    const Moduli m = effective(p);
    const int q = p.q;
    Word x;
    if (cls.kind == CaseKind::ZeroInvolved || cls.kind == CaseKind::MaxInvolved) {
        x = tenengolts_decode_known_symbol(y, p.t1, cls.a, m.descent);
    } else if (static_cast<int>(cls.a) + cls.b <= q - 1) {
        const auto c = static_cast<Symbol>(cls.a + cls.b);
        bool found = false;
        for (std::size_t j = 0; j < y.size() && !found; ++j) {
            if (y[j] != c) continue;
            auto cand = expand_by_parity(y, j, cls.a, cls.b, p.t2);
            if (vt_syndrome(cand) % m.syn == p.d1) {
                x = Word(q, std::move(cand));
                found = true;
            }
        }
        if (!found) throw DecodeFailure("no occurrence of the merged symbol satisfies the weighted syndrome");
    } else {
        const std::size_t i = locate_00_to_1(location_sequence(y), p.d2, m.loc);
        x = Word(q, expand_by_parity(y, i - 1, cls.a, cls.b, p.t2));
    }
    if (!code_membership(x, p) || !in_absorption_ball(y, x, 1)) {
        throw DecodeFailure("reconstruction of " + y.str() + " is not a consistent codeword");
    }
    return x;
}

} // namespace absorb::basic
