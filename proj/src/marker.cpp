#include "absorb/marker.hpp"

#include "absorb/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace absorb::marker {
namespace {

using boost::multiprecision::pow;

bool marker_ends_at(const std::vector<Symbol>& c, std::size_t j) {
    // 1-based: c_{j-3..j} == 0011.
    return j >= 4 && c[j - 4] == 0 && c[j - 3] == 0 && c[j - 2] == 1 && c[j - 1] == 1;
}

std::size_t chunk_count(std::size_t blockLen) {
    if (blockLen % 4 != 0) throw DomainError("block length " + std::to_string(blockLen) + " is not a multiple of 4");
    return blockLen / 4;
}

cpp_int int_pow(std::uint64_t base, std::size_t e) { return pow(cpp_int(base), static_cast<unsigned>(e)); }

// Next state of the 0011 matcher after reading c from `state` matched symbols.
int kmp_step(int state, Symbol c) {
    switch (state) {
    case 0: return c == 0 ? 1 : 0;
    case 1: return c == 0 ? 2 : 0;
    case 2: return c == 1 ? 3 : (c == 0 ? 2 : 0);
    case 3: return c == 1 ? 4 : (c == 0 ? 1 : 0);
    default: return 0;
    }
}

std::size_t multiple_of_4_at_least(double v) {
    auto k = static_cast<std::size_t>(std::ceil(v / 4.0 - 1e-12));
    return 4 * k;
}

} // namespace

std::size_t ceil_log(int q, std::uint64_t n) {
    require_alphabet(q);
    std::size_t k = 0;
    cpp_int power = 1;
    while (power < n) {
        power *= q;
        ++k;
    }
    return k;
}

bool counting_inequality_holds(int q, std::size_t blockLen, std::size_t targetLen) {
    const std::uint64_t radix = static_cast<std::uint64_t>(q) * q * q * q - 1;
    return int_pow(radix, chunk_count(blockLen)) <= int_pow(static_cast<std::uint64_t>(q), targetLen);
}

void validate(const MarkerParams& p) {
    require_alphabet(p.q);
    if (p.q < 3) throw DomainError("marker coding needs q >= 3");
    if (p.n < 1) throw DomainError("marker coding needs n >= 1");
    if (p.delta < 8) throw DomainError("delta must be at least 8");
    if ((p.delta - 4) % 4 != 0) throw DomainError("delta - 4 must be a multiple of 4");
    if (p.delta < p.pos_len() + 9) throw DomainError("delta too small to hold a position field");
    if (!counting_inequality_holds(p.q, p.block_len(), p.compressed_len())) {
        throw DomainError("delta=" + std::to_string(p.delta) + " violates (q^4-1)^((delta-4)/4) <= q^(delta-ceil(log_q n)-9)");
    }
}

MarkerConstants encoder_constants(int q) {
    require_alphabet(q);
    const double q4 = std::pow(static_cast<double>(q), 4);
    const double lnq = std::log(static_cast<double>(q));
    return {multiple_of_4_at_least(4.0 + 20.0 * q4 * lnq), multiple_of_4_at_least(4.0 * q4 * lnq)};
}

MarkerConstants density_constants(int q) {
    require_alphabet(q);
    const double q4 = std::pow(static_cast<double>(q), 4);
    const double step = std::log(q4 / (q4 - 1.0));
    const double lhs1 = std::log(static_cast<double>(q) / (q - 1.0)) / step;
    const double lhs2 = std::log(static_cast<double>(q)) / step;
    return {4 * static_cast<std::size_t>(std::ceil(lhs1 + 1.0 - 1e-12)), 4 * static_cast<std::size_t>(std::ceil(lhs2 - 1e-12))};
}

MarkerParams encoder_params(int q, std::size_t n) {
    const MarkerConstants c = encoder_constants(q);
    return {q, n, c.c1 + c.c2 * ceil_log(q, n)};
}

MarkerParams minimal_params(int q, std::size_t n) {
    MarkerParams p{q, n, 8};
    const std::size_t posLen = p.pos_len();
    const double slack = 4.0 - std::log(std::pow(static_cast<double>(q), 4) - 1.0) / std::log(static_cast<double>(q));
    auto holds = [&](std::size_t k) {
        const std::size_t delta = 4 * k + 4;
        return delta >= posLen + 9 && counting_inequality_holds(q, delta - 4, delta - posLen - 9);
    };
    std::size_t k = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((posLen + 5) / slack)));
    k = k > 3 ? k - 3 : 1;
    while (!holds(k)) ++k;
    while (k > 1 && holds(k - 1)) --k;
    p.delta = 4 * k + 4;
    validate(p);
    return p;
}

bool ends_with_marker(const Word& x) { return x.ends_with(kMarker); }

std::vector<std::size_t> segment_lengths(const Word& x) {
    if (!ends_with_marker(x)) throw DomainError("word " + x.str() + " does not end with 0011");
    std::vector<std::size_t> out;
    std::size_t start = 1;
    for (std::size_t j = 4; j <= x.size(); ++j) {
        if (marker_ends_at(x.symbols(), j)) {
            out.push_back(j - start + 1);
            start = j + 1;
        }
    }
    return out;
}

std::vector<Word> segment(const Word& x) {
    std::vector<Word> out;
    std::size_t start = 1;
    for (std::size_t len : segment_lengths(x)) {
        out.push_back(x.slice(start, start + len - 1));
        start += len;
    }
    return out;
}

bool r_membership(const Word& x, std::size_t delta) {
    if (!ends_with_marker(x)) return false;
    const auto lens = segment_lengths(x);
    return *std::max_element(lens.begin(), lens.end()) <= delta;
}

Word compress_block(const Word& s, std::size_t targetLen) {
    const int q = s.q();
    const std::size_t chunks = chunk_count(s.size());
    const std::uint32_t radix = static_cast<std::uint32_t>(q) * q * q * q - 1;
    const std::uint32_t skipped = static_cast<std::uint32_t>(q) + 1; // value of 0011
    cpp_int value = 0;
    for (std::size_t k = 0; k < chunks; ++k) {
        std::uint32_t v = 0;
        for (std::size_t r = 0; r < 4; ++r) v = v * q + s[4 * k + r];
        if (v == skipped) throw DomainError("block contains 0011 at offset " + std::to_string(4 * k + 1));
        value = value * radix + (v > skipped ? v - 1 : v);
    }
    std::vector<Symbol> out(targetLen, 0);
    for (std::size_t k = targetLen; k-- > 0;) {
        out[k] = static_cast<Symbol>(static_cast<unsigned>(value % q));
        value /= q;
    }
    if (value != 0) throw DomainError("compressed block does not fit in " + std::to_string(targetLen) + " symbols");
    return Word(q, std::move(out));
}

Word decompress_block(const Word& v, std::size_t blockLen) {
    const int q = v.q();
    const std::size_t chunks = chunk_count(blockLen);
    const std::uint32_t radix = static_cast<std::uint32_t>(q) * q * q * q - 1;
    const std::uint32_t skipped = static_cast<std::uint32_t>(q) + 1;
    cpp_int value = 0;
    for (Symbol d : v.symbols()) value = value * q + d;
    std::vector<Symbol> out(blockLen, 0);
    for (std::size_t k = chunks; k-- > 0;) {
        auto u = static_cast<std::uint32_t>(value % radix);
        value /= radix;
        if (u >= skipped) ++u;
        for (std::size_t r = 4; r-- > 0;) {
            out[4 * k + r] = static_cast<Symbol>(u % q);
            u /= q;
        }
    }
    if (value != 0) throw DecodeFailure("compressed payload is outside the image of the block map");
    return Word(q, std::move(out));
}

Word compress_block(const Word& s, const MarkerParams& p) {
    if (s.size() != p.block_len()) throw DomainError("block length " + std::to_string(s.size()) + " != delta-4");
    return compress_block(s, p.compressed_len());
}

Word decompress_block(const Word& v, const MarkerParams& p) {
    if (v.size() != p.compressed_len()) throw DomainError("payload length " + std::to_string(v.size()) + " != compressed length");
    return decompress_block(v, p.block_len());
}

Word position_code(std::size_t i, const MarkerParams& p) {
    if (i < 2 || i > p.n + 1) throw DomainError("position " + std::to_string(i) + " outside [2, n+1]");
    std::vector<Symbol> out(p.pos_len(), 0);
    std::size_t v = i - 2;
    for (std::size_t k = out.size(); k-- > 0;) {
        out[k] = static_cast<Symbol>(v % static_cast<std::size_t>(p.q));
        v /= static_cast<std::size_t>(p.q);
    }
    return Word(p.q, std::move(out));
}

std::size_t position_decode(const Word& digits, const MarkerParams& p) {
    if (digits.size() != p.pos_len()) throw DomainError("position field has the wrong length");
    std::uint64_t v = 0;
    for (Symbol d : digits.symbols()) v = v * static_cast<std::uint64_t>(p.q) + d;
    if (v + 2 > p.n + 1) throw DecodeFailure("position field decodes outside [2, n+1]");
    return static_cast<std::size_t>(v) + 2;
}

Word encode_to_marker_set(const Word& x, const MarkerParams& p) {
    validate(p);
    if (x.size() != p.n) throw DomainError("message length " + std::to_string(x.size()) + " != n=" + std::to_string(p.n));
    if (x.q() != p.q) throw DomainError("message alphabet does not match the parameters");
    const std::size_t delta = p.delta;
    std::vector<Symbol> c;
    c.reserve(p.n + 5);
    c.push_back(1);
    c.insert(c.end(), x.symbols().begin(), x.symbols().end());
    c.insert(c.end(), kMarker.begin(), kMarker.end());

    std::size_t i = p.n + 5;
    std::size_t d = 1;
    std::size_t iterations = 0;
    while (i >= d + delta) {
        if (++iterations > p.n) throw InternalInconsistency("marker encoder did not terminate within n iterations");
        std::size_t j = d - 1;
        for (std::size_t cand = i - 4; cand >= d + 3; --cand) {
            if (marker_ends_at(c, cand)) {
                j = cand;
                break;
            }
        }
        if (i - j <= delta) {
            i = j;
            continue;
        }
        // Move c_{i-delta+1..i-4} to the front as 0 b(i-4) g(.) 0011.
        const Word removed(p.q, std::vector<Symbol>(c.begin() + static_cast<std::ptrdiff_t>(i - delta),
                                                    c.begin() + static_cast<std::ptrdiff_t>(i - 4)));
        std::vector<Symbol> next;
        next.reserve(c.size());
        next.push_back(0);
        const Word pos = position_code(i - 4, p);
        next.insert(next.end(), pos.symbols().begin(), pos.symbols().end());
        const Word packed = compress_block(removed, p);
        next.insert(next.end(), packed.symbols().begin(), packed.symbols().end());
        next.insert(next.end(), kMarker.begin(), kMarker.end());
        next.insert(next.end(), c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i - delta));
        next.insert(next.end(), c.begin() + static_cast<std::ptrdiff_t>(i - 4), c.end());
        c = std::move(next);
        d += delta - 4;
    }
    return Word(p.q, std::move(c));
}

Word decode_from_marker_set(const Word& c, const MarkerParams& p) {
    validate(p);
    if (c.size() != p.n + 5) throw DomainError("encoded length " + std::to_string(c.size()) + " != n+5");
    const std::size_t delta = p.delta;
    const std::size_t posLen = p.pos_len();
    std::vector<Symbol> x(c.symbols());
    std::size_t iterations = 0;
    while (!x.empty() && x[0] == 0) {
        if (++iterations > p.n) throw DecodeFailure("too many leading blocks");
        if (x.size() < delta - 4) throw DecodeFailure("leading block is truncated");
        if (!marker_ends_at(x, delta - 4)) throw DecodeFailure("leading block does not end with 0011");
        const Word w(p.q, x);
        const std::size_t ind = position_decode(w.slice(2, posLen + 1), p);
        if (ind < delta - 4 || ind > x.size()) throw DecodeFailure("block position points outside the word");
        const Word restored = decompress_block(w.slice(posLen + 2, delta - 8), p);
        std::vector<Symbol> next;
        next.reserve(x.size());
        next.insert(next.end(), x.begin() + static_cast<std::ptrdiff_t>(delta - 4), x.begin() + static_cast<std::ptrdiff_t>(ind));
        next.insert(next.end(), restored.symbols().begin(), restored.symbols().end());
        next.insert(next.end(), x.begin() + static_cast<std::ptrdiff_t>(ind), x.end());
        x = std::move(next);
    }
    if (x.empty() || x[0] != 1 || !Word(p.q, x).ends_with(kMarker)) throw DecodeFailure("missing start symbol or final 0011");
    return Word(p.q, std::vector<Symbol>(x.begin() + 1, x.begin() + 1 + static_cast<std::ptrdiff_t>(p.n)));
}

cpp_int count_r_set(std::size_t n, int q, std::size_t delta) {
    require_alphabet(q);
    if (n < 4 || delta < 4) return 0;
    // ways[state][len]: prefixes whose open segment has `len` symbols and whose
    // 0011 matcher is in `state`; len = 0 marks a segment boundary.
    using Table = std::vector<std::vector<cpp_int>>;
    Table ways(4, std::vector<cpp_int>(delta + 1, 0));
    ways[0][0] = 1;
    for (std::size_t pos = 0; pos < n; ++pos) {
        Table next(4, std::vector<cpp_int>(delta + 1, 0));
        for (int s = 0; s < 4; ++s) {
            for (std::size_t len = 0; len <= delta; ++len) {
                if (ways[s][len] == 0) continue;
                if (len + 1 > delta) continue;
                for (int c = 0; c < q; ++c) {
                    const int ns = kmp_step(s, static_cast<Symbol>(c));
                    if (ns == 4) next[0][0] += ways[s][len];
                    else next[ns][len + 1] += ways[s][len];
                }
            }
        }
        ways = std::move(next);
    }
    return ways[0][0];
}

} // namespace absorb::marker
