#include "absorb/improved.hpp"

#include "absorb/errors.hpp"
#include "absorb/marker.hpp"
#include "absorb/stats.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace absorb::improved {
namespace {

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return (a + b) % m; }
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return (a % m + m - b % m) % m; }

void require_syndrome(const BlockSyndrome& s, int q, std::size_t L, const char* what) {
    const basic::Moduli m = block_moduli(q, L);
    bool ok = s.counts.size() == static_cast<std::size_t>(q - 1);
    for (auto c : s.counts) ok = ok && c < 4;
    ok = ok && s.descent < m.descent && s.inv < 2 && s.syn < m.syn && s.loc < m.loc;
    if (!ok) throw DomainError(std::string(what) + " is not a valid block syndrome");
}

BlockSyndrome family_sum(const Word& x, const std::vector<Interval>& fam, std::size_t L, std::size_t skip) {
    BlockSyndrome total = zero_syndrome(x.q());
    for (std::size_t k = 0; k < fam.size(); ++k) {
        if (k == skip) continue;
        total = add(total, block_syndrome(x.slice(fam[k].first, fam[k].second), L), x.q(), L);
    }
    return total;
}

// 1-based first position of each segment, plus one past the end.
std::vector<std::size_t> segment_starts(const std::vector<std::size_t>& lens) {
    std::vector<std::size_t> starts{1};
    for (std::size_t len : lens) starts.push_back(starts.back() + len);
    return starts;
}

bool ends_with(const Word& y, std::initializer_list<Symbol> tail) {
    const std::vector<Symbol> t(tail);
    return y.ends_with(t);
}

} // namespace

std::size_t window_bound(std::size_t delta) {
    const std::size_t d2 = delta * delta;
    const std::size_t case2 = (2 * d2 + 2) / 3 + 2 * delta - 1; // ceil(2d^2/3) + 2d - 1
    const std::size_t case3 = (2 * d2 + 4) / 5 + delta;         // ceil(2d^2/5) + d
    return std::max(case2, case3);
}

BlockSyndrome zero_syndrome(int q) {
    BlockSyndrome s;
    s.counts.assign(static_cast<std::size_t>(q - 1), 0);
    return s;
}

basic::Moduli block_moduli(int q, std::size_t L) {
    const std::uint64_t m = 2 * static_cast<std::uint64_t>(L) + 1;
    return {m, static_cast<std::uint64_t>(q) * m, 4 * static_cast<std::uint64_t>(L) - 1};
}

BlockSyndrome add(const BlockSyndrome& a, const BlockSyndrome& b, int q, std::size_t L) {
    const basic::Moduli m = block_moduli(q, L);
    BlockSyndrome out = zero_syndrome(q);
    for (std::size_t k = 0; k < out.counts.size(); ++k) out.counts[k] = (a.counts[k] + b.counts[k]) % 4;
    out.descent = mod_add(a.descent, b.descent, m.descent);
    out.inv = mod_add(a.inv, b.inv, 2);
    out.syn = mod_add(a.syn, b.syn, m.syn);
    out.loc = mod_add(a.loc, b.loc, m.loc);
    return out;
}

BlockSyndrome subtract(const BlockSyndrome& a, const BlockSyndrome& b, int q, std::size_t L) {
    const basic::Moduli m = block_moduli(q, L);
    BlockSyndrome out = zero_syndrome(q);
    for (std::size_t k = 0; k < out.counts.size(); ++k) out.counts[k] = (a.counts[k] + 4 - b.counts[k]) % 4;
    out.descent = mod_sub(a.descent, b.descent, m.descent);
    out.inv = mod_sub(a.inv, b.inv, 2);
    out.syn = mod_sub(a.syn, b.syn, m.syn);
    out.loc = mod_sub(a.loc, b.loc, m.loc);
    return out;
}

boost::multiprecision::cpp_int syndrome_space(int q, std::size_t L) {
    const basic::Moduli m = block_moduli(q, L);
    boost::multiprecision::cpp_int s = 1;
    for (int a = 0; a + 1 < q; ++a) s *= 4;
    return s * m.descent * 2 * m.syn * m.loc;
}

void validate(const ImprovedParams& p) {
    require_alphabet(p.q);
    if (p.q < 3) throw DomainError("the improved code needs q >= 3");
    if (p.n < 4) throw DomainError("the improved code needs n >= 4");
    if (p.delta < 4) throw DomainError("segment cap must be at least 4");
    if (p.L < window_bound(p.delta)) {
        throw DomainError("L=" + std::to_string(p.L) + " below the window bound " + std::to_string(window_bound(p.delta)));
    }
    if (p.r1 >= 2 * p.n || p.r2 >= 3) throw DomainError("marker syndromes out of range");
    require_syndrome(p.alpha, p.q, p.L, "alpha");
    require_syndrome(p.beta, p.q, p.L, "beta");
}

std::uint64_t marker_moment(const Word& x, std::uint64_t modulus) {
    if (modulus == 0) throw DomainError("modulus must be positive");
    const auto lens = marker::segment_lengths(x);
    std::uint64_t f = 0;
    for (std::size_t j = 0; j < lens.size(); ++j) f = (f + (j + 1) * lens[j]) % modulus;
    return f;
}

std::uint64_t marker_moment(const Word& x) { return marker_moment(x, 2 * x.size()); }

std::uint64_t marker_count(const Word& x) { return marker::segment_lengths(x).size() % 3; }

IntervalFamilies intervals(std::size_t n, std::size_t L) {
    if (n == 0 || L == 0) throw DomainError("intervals need n >= 1 and L >= 1");
    IntervalFamilies out;
    const std::size_t w = 2 * L + 1;
    if (n <= w) {
        out.first.push_back({1, n});
        return out;
    }
    const std::size_t t = n / w;
    const std::size_t rest = n - t * w;
    for (std::size_t i = 1; i <= t; ++i) out.first.push_back({1 + (i - 1) * w, i * w});
    for (std::size_t i = 1; i < t; ++i) out.second.push_back({1 + (i - 1) * w + L, i * w + L});
    if (rest == 0) return out;
    if (rest <= L) {
        out.second.push_back({(t - 1) * w + L + 1, n});
    } else {
        out.first.push_back({t * w + 1, n});
        out.second.push_back({(t - 1) * w + L + 1, t * w + L});
    }
    return out;
}

BlockSyndrome block_syndrome(const Word& z, std::size_t L) {
    if (z.empty() || z.size() > 2 * L + 1) throw DomainError("block length must lie in [1, 2L+1]");
    const basic::Moduli m = block_moduli(z.q(), L);
    BlockSyndrome s = zero_syndrome(z.q());
    const auto counts = symbol_counts(z);
    for (std::size_t a = 0; a < s.counts.size(); ++a) s.counts[a] = static_cast<std::uint32_t>(counts[a] % 4);
    s.descent = vt_syndrome(descent_bits(z.span())) % m.descent;
    s.inv = inversions(z) % 2;
    s.syn = vt_syndrome(z) % m.syn;
    s.loc = vt_syndrome(location_sequence(z)) % m.loc;
    return s;
}

BlockSyndrome g1_hat(const Word& x, std::size_t L) {
    if (!marker::ends_with_marker(x)) throw DomainError("word does not end with 0011");
    return family_sum(x, intervals(x.size(), L).first, L, SIZE_MAX);
}

BlockSyndrome g2_hat(const Word& x, std::size_t L) {
    if (!marker::ends_with_marker(x)) throw DomainError("word does not end with 0011");
    return family_sum(x, intervals(x.size(), L).second, L, SIZE_MAX);
}

ImprovedParams params_of(const Word& x, std::size_t delta, std::size_t L) {
    if (!marker::r_membership(x, delta)) throw DomainError("word is not in the marker-constrained set for this delta");
    ImprovedParams p;
    p.q = x.q();
    p.n = x.size();
    p.delta = delta;
    p.L = L;
    p.r1 = marker_moment(x);
    p.r2 = marker_count(x);
    p.alpha = g1_hat(x, L);
    p.beta = g2_hat(x, L);
    validate(p);
    return p;
}

ImprovedParams params_of(const Word& x, std::size_t delta) { return params_of(x, delta, window_bound(delta)); }

bool d1_membership(const Word& x, const ImprovedParams& p) {
    validate(p);
    if (x.size() != p.n || x.q() != p.q) throw DomainError("word does not match the code length or alphabet");
    return marker::r_membership(x, p.delta) && marker_moment(x) == p.r1 && marker_count(x) == p.r2;
}

bool d_membership(const Word& x, const ImprovedParams& p) {
    return d1_membership(x, p) && g1_hat(x, p.L) == p.alpha && g2_hat(x, p.L) == p.beta;
}

WindowResult locate_window(const Word& y, const ImprovedParams& p) {
    validate(p);
    if (y.q() != p.q) throw DomainError("alphabet of y does not match the code");
    if (y.size() == p.n) return ErrorFree{};
    if (y.size() + 1 != p.n) throw DomainError("received length must be n or n-1");
    if (!marker::ends_with_marker(y)) return MarkerDamaged{};

    const auto lens = marker::segment_lengths(y);
    const std::size_t ly = lens.size();
    const auto starts = segment_starts(lens);
    const std::uint64_t modulus = 2 * p.n;
    const std::uint64_t diff = mod_sub(p.r1, marker_moment(y, modulus), modulus);
    const auto delta = static_cast<std::int64_t>(p.delta);
    auto span = [&](std::size_t firstSeg, std::size_t lastSeg, int shift) {
        return Window{starts[firstSeg - 1], starts[lastSeg] - 1, shift};
    };

    switch ((marker_count(y) + 3 - p.r2) % 3) {
    case 0: {
        if (diff < 1 || diff > ly) throw DecodeFailure("segment index from f is out of range");
        return span(diff, diff, 0);
    }
    case 2: {
        // l_y = l_x - 1: a marker was destroyed; Phi(i') = sum_{j>i'} |z_j| + i'.
        if (diff == 0 || diff >= p.n) throw DecodeFailure("moment difference out of range for a merged segment");
        const auto target = static_cast<std::int64_t>(diff);
        std::int64_t suffix = 0;
        std::int64_t prev = 0;
        for (std::size_t i = ly; i >= 1; --i) {
            const std::int64_t phi = suffix + static_cast<std::int64_t>(i);
            if (i < ly && phi - prev < 3) throw InternalInconsistency("Phi step below 3 in the merged-segment walk");
            prev = phi;
            if (std::llabs(phi - target) <= delta) {
                const std::size_t back = 2 * p.delta / 3;
                return span(i > back ? i - back : 1, i, -1);
            }
            suffix += static_cast<std::int64_t>(lens[i - 1]);
        }
        throw DecodeFailure("no segment matches the moment difference");
    }
    default: {
        // l_y = l_x + 1: a marker was created; Phi(i') = -sum_{j>=i'+2} |z_j| + i'.
        const auto n = static_cast<std::int64_t>(p.n);
        std::int64_t a = static_cast<std::int64_t>(diff);
        if (4 * a > n - 16) a -= 2 * n;
        if (a < -(n - 6)) throw DecodeFailure("moment difference out of range for a split segment");
        if (ly < 2) throw DecodeFailure("a split segment needs at least two segments");
        std::int64_t suffix = 0; // sum_{j >= i+2}
        std::int64_t prev = 0;
        for (std::size_t i = ly - 1; i >= 1; --i) {
            const std::int64_t phi = -suffix + static_cast<std::int64_t>(i);
            if (i < ly - 1 && prev - phi < 5) throw InternalInconsistency("Phi step below 5 in the split-segment walk");
            prev = phi;
            if (std::llabs(phi - a) <= delta - 5) {
                const std::size_t back = 2 * p.delta / 5;
                return span(i > back ? i - back : 1, i + 1, 1);
            }
            suffix += static_cast<std::int64_t>(lens[i]);
        }
        throw DecodeFailure("no segment matches the moment difference");
    }
    }
}

BlockChoice choose_block(const IntervalFamilies& fam, const Window& w) {
    auto fits = [&](const Interval& iv) { return iv.first <= w.start && w.end + 1 <= iv.second; };
    for (std::size_t k = fam.first.size(); k-- > 0;) {
        if (fits(fam.first[k])) return {1, k, fam.first[k]};
    }
    for (std::size_t k = fam.second.size(); k-- > 0;) {
        if (fits(fam.second[k])) return {2, k, fam.second[k]};
    }
    throw DecodeFailure("no interval contains the window [" + std::to_string(w.start) + ", " + std::to_string(w.end) + "]");
}

Word repair_marker(const Word& y) {
    const int q = y.q();
    if (ends_with(y, {0, 0, 1})) return y + Word(q, {1});
    if (ends_with(y, {0, 0, 2})) return y.prefix(y.size() - 1) + Word(q, {1, 1});
    if (ends_with(y, {0, 1, 1}) && (y.size() == 3 || y.at(y.size() - 3) != 0)) {
        return y.prefix(y.size() - 3) + Word(q, {0, 0, 1, 1});
    }
    throw DecodeFailure("tail " + y.str() + " is not a damaged 0011");
}

Word decode_improved(const Word& y, const ImprovedParams& p) {
    const WindowResult where = locate_window(y, p);
    if (std::holds_alternative<ErrorFree>(where)) {
        if (!d_membership(y, p)) throw DecodeFailure("received word of full length is not a codeword");
        return y;
    }
    if (std::holds_alternative<MarkerDamaged>(where)) {
        Word x = repair_marker(y);
        if (!d_membership(x, p)) throw DecodeFailure("repaired word is not a codeword");
        return x;
    }
    const Window& w = std::get<Window>(where);
    const IntervalFamilies fam = intervals(p.n, p.L);
    const BlockChoice choice = choose_block(fam, w);
    const auto [a, b] = choice.interval;

    // Everything outside [a, b] is known: x_j = y_j before a, x_j = y_{j-1} after b.
    const Word left = y.prefix(a - 1);
    const Word right = y.suffix_from(b);
    const Word shadow = left + Word::zeros(p.q, b - a + 1) + right;
    const auto& members = choice.family == 1 ? fam.first : fam.second;
    const BlockSyndrome others = family_sum(shadow, members, p.L, choice.index);
    const BlockSyndrome target = subtract(choice.family == 1 ? p.alpha : p.beta, others, p.q, p.L);

    basic::BasicParams bp;
    bp.q = p.q;
    bp.n = b - a + 1;
    bp.s = target.counts;
    bp.t1 = target.descent;
    bp.t2 = target.inv;
    bp.d1 = target.syn;
    bp.d2 = target.loc;
    bp.moduli = block_moduli(p.q, p.L);
    const Word block = basic::decode_single_absorption(y.slice(a, b - 1), bp);
    Word x = left + block + right;
    if (!d_membership(x, p)) throw DecodeFailure("block decoding produced a non-codeword");
    return x;
}

} // namespace absorb::improved
