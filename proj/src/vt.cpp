#include "absorb/vt.hpp"

#include "absorb/errors.hpp"
#include "absorb/stats.hpp"

#include <string>

namespace absorb::vt {
namespace {

void require_binary(const Word& w) {
    if (w.q() != 2) throw DomainError("VT codes are binary; got q=" + std::to_string(w.q()));
}

std::size_t ceil_log2(std::uint64_t m) {
    std::size_t r = 0;
    while ((std::uint64_t{1} << r) < m) ++r;
    return r;
}

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

} // namespace

void validate(const VtParams& p) {
    if (p.a > p.n) throw DomainError("VT residue a must lie in [0, n]");
}

bool vt_membership(const Word& c, const VtParams& p) {
    require_binary(c);
    validate(p);
    if (c.size() != p.n) throw DomainError("codeword length " + std::to_string(c.size()) + " != n=" + std::to_string(p.n));
    return vt_syndrome(c) % (p.n + 1) == p.a;
}

std::optional<std::vector<Symbol>> reinsert_bit(std::span<const Symbol> y, std::uint64_t a, std::uint64_t modulus) {
    const std::uint64_t syn = vt_syndrome(y) % modulus;
    const std::uint64_t deficiency = (a % modulus + modulus - syn) % modulus;
    std::uint64_t ones = 0;
    for (Symbol b : y) ones += b;
    const std::uint64_t zeros = y.size() - ones;

    std::vector<Symbol> out;
    out.reserve(y.size() + 1);
    if (deficiency <= ones) {
        // A 0 was deleted; it had `deficiency` ones on its right.
        std::uint64_t right = ones;
        std::size_t p = 0;
        while (right > deficiency) right -= y[p++];
        out.assign(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(p));
        out.push_back(0);
        out.insert(out.end(), y.begin() + static_cast<std::ptrdiff_t>(p), y.end());
        return out;
    }
    const std::uint64_t left = deficiency - ones - 1;
    if (left > zeros) return std::nullopt;
    // A 1 was deleted; it had `left` zeros on its left.
    std::uint64_t seen = 0;
    std::size_t p = 0;
    while (seen < left) seen += y[p++] == 0 ? 1 : 0;
    out.assign(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(p));
    out.push_back(1);
    out.insert(out.end(), y.begin() + static_cast<std::ptrdiff_t>(p), y.end());
    return out;
}

Word vt_decode_deletion(const Word& y, const VtParams& p) {
    require_binary(y);
    validate(p);
    if (p.n == 0 || y.size() + 1 != p.n) {
        throw DomainError("received length " + std::to_string(y.size()) + " must equal n-1 for n=" + std::to_string(p.n));
    }
    auto out = reinsert_bit(y.span(), p.a, p.n + 1);
    if (!out) throw DecodeFailure("no VT codeword reaches " + y.str() + " by one deletion");
    return Word(2, std::move(*out));
}

Word absorption_decode_binary(const Word& y, const VtParams& p) { return vt_decode_deletion(y, p); }

std::size_t systematic_length(std::size_t k) {
    std::size_t n = 1;
    while (n - ceil_log2(n + 1) < k) ++n;
    return n;
}

Word vt_systematic_encode(const Word& u) {
    require_binary(u);
    const std::size_t n = systematic_length(u.size());
    std::vector<Symbol> c(n, 0);
    std::size_t next = 0;
    for (std::size_t pos = 1; pos <= n; ++pos) {
        if (!is_power_of_two(pos)) c[pos - 1] = u[next++];
    }
    const std::uint64_t modulus = n + 1;
    std::uint64_t need = (modulus - vt_syndrome(c) % modulus) % modulus;
    std::size_t top = 1;
    while (top * 2 <= n) top *= 2;
    for (std::size_t pos = top; pos >= 1; pos /= 2) {
        if (need >= pos) {
            c[pos - 1] = 1;
            need -= pos;
        }
    }
    if (need != 0) throw InternalInconsistency("systematic VT redundancy could not absorb the syndrome");
    return Word(2, std::move(c));
}

Word vt_systematic_decode(const Word& c) {
    require_binary(c);
    const std::size_t n = c.size();
    if (n == 0) throw DomainError("systematic VT codeword cannot be empty");
    const std::size_t k = n - ceil_log2(n + 1);
    if (systematic_length(k) != n) throw DomainError("length " + std::to_string(n) + " is not a systematic VT length");
    if (!vt_membership(c, {n, 0})) throw DecodeFailure("word is not in VT_0(" + std::to_string(n) + ")");
    std::vector<Symbol> u;
    u.reserve(k);
    for (std::size_t pos = 1; pos <= n; ++pos) {
        if (!is_power_of_two(pos)) u.push_back(c[pos - 1]);
    }
    return Word(2, std::move(u));
}

} // namespace absorb::vt
