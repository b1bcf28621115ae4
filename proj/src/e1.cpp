#include "absorb/e1.hpp"

#include "absorb/errors.hpp"

#include <string>

namespace absorb::e1 {
namespace {

using boost::multiprecision::cpp_int;
using improved::BlockSyndrome;

// Mixed-radix digit moduli in packing order: f, g, alpha fields, beta fields.
std::vector<std::uint64_t> radices(const E1Params& p) {
    const basic::Moduli m = improved::block_moduli(p.q(), p.L);
    std::vector<std::uint64_t> r{2 * static_cast<std::uint64_t>(p.enc_len()), 3};
    for (int pass = 0; pass < 2; ++pass) {
        for (int a = 0; a + 1 < p.q(); ++a) r.push_back(4);
        r.insert(r.end(), {m.descent, 2, m.syn, m.loc});
    }
    return r;
}

std::vector<std::uint64_t> digits_of(const improved::ImprovedParams& ip) {
    std::vector<std::uint64_t> d{ip.r1, ip.r2};
    for (const BlockSyndrome* s : {&ip.alpha, &ip.beta}) {
        d.insert(d.end(), s->counts.begin(), s->counts.end());
        d.insert(d.end(), {s->descent, s->inv, s->syn, s->loc});
    }
    return d;
}

std::size_t ceil_log(int q, const cpp_int& m) {
    std::size_t k = 0;
    cpp_int power = 1;
    while (power < m) {
        power *= q;
        ++k;
    }
    return k;
}

} // namespace

std::size_t E1Params::tail_len() const {
    cpp_int space = 1;
    for (auto r : radices(*this)) space *= r;
    return ceil_log(q(), space);
}

E1Params make_params(int q, std::size_t n) { return make_params(marker::minimal_params(q, n)); }

E1Params make_params(const marker::MarkerParams& mp) {
    marker::validate(mp);
    return {mp, improved::window_bound(mp.delta)};
}

Word pack_syndromes(const improved::ImprovedParams& ip, const E1Params& p) {
    const auto r = radices(p);
    const auto d = digits_of(ip);
    cpp_int value = 0;
    for (std::size_t k = 0; k < r.size(); ++k) {
        if (d[k] >= r[k]) throw DomainError("syndrome digit out of range");
        value = value * r[k] + d[k];
    }
    std::vector<Symbol> out(p.tail_len(), 0);
    for (std::size_t k = out.size(); k-- > 0;) {
        out[k] = static_cast<Symbol>(static_cast<unsigned>(value % p.q()));
        value /= p.q();
    }
    return Word(p.q(), std::move(out));
}

improved::ImprovedParams unpack_syndromes(const Word& tail, const E1Params& p) {
    if (tail.size() != p.tail_len()) throw DomainError("syndrome tail has the wrong length");
    cpp_int value = 0;
    for (Symbol s : tail.symbols()) value = value * p.q() + s;
    const auto r = radices(p);
    std::vector<std::uint64_t> d(r.size());
    for (std::size_t k = r.size(); k-- > 0;) {
        d[k] = static_cast<std::uint64_t>(value % r[k]);
        value /= r[k];
    }
    if (value != 0) throw DecodeFailure("syndrome tail is outside the image of Q");

    improved::ImprovedParams ip;
    ip.q = p.q();
    ip.n = p.enc_len();
    ip.delta = p.marker.delta;
    ip.L = p.L;
    ip.r1 = d[0];
    ip.r2 = d[1];
    std::size_t k = 2;
    for (BlockSyndrome* s : {&ip.alpha, &ip.beta}) {
        s->counts.clear();
        for (int a = 0; a + 1 < p.q(); ++a) s->counts.push_back(static_cast<std::uint32_t>(d[k++]));
        s->descent = d[k++];
        s->inv = d[k++];
        s->syn = d[k++];
        s->loc = d[k++];
    }
    improved::validate(ip);
    return ip;
}

Word e1_encode(const Word& x, const E1Params& p) {
    const Word enc = marker::encode_to_marker_set(x, p.marker);
    const improved::ImprovedParams ip = improved::params_of(enc, p.marker.delta, p.L);
    return enc + Word(p.q(), {0, 1, 0}) + pack_syndromes(ip, p);
}

Word e1_decode(const Word& c, const E1Params& p) {
    const std::size_t N = p.length();
    const std::size_t N0 = p.enc_len();
    if (c.q() != p.q()) throw DomainError("alphabet of the received word does not match the code");
    if (c.size() != N && c.size() + 1 != N) throw DomainError("received length must be N or N-1");
    if (c.size() == N) {
        if (c.slice(N0 + 1, N0 + 3) != Word(p.q(), {0, 1, 0})) throw DecodeFailure("separator 010 is missing");
        return marker::decode_from_marker_set(c.prefix(N0), p.marker);
    }
    // One absorption: it cannot touch both c[1, N0+2] and c[N0+3, N].
    if (c.at(N0 + 1) == 0 || c.at(N0) != 0) return marker::decode_from_marker_set(c.prefix(N0), p.marker);
    const improved::ImprovedParams ip = unpack_syndromes(c.slice(N0 + 3, N - 1), p);
    const Word enc = improved::decode_improved(c.prefix(N0 - 1), ip);
    return marker::decode_from_marker_set(enc, p.marker);
}

} // namespace absorb::e1
