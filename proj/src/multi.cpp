#include "absorb/multi.hpp"

#include "absorb/channel.hpp"
#include "absorb/errors.hpp"
#include "absorb/marker.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace absorb::multi {
namespace {

bool sorted_intersect(const std::vector<Word>& a, const std::vector<Word>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            return true;
        }
    }
    return false;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t e) {
    std::uint64_t p = 1;
    for (std::size_t i = 0; i < e; ++i) p *= base;
    return p;
}

} // namespace

std::vector<Word> neighbor_set(const Word& u, const std::vector<Word>& code, std::size_t t) {
    const auto ball = absorption_ball(u, t);
    std::vector<Word> out;
    for (const Word& v : code) {
        if (v != u && sorted_intersect(ball, absorption_ball(v, t))) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Word> neighbor_set(const Word& u, const Membership& member, std::size_t t, std::uint64_t cap) {
    const std::uint64_t total = word_space_size(u.q(), u.size(), cap);
    std::vector<Word> code;
    for (std::uint64_t i = 0; i < total; ++i) {
        Word v = word_from_index(u.q(), u.size(), i);
        if (member(v)) code.push_back(std::move(v));
    }
    return neighbor_set(u, code, t);
}

std::vector<Word> splitting_neighbor_set(const Word& u, const Membership& member, std::size_t t) {
    std::set<Word> out;
    for (const Word& shrunk : absorption_ball(u, t)) {
        for (const Word& v : split_closure(shrunk, t)) {
            if (v != u && member(v)) out.insert(v);
        }
    }
    return {out.begin(), out.end()};
}

std::uint64_t separating_modulus(std::uint64_t label, const std::vector<std::uint64_t>& others, std::uint64_t bound) {
    for (std::uint64_t P = 1; P <= bound; ++P) {
        const std::uint64_t r = label % P;
        if (std::none_of(others.begin(), others.end(), [&](std::uint64_t o) { return o % P == r; })) return P;
    }
    throw InternalInconsistency("no separating modulus up to " + std::to_string(bound));
}

Label compress_syndrome(const Word& u, const SeparatingFunction& sep, const std::vector<Word>& neighbors) {
    const std::uint64_t label = sep(u);
    std::vector<std::uint64_t> others;
    others.reserve(neighbors.size());
    for (const Word& v : neighbors) others.push_back(sep(v));
    const std::uint64_t P = separating_modulus(label, others, sep.range_bound());
    return {label % P, P};
}

std::size_t label_width(int q, std::uint64_t pmax) {
    std::size_t k = 0;
    std::uint64_t p = 1;
    while (p <= pmax) {
        p *= static_cast<std::uint64_t>(q);
        ++k;
    }
    return k;
}

Word pack_label(const Label& l, int q, std::size_t width) {
    const std::uint64_t limit = checked_pow(static_cast<std::uint64_t>(q), width);
    if (l.modulus == 0 || l.residue >= l.modulus || l.modulus >= limit) throw DomainError("label does not fit the width");
    const Word r = word_from_index(q, width, l.residue);
    const Word m = word_from_index(q, width, l.modulus);
    return r + m;
}

Label unpack_label(const Word& w, std::size_t width) {
    if (w.size() != 2 * width) throw DomainError("packed label has the wrong length");
    Label l{word_index(w.prefix(width)), word_index(w.suffix_from(width + 1))};
    if (l.modulus == 0 || l.residue >= l.modulus) throw DecodeFailure("packed label is not a valid (residue, modulus) pair");
    return l;
}

MultiCode::MultiCode(std::vector<Word> base, Membership member, std::size_t t, SeparatingFunction sep)
    : t_(t), base_(std::move(base)), member_(std::move(member)), sep_(std::move(sep)) {
    if (base_.empty()) throw DomainError("base code is empty");
    q_ = base_.front().q();
    n_ = base_.front().size();
    if (t_ == 0 || t_ >= n_) throw DomainError("need 0 < t < n");
    std::sort(base_.begin(), base_.end());
    base_.erase(std::unique(base_.begin(), base_.end()), base_.end());
    for (std::size_t k = 0; k < base_.size(); ++k) {
        if (base_[k].q() != q_ || base_[k].size() != n_) throw DomainError("base codewords differ in length or alphabet");
        index_.emplace(base_[k], k);
    }

    const auto count = static_cast<std::int64_t>(base_.size());
    std::vector<std::vector<Word>> balls(base_.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t k = 0; k < count; ++k) balls[k] = absorption_ball(base_[k], t_);

    neighbors_.assign(base_.size(), {});
    labels_.assign(base_.size(), {});
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t k = 0; k < count; ++k) {
        for (std::int64_t j = 0; j < count; ++j) {
            if (j != k && sorted_intersect(balls[k], balls[j])) neighbors_[k].push_back(base_[j]);
        }
        labels_[k] = compress_syndrome(base_[k], sep_, neighbors_[k]);
    }
    for (const Label& l : labels_) pmax_ = std::max(pmax_, l.modulus);
}

std::size_t MultiCode::index_of(const Word& u) const {
    const auto it = index_.find(u);
    if (it == index_.end()) throw DomainError("word " + u.str() + " is not in the base code");
    return it->second;
}

const std::vector<Word>& MultiCode::neighbors(const Word& u) const { return neighbors_[index_of(u)]; }

Label MultiCode::fbar(const Word& u) const { return labels_[index_of(u)]; }

std::uint64_t MultiCode::neighbor_bound() const {
    return checked_pow(static_cast<std::uint64_t>(q_), 2 * t_ - 2) * checked_pow(n_, 2 * t_ - 1);
}

std::uint64_t MultiCode::candidate_bound() const {
    return checked_pow(static_cast<std::uint64_t>(q_), 2 * t_ - 2) * checked_pow(n_, t_ - 1);
}

std::vector<Label> MultiCode::labels() const {
    std::vector<Label> out(labels_);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Word> MultiCode::codewords(const Label& a) const {
    std::vector<Word> out;
    for (std::size_t k = 0; k < base_.size(); ++k) {
        if (labels_[k] == a) out.push_back(base_[k]);
    }
    return out;
}

bool MultiCode::e_membership(const Word& x, const Label& a) const {
    if (x.q() != q_ || x.size() != n_ || !member_(x)) return false;
    const auto it = index_.find(x);
    if (it == index_.end()) throw InternalInconsistency("base member " + x.str() + " missing from the codebook");
    return labels_[it->second] == a;
}

Word MultiCode::decode(const Word& y, const Label& a) const {
    if (y.q() != q_) throw DomainError("alphabet of the received word does not match the code");
    if (y.size() + t_ != n_) throw DomainError("received length must be n - t");
    std::vector<Word> inBase;
    for (const Word& c : split_closure(y, t_)) {
        if (member_(c)) inBase.push_back(c);
    }
    if (inBase.size() > candidate_bound()) {
        throw InternalInconsistency(std::to_string(inBase.size()) + " base candidates exceed the bound " +
                                    std::to_string(candidate_bound()));
    }
    std::vector<Word> hits;
    for (const Word& c : inBase) {
        if (e_membership(c, a)) hits.push_back(c);
    }
    if (hits.size() != 1) {
        throw DecodeFailure(std::to_string(hits.size()) + " codewords with the target label explain " + y.str());
    }
    return hits.front();
}

Word MultiCode::decode_by_search(const Word& y, const Label& a) const {
    if (y.q() != q_) throw DomainError("alphabet of the received word does not match the code");
    if (y.size() + t_ != n_) throw DomainError("received length must be n - t");
    std::vector<Word> hits;
    for (std::size_t k = 0; k < base_.size(); ++k) {
        if (labels_[k] == a && in_absorption_ball(y, base_[k], t_)) hits.push_back(base_[k]);
    }
    if (hits.size() != 1) {
        throw DecodeFailure(std::to_string(hits.size()) + " codewords with the target label explain " + y.str());
    }
    return hits.front();
}

std::vector<Word> improved_class(const improved::ImprovedParams& p, std::uint64_t cap) {
    improved::validate(p);
    const std::uint64_t total = word_space_size(p.q, p.n, cap);
    std::vector<Word> out;
    for (std::uint64_t i = 0; i < total; ++i) {
        Word x = word_from_index(p.q, p.n, i);
        if (marker::ends_with_marker(x) && improved::d_membership(x, p)) out.push_back(std::move(x));
    }
    return out;
}

MultiCode make_multi_code(const improved::ImprovedParams& base, std::size_t t, const SeparatingFunction& sep) {
    Membership member = [base](const Word& x) {
        return x.q() == base.q && x.size() == base.n && improved::d_membership(x, base);
    };
    return MultiCode(improved_class(base), std::move(member), t, sep);
}

MultiParams make_multi_params(const MultiCode& code, const improved::ImprovedParams& base, const Label& a) {
    return {base, code.t(), std::make_shared<const SeparatingFunction>(code.sep()), code.neighbor_bound(), a};
}

bool e_membership(const Word& x, const MultiCode& code, const MultiParams& mp) {
    if (x.q() != mp.base.q || x.size() != mp.base.n) return false;
    return improved::d_membership(x, mp.base) && code.e_membership(x, mp.a);
}

Word decode_t_absorptions(const Word& y, const MultiCode& code, const MultiParams& mp) {
    if (code.t() != mp.t || code.n() != mp.base.n) throw DomainError("code and parameters disagree");
    return code.decode(y, mp.a);
}

} // namespace absorb::multi
