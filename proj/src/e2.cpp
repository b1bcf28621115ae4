#include "absorb/e2.hpp"

#include "absorb/channel.hpp"
#include "absorb/errors.hpp"

#include <algorithm>
#include <string>

namespace absorb::e2 {

TailCode::TailCode(int q, std::size_t t, std::size_t hLen) : q_(q), t_(t), hLen_(hLen) {
    require_alphabet(q);
    const std::uint64_t infos = word_space_size(q, hLen, 1u << 16);
    for (std::size_t len = 1;; ++len) {
        const std::uint64_t choices = word_space_size(q, len, 1u << 20);
        tails_.clear();
        owner_.clear();
        bool complete = true;
        for (std::uint64_t h = 0; h < infos && complete; ++h) {
            const Word info = Word::zeros(q, t) + word_from_index(q, hLen, h);
            complete = false;
            for (std::uint64_t r = 0; r < choices; ++r) {
                const Word tail = word_from_index(q, len, r);
                const auto ball = absorption_ball(info + tail, t);
                if (std::any_of(ball.begin(), ball.end(), [&](const Word& z) { return owner_.count(z) != 0; })) continue;
                for (const Word& z : ball) owner_.emplace(z, h);
                tails_.push_back(tail);
                complete = true;
                break;
            }
        }
        if (complete) {
            tailLen_ = len;
            return;
        }
    }
}

Word TailCode::tail(const Word& info) const {
    if (info.q() != q_ || info.size() != info_len() || info.prefix(t_) != Word::zeros(q_, t_)) {
        throw DomainError("info word must be 0^t followed by " + std::to_string(hLen_) + " symbols");
    }
    return tails_[word_index(info.suffix_from(t_ + 1))];
}

Word TailCode::decode_info(const Word& z) const {
    if (z.q() != q_ || z.size() + t_ != length()) throw DomainError("received tail has the wrong length");
    const auto it = owner_.find(z);
    if (it == owner_.end()) throw DecodeFailure("tail " + z.str() + " is in no codeword ball");
    return Word::zeros(q_, t_) + word_from_index(q_, hLen_, it->second);
}

E2Code::E2Code(const e1::E1Params& p, std::size_t t, std::uint64_t cap) : p1_(p), t_(t) {
    if (t < 1) throw DomainError("E2 needs t >= 1");
    const std::uint64_t total = word_space_size(p.q(), p.message_len(), cap);
    std::vector<Word> firsts;
    auto rank = std::make_shared<std::unordered_map<Word, std::uint64_t, WordHash>>();
    for (std::uint64_t i = 0; i < total; ++i) {
        const Word x = word_from_index(p.q(), p.message_len(), i);
        Word c = first_part(x);
        rank->emplace(c, i);
        message_of_.emplace(c, x);
        firsts.push_back(std::move(c));
    }
    // Distinct labels on E separate every confusable pair.
    SeparatingFunction sep(SeparatingFunction::kInjectiveContract, total, [rank](const Word& u) {
        const auto it = rank->find(u);
        if (it == rank->end()) throw DomainError("word is outside E");
        return it->second;
    });
    multi::Membership member = [rank](const Word& u) { return rank->count(u) != 0; };
    inner_ = std::make_unique<multi::MultiCode>(std::move(firsts), std::move(member), t, std::move(sep));
    tail_ = std::make_unique<TailCode>(p.q(), t, h_len());
}

Word E2Code::first_part(const Word& x) const { return e1::e1_encode(x, p1_) + Word::zeros(p1_.q(), t_); }

multi::Label E2Code::h(const Word& x) const { return inner_->fbar(first_part(x)); }

Word E2Code::encode(const Word& x) const {
    const Word c1 = first_part(x);
    const Word info = Word::zeros(p1_.q(), t_) + multi::pack_label(inner_->fbar(c1), p1_.q(), inner_->width());
    return c1 + info + tail_->tail(info);
}

Word E2Code::decode(const Word& y) const {
    if (y.q() != p1_.q()) throw DomainError("alphabet of the received word does not match the code");
    const std::size_t n1 = first_len();
    const std::size_t n2 = length();
    if (y.size() == n2) {
        const auto it = message_of_.find(y.prefix(n1));
        if (it == message_of_.end() || encode(it->second) != y) throw DecodeFailure("word is not a codeword");
        return it->second;
    }
    if (y.size() + t_ != n2) throw DomainError("received length must be N or N - t");
    // The t absorptions leave y[1, n1-t] in the ball of the first part and
    // y[n1+1, n2-t] in the ball of the second.
    const Word info = tail_->decode_info(y.slice(n1 + 1, n2 - t_));
    const multi::Label a = multi::unpack_label(info.suffix_from(t_ + 1), inner_->width());
    const Word c1 = inner_->decode_by_search(y.prefix(n1 - t_), a);
    return message_of_.at(c1);
}

} // namespace absorb::e2
