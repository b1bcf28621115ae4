#ifndef ABSORB_E2_HPP
#define ABSORB_E2_HPP

#include "absorb/e1.hpp"
#include "absorb/multi.hpp"
#include "absorb/word.hpp"

#include <memory>
#include <unordered_map>
#include <vector>

namespace absorb::e2 {

/// Systematic t-absorption code on the words 0^t h, h of fixed length: each
/// info word gets the first tail, in lexicographic order, whose codeword ball
/// misses every ball chosen before it. The tail length is the smallest that
/// lets the greedy pass finish.
class TailCode {
public:
    TailCode(int q, std::size_t t, std::size_t hLen);

    std::size_t info_len() const { return t_ + hLen_; }
    std::size_t tail_len() const { return tailLen_; }
    std::size_t length() const { return info_len() + tailLen_; }

    Word tail(const Word& info) const;
    // Info word of the unique codeword whose t-ball contains z.
    Word decode_info(const Word& z) const;

private:
    int q_;
    std::size_t t_;
    std::size_t hLen_;
    std::size_t tailLen_ = 0;
    std::vector<Word> tails_; // indexed by word_index(h)
    std::unordered_map<Word, std::uint64_t, WordHash> owner_;
};

/// E2(x) = E1(x) 0^t 0^t h(x) Red(0^t h(x)), h the compressed label of
/// E1(x) 0^t within {E1(x') 0^t}.
class E2Code {
public:
    E2Code(const e1::E1Params& p, std::size_t t, std::uint64_t cap = 729);

    std::size_t t() const { return t_; }
    std::size_t message_len() const { return p1_.message_len(); }
    std::size_t first_len() const { return p1_.length() + t_; }
    std::size_t h_len() const { return 2 * inner_->width(); }
    std::size_t length() const { return first_len() + tail_->length(); }
    std::size_t redundancy() const { return length() - message_len(); }
    const multi::MultiCode& inner() const { return *inner_; }
    const TailCode& tail_code() const { return *tail_; }

    Word first_part(const Word& x) const;
    multi::Label h(const Word& x) const;
    Word encode(const Word& x) const;
    // Accepts a codeword or a word of its t-absorption ball.
    Word decode(const Word& y) const;

private:
    e1::E1Params p1_;
    std::size_t t_;
    std::unordered_map<Word, Word, WordHash> message_of_;
    std::unique_ptr<multi::MultiCode> inner_;
    std::unique_ptr<TailCode> tail_;
};

} // namespace absorb::e2

#endif
