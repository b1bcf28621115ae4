#ifndef ABSORB_MULTI_HPP
#define ABSORB_MULTI_HPP

#include "absorb/improved.hpp"
#include "absorb/separating.hpp"
#include "absorb/word.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

namespace absorb::multi {

using Membership = std::function<bool(const Word&)>;

// Codewords u' != u of `code` whose t-absorption balls meet that of u.
std::vector<Word> neighbor_set(const Word& u, const std::vector<Word>& code, std::size_t t);
// Same set, scanning all q^n words through a membership predicate.
std::vector<Word> neighbor_set(const Word& u, const Membership& member, std::size_t t, std::uint64_t cap = 100000);
// Absorb t times, split t-1 times, split once more, keep members != u.
std::vector<Word> splitting_neighbor_set(const Word& u, const Membership& member, std::size_t t);

/// Compressed label: (sep(u) mod P, P).
struct Label {
    std::uint64_t residue = 0;
    std::uint64_t modulus = 1;
    friend bool operator==(const Label&, const Label&) = default;
    friend auto operator<=>(const Label&, const Label&) = default;
};

// Smallest P >= 1 with label != other (mod P) for every other label, P <= bound.
std::uint64_t separating_modulus(std::uint64_t label, const std::vector<std::uint64_t>& others, std::uint64_t bound);
Label compress_syndrome(const Word& u, const SeparatingFunction& sep, const std::vector<Word>& neighbors);

// Both numerals at `width` base-q digits each, residue first.
Word pack_label(const Label& l, int q, std::size_t width);
Label unpack_label(const Word& w, std::size_t width);
std::size_t label_width(int q, std::uint64_t pmax);

/// A single-absorption correcting base code together with the compressed
/// labels of all its codewords. Each label class is a t-absorption
/// correcting code.
class MultiCode {
public:
    MultiCode(std::vector<Word> base, Membership member, std::size_t t, SeparatingFunction sep);

    int q() const { return q_; }
    std::size_t n() const { return n_; }
    std::size_t t() const { return t_; }
    const SeparatingFunction& sep() const { return sep_; }
    const std::vector<Word>& base() const { return base_; }
    bool base_member(const Word& u) const { return member_(u); }

    const std::vector<Word>& neighbors(const Word& u) const;
    Label fbar(const Word& u) const;
    std::uint64_t pmax() const { return pmax_; }
    std::size_t width() const { return label_width(q_, pmax_); }

    // q^{2t-2} n^{2t-1} and q^{2t-2} n^{t-1}.
    std::uint64_t neighbor_bound() const;
    std::uint64_t candidate_bound() const;

    std::vector<Label> labels() const;
    std::vector<Word> codewords(const Label& a) const;
    bool e_membership(const Word& x, const Label& a) const;
    // Splits y t times, keeps base members, returns the one labelled a.
    Word decode(const Word& y, const Label& a) const;
    // Same answer by testing ball membership against each codeword labelled a.
    Word decode_by_search(const Word& y, const Label& a) const;

private:
    std::size_t index_of(const Word& u) const;

    int q_ = 3;
    std::size_t n_ = 0;
    std::size_t t_ = 2;
    std::vector<Word> base_;
    Membership member_;
    SeparatingFunction sep_;
    std::unordered_map<Word, std::size_t, WordHash> index_;
    std::vector<std::vector<Word>> neighbors_;
    std::vector<Label> labels_;
    std::uint64_t pmax_ = 1;
};

/// Code E(n; r, alpha, beta, a): the improved-code class `base` cut down to
/// the words whose compressed label is a.
struct MultiParams {
    improved::ImprovedParams base;
    std::size_t t = 2;
    std::shared_ptr<const SeparatingFunction> sep;
    std::uint64_t N = 0;
    Label a;
};

// All members of the class, found by scanning q^n words.
std::vector<Word> improved_class(const improved::ImprovedParams& p, std::uint64_t cap = 100000);
MultiCode make_multi_code(const improved::ImprovedParams& base, std::size_t t, const SeparatingFunction& sep);
MultiParams make_multi_params(const MultiCode& code, const improved::ImprovedParams& base, const Label& a);

bool e_membership(const Word& x, const MultiCode& code, const MultiParams& mp);
Word decode_t_absorptions(const Word& y, const MultiCode& code, const MultiParams& mp);

} // namespace absorb::multi

#endif
