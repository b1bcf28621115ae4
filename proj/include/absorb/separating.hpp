#ifndef ABSORB_SEPARATING_HPP
#define ABSORB_SEPARATING_HPP

#include "absorb/word.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace absorb {

/// Integer labelling of words that differs on every pair the contract names.
/// The shipped provider is a brute-force coloring of the deletion-substitution
/// conflict graph; any other provider (for example a systematic DS code's
/// redundancy read as an integer) plugs in through the evaluator constructor.
class SeparatingFunction {
public:
    using Evaluator = std::function<std::uint64_t(const Word&)>;

    static constexpr const char* kDsContract = "ds-ball-intersection";
    static constexpr const char* kInjectiveContract = "injective";

    SeparatingFunction(std::string contract, std::uint64_t rangeBound, Evaluator evaluator);
    // Label table indexed by word_index over all words of length n.
    static SeparatingFunction from_table(int q, std::size_t n, std::size_t t, std::vector<std::uint64_t> labels);

    std::uint64_t operator()(const Word& u) const { return evaluator_(u); }
    std::uint64_t range_bound() const noexcept { return rangeBound_; }
    const std::string& contract() const noexcept { return contract_; }

    // Table-backed instances only; zero/empty otherwise.
    int q() const noexcept { return q_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t t() const noexcept { return t_; }
    const std::vector<std::uint64_t>& table() const;
    std::uint64_t colors_used() const;

private:
    std::string contract_;
    std::uint64_t rangeBound_ = 1;
    Evaluator evaluator_;
    int q_ = 0;
    std::size_t n_ = 0;
    std::size_t t_ = 0;
    std::shared_ptr<const std::vector<std::uint64_t>> table_;
};

// Greedy coloring of {(u, u') : ds_ball(u, t) meets ds_ball(u', t)} over all
// q^n words. rangeBound is the color count rounded up to a power of q.
SeparatingFunction brute_force_separating_function(std::size_t n, int q, std::size_t t, std::uint64_t cap = 20000);

struct SeparationAudit {
    std::uint64_t balls = 0;       // ball members visited
    std::uint64_t violations = 0;  // repeated labels inside a shared ball image
    bool passed() const { return violations == 0; }
};

// Exhaustive P1 check of a table-backed instance: inside every DS ball image
// the labels of the words sharing it are pairwise distinct.
SeparationAudit audit_separation(const SeparatingFunction& sep);

} // namespace absorb

#endif
