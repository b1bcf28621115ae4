#include "absorb/separating.hpp"

#include "absorb/channel.hpp"
#include "absorb/errors.hpp"

#include <algorithm>
#include <bit>

namespace absorb {
namespace {

std::uint64_t round_up_to_power(std::uint64_t v, int q) {
    std::uint64_t p = 1;
    while (p < v) p *= static_cast<std::uint64_t>(q);
    return p;
}

std::uint64_t power(int q, std::size_t k) {
    std::uint64_t p = 1;
    for (std::size_t i = 0; i < k; ++i) p *= static_cast<std::uint64_t>(q);
    return p;
}

std::vector<std::vector<std::uint64_t>> all_ds_balls(int q, std::size_t n, std::size_t t, std::uint64_t total) {
    std::vector<std::vector<std::uint64_t>> balls(total);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
        balls[i] = ds_ball_indices(word_from_index(q, n, static_cast<std::uint64_t>(i)), t);
    }
    return balls;
}

} // namespace

SeparatingFunction::SeparatingFunction(std::string contract, std::uint64_t rangeBound, Evaluator evaluator)
    : contract_(std::move(contract)), rangeBound_(rangeBound), evaluator_(std::move(evaluator)) {
    if (rangeBound_ == 0) throw DomainError("range bound must be positive");
    if (!evaluator_) throw DomainError("separating function needs an evaluator");
}

SeparatingFunction SeparatingFunction::from_table(int q, std::size_t n, std::size_t t, std::vector<std::uint64_t> labels) {
    require_alphabet(q);
    if (labels.size() != power(q, n)) throw DomainError("label table must cover all q^n words");
    const std::uint64_t colors = labels.empty() ? 1 : *std::max_element(labels.begin(), labels.end()) + 1;
    auto table = std::make_shared<const std::vector<std::uint64_t>>(std::move(labels));
    SeparatingFunction sep(kDsContract, round_up_to_power(colors, q), [table, q, n](const Word& u) {
        if (u.q() != q || u.size() != n) throw DomainError("word is outside the separating function's domain");
        return (*table)[word_index(u)];
    });
    sep.q_ = q;
    sep.n_ = n;
    sep.t_ = t;
    sep.table_ = std::move(table);
    return sep;
}

const std::vector<std::uint64_t>& SeparatingFunction::table() const {
    static const std::vector<std::uint64_t> empty;
    return table_ ? *table_ : empty;
}

std::uint64_t SeparatingFunction::colors_used() const {
    const auto& t = table();
    return t.empty() ? 0 : *std::max_element(t.begin(), t.end()) + 1;
}

SeparatingFunction brute_force_separating_function(std::size_t n, int q, std::size_t t, std::uint64_t cap) {
    if (t == 0 || t >= n) throw DomainError("separating function needs 0 < t < n");
    const std::uint64_t total = word_space_size(q, n, cap);
    const std::uint64_t buckets = power(q, n - t);
    const auto balls = all_ds_balls(q, n, t, total);

    // used[z] marks the colors already given to a word whose ball contains z.
    const std::size_t stride = static_cast<std::size_t>((total + 63) / 64);
    std::vector<std::uint64_t> used(static_cast<std::size_t>(buckets) * stride, 0);
    std::vector<std::uint64_t> forbidden(stride);
    std::vector<std::uint64_t> labels(total);
    for (std::uint64_t u = 0; u < total; ++u) {
        std::fill(forbidden.begin(), forbidden.end(), 0);
        for (std::uint64_t z : balls[u]) {
            const std::uint64_t* row = &used[z * stride];
            for (std::size_t k = 0; k < stride; ++k) forbidden[k] |= row[k];
        }
        std::uint64_t color = 0;
        for (std::size_t k = 0; k < stride; ++k) {
            if (~forbidden[k] != 0) {
                color = 64 * k + static_cast<std::uint64_t>(std::countr_one(forbidden[k]));
                break;
            }
        }
        labels[u] = color;
        for (std::uint64_t z : balls[u]) used[z * stride + color / 64] |= std::uint64_t{1} << (color % 64);
    }
    return SeparatingFunction::from_table(q, n, t, std::move(labels));
}

SeparationAudit audit_separation(const SeparatingFunction& sep) {
    const auto& labels = sep.table();
    if (labels.empty()) throw DomainError("audit needs a table-backed separating function");
    const std::uint64_t total = labels.size();
    const auto balls = all_ds_balls(sep.q(), sep.n(), sep.t(), total);
    std::vector<std::vector<std::uint64_t>> members(static_cast<std::size_t>(power(sep.q(), sep.n() - sep.t())));
    SeparationAudit audit;
    for (std::uint64_t u = 0; u < total; ++u) {
        for (std::uint64_t z : balls[u]) members[z].push_back(labels[u]);
        audit.balls += balls[u].size();
        if (labels[u] >= sep.range_bound()) ++audit.violations;
    }
    for (auto& m : members) {
        std::sort(m.begin(), m.end());
        for (std::size_t k = 1; k < m.size(); ++k) {
            if (m[k] == m[k - 1]) ++audit.violations;
        }
    }
    return audit;
}

} // namespace absorb
