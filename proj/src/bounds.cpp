#include "absorb/bounds.hpp"

#include "absorb/errors.hpp"
#include "absorb/stats.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace absorb::bounds {
namespace {

cpp_int ipow(int base, std::size_t e) {
    cpp_int p = 1;
    for (std::size_t i = 0; i < e; ++i) p *= base;
    return p;
}

cpp_int binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    cpp_int r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

bool zero_free(const Word& x) {
    return std::none_of(x.symbols().begin(), x.symbols().end(), [](Symbol s) { return s == 0; });
}

} // namespace

ClosedFormBound closed_form_bound(int q, std::size_t n) {
    require_alphabet(q);
    if (n < 12 || n < static_cast<std::size_t>(q)) throw DomainError("the bound needs n >= 12 and n >= q");
    const cpp_int num = 8 * ipow(q, n - 1);
    const cpp_int den = cpp_int(q - 1) * (n - 4);
    const cpp_int frac = (num + den - 1) / den;
    ClosedFormBound b;
    b.a = ipow(q - 1, n - 1) + 1 + frac;
    b.cmax = b.a + ipow(q - 1, n);
    return b;
}

std::vector<Word> zero_deletion_set(const Word& x) {
    std::vector<Word> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        // One representative per run of zeros.
        if (x[i] != 0 || (i > 0 && x[i - 1] == 0)) continue;
        std::vector<Symbol> s(x.symbols());
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
        out.emplace_back(x.q(), std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

cpp_int zero_run_class_count(std::size_t n, int q, std::size_t k) {
    require_alphabet(q);
    if (n < 2) throw DomainError("n must be at least 2");
    if (k < 1 || k > n / 2) throw DomainError("k must lie in [1, floor(n/2)]");
    const auto m = static_cast<long long>(n) - 2;
    const auto kk = static_cast<long long>(k);
    return binom(m, 2 * kk) * ipow(q - 1, k + 1) + 2 * binom(m, 2 * kk - 1) * ipow(q - 1, k) +
           binom(m, 2 * kk - 2) * ipow(q - 1, k - 1);
}

cpp_int zero_run_class_count_exact(std::size_t n, int q, std::size_t k) {
    require_alphabet(q);
    if (n < 2) throw DomainError("n must be at least 2");
    if (k < 1 || k > n / 2) throw DomainError("k must lie in [1, floor(n/2)]");
    const auto m = static_cast<long long>(n) - 1;
    const auto kk = static_cast<long long>(k);
    cpp_int total = 0;
    // j nonzero symbols in k+1 gaps (inner gaps nonempty), m-j zeros in k runs.
    for (long long j = 0; j + kk <= m; ++j) total += binom(m - j - 1, kk - 1) * binom(j + 1, kk) * ipow(q - 1, static_cast<std::size_t>(j));
    return total;
}

namespace {

template <class Count>
cpp_rational weight_sum(int q, std::size_t n, Count count) {
    require_alphabet(q);
    if (n < 2) throw DomainError("n must be at least 2");
    cpp_rational sum = cpp_rational(ipow(q - 1, n - 1));
    for (std::size_t k = 1; k <= n / 2; ++k) sum += cpp_rational(count(n, q, k), cpp_int(k));
    return sum;
}

} // namespace

cpp_rational fractional_transversal_value(int q, std::size_t n) { return weight_sum(q, n, zero_run_class_count_exact); }

cpp_rational displayed_transversal_value(int q, std::size_t n) { return weight_sum(q, n, zero_run_class_count); }

cpp_rational direct_weight_sum(int q, std::size_t n, std::uint64_t cap) {
    if (n < 2) throw DomainError("n must be at least 2");
    const std::uint64_t total = word_space_size(q, n - 1, cap);
    cpp_rational sum = 0;
    for (std::uint64_t i = 0; i < total; ++i) {
        const std::size_t r0 = zero_run_count(word_from_index(q, n - 1, i));
        sum += r0 == 0 ? cpp_rational(1) : cpp_rational(1, static_cast<long long>(r0));
    }
    return sum;
}

std::uint64_t brute_force_optimum(int q, std::size_t n, std::uint64_t cap) {
    if (n < 1) throw DomainError("n must be positive");
    const std::uint64_t total = word_space_size(q, n, cap);
    const std::uint64_t vertices = word_space_size(q, n - 1, cap);
    const std::size_t words = static_cast<std::size_t>((vertices + 63) / 64);
    using Mask = std::vector<std::uint64_t>;

    std::vector<Mask> edges;
    for (std::uint64_t i = 0; i < total; ++i) {
        const Word x = word_from_index(q, n, i);
        if (zero_free(x)) continue;
        Mask m(words, 0);
        for (const Word& y : zero_deletion_set(x)) {
            const std::uint64_t v = word_index(y);
            m[v / 64] |= std::uint64_t{1} << (v % 64);
        }
        edges.push_back(std::move(m));
    }
    auto size_of = [](const Mask& m) {
        std::size_t s = 0;
        for (auto w : m) s += static_cast<std::size_t>(__builtin_popcountll(w));
        return s;
    };
    auto disjoint = [&](const Mask& a, const Mask& b) {
        for (std::size_t k = 0; k < words; ++k) {
            if (a[k] & b[k]) return false;
        }
        return true;
    };
    // Equal hyperedges always collide, so one copy of each is enough. Small
    // ones first: they block the fewest others.
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::stable_sort(edges.begin(), edges.end(), [&](const Mask& a, const Mask& b) { return size_of(a) < size_of(b); });

    std::uint64_t best = 0;
    Mask used(words, 0);
    std::function<void(std::size_t, std::uint64_t, std::size_t)> search = [&](std::size_t from, std::uint64_t chosen,
                                                                               std::size_t freeVertices) {
        best = std::max(best, chosen);
        // Each further edge needs at least one free vertex, and at least
        // as many as the smallest remaining edge.
        std::uint64_t compatible = 0;
        std::size_t minSize = SIZE_MAX;
        for (std::size_t e = from; e < edges.size(); ++e) {
            if (disjoint(edges[e], used)) {
                ++compatible;
                minSize = std::min(minSize, size_of(edges[e]));
            }
        }
        if (compatible == 0) return;
        const std::uint64_t room = std::min<std::uint64_t>(compatible, freeVertices / minSize);
        if (chosen + room <= best) return;
        for (std::size_t e = from; e < edges.size(); ++e) {
            if (!disjoint(edges[e], used)) continue;
            for (std::size_t k = 0; k < words; ++k) used[k] |= edges[e][k];
            search(e + 1, chosen + 1, freeVertices - size_of(edges[e]));
            for (std::size_t k = 0; k < words; ++k) used[k] &= ~edges[e][k];
            if (chosen + 1 + (edges.size() - e - 1) <= best) return;
        }
    };
    search(0, 0, static_cast<std::size_t>(vertices));
    return best;
}

BoundReport bound_report(int q, std::size_t n, bool bruteForce, std::uint64_t cap) {
    BoundReport r;
    r.q = q;
    r.n = n;
    if (n >= 12 && n >= static_cast<std::size_t>(q)) r.formula = closed_form_bound(q, n);
    r.transversal = fractional_transversal_value(q, n);
    if (bruteForce) r.bruteForce = brute_force_optimum(q, n, cap);
    return r;
}

} // namespace absorb::bounds
