#ifndef ABSORB_BOUNDS_HPP
#define ABSORB_BOUNDS_HPP

#include "absorb/word.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace absorb::bounds {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

struct ClosedFormBound {
    cpp_int a;    // ceil((q-1)^{n-1} + 1 + 8 q^{n-1} / ((q-1)(n-4)))
    cpp_int cmax; // a + (q-1)^n
};

// Needs q >= 2, n >= 12, n >= q.
ClosedFormBound closed_form_bound(int q, std::size_t n);

// Words obtained from x by deleting one 0.
std::vector<Word> zero_deletion_set(const Word& x);

// The displayed three-term count of words of length n-1 with k runs of 0,
// 1 <= k <= floor(n/2). It treats every nonzero run as one repeated symbol,
// so it is exact only for q = 2.
cpp_int zero_run_class_count(std::size_t n, int q, std::size_t k);
// Exact count for every q: sum over the number j of nonzero symbols of
// C(n-j-2, k-1) C(j+1, k) (q-1)^j.
cpp_int zero_run_class_count_exact(std::size_t n, int q, std::size_t k);

// (q-1)^{n-1} + sum_k count(k) / k with the exact counts: the weight w
// summed over Sigma_q^{n-1}.
cpp_rational fractional_transversal_value(int q, std::size_t n);
// The same expansion with the displayed counts.
cpp_rational displayed_transversal_value(int q, std::size_t n);
// Same sum taken word by word.
cpp_rational direct_weight_sum(int q, std::size_t n, std::uint64_t cap = 1u << 22);

// Largest set of words of Sigma_q^n \ B_n with pairwise disjoint zero-deletion
// sets, by branch and bound.
std::uint64_t brute_force_optimum(int q, std::size_t n, std::uint64_t cap = 64);

struct BoundReport {
    int q = 2;
    std::size_t n = 0;
    std::optional<ClosedFormBound> formula;
    cpp_rational transversal;
    std::optional<std::uint64_t> bruteForce;
};

BoundReport bound_report(int q, std::size_t n, bool bruteForce, std::uint64_t cap = 64);

} // namespace absorb::bounds

#endif
