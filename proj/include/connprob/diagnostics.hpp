#pragma once

#include <connprob/bigseries.hpp>

#include <string>
#include <vector>

namespace connprob {

enum class Verdict { kConsistent, kInconsistent };

std::string to_string(Verdict v);

// Monitored quantities for the growth check of a normalized sequence q_m
// (q_m = a_{pm}/(pm)! on the lattice). All values exact rationals.
struct GargantuanReport {
    std::string label;
    long window_lo = 0, window_hi = 0;
    int r_max = 0;

    // (i) back ratios q_{n-1}/q_n for n in [lo+1, hi]; must strictly decrease.
    std::vector<Rational> back_ratio;
    // (ii) tail sums S_r(n) = sum_{k=r}^{n-r} q_k q_{n-k} / q_{n-r}, r = 1..r_max,
    // n in [max(lo, 2r), hi]; must not grow by more than x2 from window
    // midpoint to window top.
    std::vector<std::vector<Rational>> tail_sum;
    // (i') boundedness heuristic n * q_{n-1}/q_n, same x2 rule (constant ok).
    std::vector<Rational> scaled_ratio;
    // (ii') pairwise products x_k = q_k q_{n-k} at n = window_hi must be
    // non-increasing for k < n/2.
    bool products_monotone = false;

    std::vector<std::string> violations;  // one line per tripped bound
    Verdict verdict = Verdict::kInconsistent;
};

// Core check on already-normalized lattice values q_0..q_N (q[m] = q_m).
// Pre: window 1 <= lo < hi <= N, hi - lo >= 4, all q_m > 0 on [0, hi].
GargantuanReport gargantuan_check_values(const std::vector<Rational>& q,
                                         const std::string& label,
                                         long window_lo, long window_hi, int r_max);

// Normalizes seq to q_m = a_{pm}/(pm)! first, then runs the core check.
// Window bounds are lattice indices.
GargantuanReport gargantuan_check(const CountingSequence& seq,
                                  long window_lo, long window_hi, int r_max);

// Pointwise product of the two normalized sequences, checked without
// re-normalizing (closure-under-product diagnostic). Periods must match.
GargantuanReport product_check(const CountingSequence& a, const CountingSequence& b,
                               long window_lo, long window_hi, int r_max);

}  // namespace connprob
