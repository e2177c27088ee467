#pragma once

#include <connprob/bigseries.hpp>
#include <connprob/models.hpp>

#include <functional>
#include <optional>
#include <vector>

namespace connprob {

// Counts of connected objects c_1..c_order (c_0 = 0), computed on the
// compressed lattice: with q_m = a_{pm}/(pm)! and A~(y) = sum q_m y^m,
// c_{pm} = (pm)! * [y^m] log A~, and c_n = 0 off-lattice.
CountingSequence connected_counts(const ModelSpec& model, int order);

// The SEQ-decomposition data of a model. With D = 1 - 1/A (so A = 1/(1-D)):
//   delta[k-1] = [z^{pk}] D          (exact rational, lattice index k)
//   d[k-1]     = (pk)! * delta[k-1]  (present when that value is an integer)
struct DerivedSequences {
    std::string model_id;
    int period = 1;
    // True when the d_k are established counts of irreducible combinatorial
    // objects; false = the numbers are computed but no interpretation claimed.
    bool interpretation_claimed = false;
    std::vector<Rational> delta;           // k = 1..order
    std::vector<std::optional<Integer>> d; // k = 1..order

    int order() const { return static_cast<int>(delta.size()); }
};

// delta/d up to lattice index `order` via the reciprocal-series route
// (primary implementation).
DerivedSequences derivative_coeffs(const ModelSpec& model, int order);

// Second, independent route to d_{pk}: the partition inclusion-exclusion
//   d_k = sum over multiplicity vectors (p_1..p_k), sum i*p_i = k, of
//         (-1)^(sum p_i - 1) * k! * prod_i (c_i / i!)^{p_i} / p_i!
// applied on the compressed lattice with c^_i = i! * [y^i] log A~.
// Returns (pk)! * delta_k as an exact rational.
Rational derivative_by_partitions(const ModelSpec& model, int k);

// Enumerate all multiplicity vectors (m[1..k], sum i*m[i] = k) in
// lexicographic order of the vector (m[1], m[2], ..., m[k]); fn receives the
// vector with m[i] at index i-1.
void for_each_multiplicity_vector(int k, const std::function<void(const std::vector<int>&)>& fn);

// Diagnostic for the truncated-convolution identity: with v = log(1+u) and
// w = 1/(1+u), the residual v_n - sum_{k=0}^{r} w_k u_{n-k} should shrink
// relative to u_{n-r} as n grows.
struct BenderReport {
    int r_max = 0;
    long window_lo = 0, window_hi = 0;
    // ratios[r][i] = |residual_{r, window_lo+i}| / u_{window_lo+i-r}, r = 0..r_max
    std::vector<std::vector<Rational>> ratios;
    bool pass = false;
};

// Pre: u.order() >= window_hi, u[0] = 0, window_lo > r_max.
// pass = every row is non-increasing over the window with final < first
// (a row that is identically zero passes).
BenderReport bender_compose_check(const Egf& u, int r_max, long window_lo, long window_hi);

}  // namespace connprob
