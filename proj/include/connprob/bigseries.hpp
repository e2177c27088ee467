#pragma once

#include <connprob/rational.hpp>

#include <vector>

namespace connprob {

// A labeled counting sequence a_0, a_1, ... with a declared period p:
// a_n = 0 whenever p does not divide n. Terms are exact integers.
struct CountingSequence {
    std::string label;
    int period = 1;
    std::vector<Integer> terms;  // terms[n] = a_n, n = 0..size()-1

    long max_index() const { return static_cast<long>(terms.size()) - 1; }
};

// Throws ValidationError unless period >= 1, terms nonempty, and off-lattice
// terms are zero. `require_unit_head` additionally demands a_0 = 1 (needed for
// any sequence used as the ambient class of a SET/SEQ decomposition).
void validate_sequence(const CountingSequence& seq, bool require_unit_head);

// Dense truncated power series with exact rational coefficients.
// coeff[n] holds the coefficient of z^n; order() = coeff.size()-1 is the
// truncation order. The same container serves exponential generating
// functions (coefficient a_n/n!) and plain compressed-lattice series.
struct Egf {
    std::vector<Rational> coeff;

    Egf() = default;
    explicit Egf(std::vector<Rational> c) : coeff(std::move(c)) {}

    static Egf zero(int order) { return Egf(std::vector<Rational>(order + 1, Rational(0))); }
    static Egf one(int order) {
        Egf f = zero(order);
        f.coeff[0] = 1;
        return f;
    }

    int order() const { return static_cast<int>(coeff.size()) - 1; }
    const Rational& operator[](int n) const { return coeff[n]; }
    Rational& operator[](int n) { return coeff[n]; }

    bool operator==(const Egf& other) const { return coeff == other.coeff; }
};

// a_n / n! for n = 0..order. Throws InsufficientDataError naming the required
// length when the sequence is too short.
Egf egf_from_counts(const CountingSequence& seq, int order);

// All binary operations truncate to min(order a, order b).
Egf add(const Egf& a, const Egf& b);
Egf sub(const Egf& a, const Egf& b);
Egf mul(const Egf& a, const Egf& b);
Egf scale(const Egf& a, const Rational& s);
Egf truncated(const Egf& a, int order);

// log(1 + u) for u with zero constant term (DomainError otherwise).
// Coefficient recurrence; primary implementation.
Egf log1p(const Egf& u);

// exp(u) for u with zero constant term (DomainError otherwise); the result
// carries constant term 1. Coefficient recurrence; primary implementation.
Egf exp(const Egf& u);

// 1/f for f with nonzero constant term (DomainError otherwise).
// Coefficient recurrence; primary implementation.
Egf reciprocal(const Egf& f);

// f(z^p); result order is p * f.order().
Egf substitute_power(const Egf& f, int p);

// Independent second implementations used as mutual oracles in tests.
// Newton iteration with order doubling:
//   reciprocal:  X <- X * (2 - f X)
//   log:         integrate f' * reciprocal_newton(f)
//   exp:         X <- X * (1 + u - log_newton(X))
Egf reciprocal_newton(const Egf& f);
Egf log1p_newton(const Egf& u);
Egf exp_newton(const Egf& u);

// Direct truncated power sums (third route, O(N^3); test sizes only):
//   log(1+u) = sum_{k>=1} (-1)^{k-1} u^k / k,   exp(u) = sum_k u^k / k!.
Egf log1p_by_powers(const Egf& u);
Egf exp_by_powers(const Egf& u);

}  // namespace connprob
