#pragma once

#include <connprob/decomp.hpp>
#include <connprob/models.hpp>

#include <optional>
#include <string>
#include <vector>

namespace connprob {

// One linear factor a*n + b in the lattice variable n.
struct LinearFactor {
    long a = 1;
    long b = 0;
};

// One correction term d_{pk} * C(pn, pk) * a_{p(n-k)} / a_{pn} of the
// connectivity-probability expansion, in structured form.
struct ExpansionTerm {
    int k = 0;           // lattice index; the z-lattice position is p*k
    Rational delta;      // [z^{pk}] (1 - 1/A)
    std::optional<Integer> d;  // (pk)! * delta when integral
    std::string formula; // human-readable closed form in n

    // RatioKind::kRationalInN models: term(n) = delta * prod(numer) / prod(denom)
    // with each factor linear in the lattice variable n. Empty otherwise.
    std::vector<LinearFactor> numer;
    std::vector<LinearFactor> denom;

    // Multigraph family: term(n) = d * C(n,k) * exp_base^(exp_shift - k*n).
    // exp_base = 0 when no such closed form applies (custom models).
    long exp_base = 0;
    long exp_shift = 0;
};

struct ExpansionTermList {
    ModelSpec model;
    int r = 0;  // number of terms (k = 1..r)
    std::vector<ExpansionTerm> terms;
};

// First r correction terms. Works for every model.
ExpansionTermList term_list(const ModelSpec& model, int r);

// 1 - sum of the terms at lattice index n (object size p*n), evaluated
// exactly from the ambient counts (independent of the factored forms).
// Pre: n > r (the truncated tail must sit inside the sequence).
Rational evaluate_at(const ExpansionTermList& list, long n);

// Exact P(object of size n is connected) = c_n / a_n. Raw size n.
// DomainError if a_n = 0 (off-lattice size).
Rational exact_probability(const ModelSpec& model, long n);

// Truncated expansion  P ~ 1 - sum_{j=1}^{r} e_j / n^j  in the lattice
// variable n (size = period * n).
struct InvNSeries {
    std::string model_id;
    int period = 1;
    int r = 0;
    std::string convention;      // which variable n is; fixed descriptive string
    std::vector<Rational> e;     // e[j-1] = coefficient of n^{-j}, j = 1..r

    Rational coefficient(int j) const { return e.at(j - 1); }
    // 1 - sum e_j / n^j
    Rational value_at(long n) const;
};

// 1/n re-expansion of the term list, coefficientwise exact.
// Only for RatioKind::kRationalInN models (DomainError pointing at term_list
// otherwise). Primary route: per-factor geometric expansion in x = 1/n.
InvNSeries inv_n_series(const ModelSpec& model, int r);

// Independent second route: expand numerator/denominator polynomials in n,
// reverse coefficients, divide truncated power series in x = 1/n.
// Tests require exact agreement with inv_n_series.
InvNSeries inv_n_series_by_division(const ModelSpec& model, int r);

struct LeadingTermReport {
    std::string model_id;
    RatioKind ratio_kind;
    // kRationalInN: smallest j with e_j != 0 and that coefficient, in the
    // variable named by `variable` ("lattice index (size/p)" or "size").
    int order = 0;
    Rational coefficient;
    std::string variable;
    std::string formula;  // e.g. "1/n", "1/n^2", "n * 2^(1 - n)"
};

LeadingTermReport leading_term_report(const ModelSpec& model);

}  // namespace connprob
