#include <connprob/diagnostics.hpp>

#include <sstream>

namespace connprob {

std::string to_string(Verdict v) {
    return v == Verdict::kConsistent ? "CONSISTENT" : "INCONSISTENT";
}

GargantuanReport gargantuan_check_values(const std::vector<Rational>& q,
                                         const std::string& label,
                                         long window_lo, long window_hi, int r_max) {
    if (window_lo < 1 || window_hi <= window_lo || window_hi - window_lo < 4)
        throw DomainError("growth check: window must satisfy 1 <= lo < hi with hi - lo >= 4");
    if (r_max < 1) throw DomainError("growth check: r_max must be >= 1");
    if (static_cast<long>(q.size()) <= window_hi)
        throw InsufficientDataError("growth check: need " + std::to_string(window_hi + 1) +
                                    " normalized values, have " + std::to_string(q.size()));
    for (long m = 0; m <= window_hi; ++m)
        if (q[static_cast<size_t>(m)] <= 0)
            throw DomainError("growth check: normalized value at lattice index " +
                              std::to_string(m) + " is not positive");

    GargantuanReport rep;
    rep.label = label;
    rep.window_lo = window_lo;
    rep.window_hi = window_hi;
    rep.r_max = r_max;

    auto flag = [&rep](const std::string& what) { rep.violations.push_back(what); };

    // (i) q_{n-1}/q_n must strictly decrease across the window.
    for (long n = window_lo + 1; n <= window_hi; ++n)
        rep.back_ratio.push_back(q[static_cast<size_t>(n - 1)] / q[static_cast<size_t>(n)]);
    for (size_t i = 1; i < rep.back_ratio.size(); ++i) {
        if (rep.back_ratio[i] >= rep.back_ratio[i - 1]) {
            std::ostringstream os;
            os << "back ratio q(n-1)/q(n) fails to decrease at n = "
               << (window_lo + 1 + static_cast<long>(i));
            flag(os.str());
            break;
        }
    }

    // x2-growth rule shared by (ii) and (i'): values over [start, hi] indexed
    // from `start`; compare window top against window midpoint.
    auto growth_bound = [&](const std::vector<Rational>& vals, long start,
                            const std::string& what) {
        if (vals.size() < 2) return;
        const size_t mid = vals.size() / 2;
        const Rational& ref = vals[mid];
        for (size_t i = mid + 1; i < vals.size(); ++i) {
            if (vals[i] > ref * 2) {
                std::ostringstream os;
                os << what << " grows beyond x2 between n = " << (start + static_cast<long>(mid))
                   << " and n = " << (start + static_cast<long>(i));
                flag(os.str());
                return;
            }
        }
    };

    // (ii) tail sums S_r(n) = sum_{k=r}^{n-r} q_k q_{n-k} / q_{n-r}.
    for (int r = 1; r <= r_max; ++r) {
        std::vector<Rational> row;
        const long start = std::max(window_lo, 2L * r);
        for (long n = start; n <= window_hi; ++n) {
            Rational s = 0;
            for (long k = r; k <= n - r; ++k)
                s += q[static_cast<size_t>(k)] * q[static_cast<size_t>(n - k)];
            row.push_back(s / q[static_cast<size_t>(n - r)]);
        }
        growth_bound(row, start, "tail sum S_" + std::to_string(r));
        rep.tail_sum.push_back(std::move(row));
    }

    // (i') n * q_{n-1}/q_n should stay bounded (constant allowed).
    for (long n = window_lo + 1; n <= window_hi; ++n)
        rep.scaled_ratio.push_back(Rational(n) * q[static_cast<size_t>(n - 1)] /
                                   q[static_cast<size_t>(n)]);
    growth_bound(rep.scaled_ratio, window_lo + 1, "scaled ratio n*q(n-1)/q(n)");

    // (ii') pairwise products q_k q_{n-k} non-increasing for k < n/2 at n = hi.
    rep.products_monotone = true;
    {
        const long n = window_hi;
        for (long k = 1; k + 1 <= n - (k + 1); ++k) {
            const Rational x0 = q[static_cast<size_t>(k)] * q[static_cast<size_t>(n - k)];
            const Rational x1 =
                q[static_cast<size_t>(k + 1)] * q[static_cast<size_t>(n - k - 1)];
            if (x1 > x0) {
                rep.products_monotone = false;
                std::ostringstream os;
                os << "pairwise product q(k)q(n-k) increases at k = " << k + 1
                   << " for n = " << n;
                flag(os.str());
                break;
            }
        }
    }

    rep.verdict = rep.violations.empty() ? Verdict::kConsistent : Verdict::kInconsistent;
    return rep;
}

namespace {

std::vector<Rational> normalized_lattice_values(const CountingSequence& seq, long hi) {
    validate_sequence(seq, /*require_unit_head=*/false);
    const long p = seq.period;
    if (seq.max_index() < hi * p)
        throw InsufficientDataError("growth check: sequence '" + seq.label + "' has " +
                                    std::to_string(seq.terms.size()) + " terms, need " +
                                    std::to_string(hi * p + 1));
    std::vector<Rational> q;
    q.reserve(hi + 1);
    for (long m = 0; m <= hi; ++m)
        q.push_back(make_rational(seq.terms[static_cast<size_t>(m * p)], factorial(m * p)));
    return q;
}

}  // namespace

GargantuanReport gargantuan_check(const CountingSequence& seq,
                                  long window_lo, long window_hi, int r_max) {
    return gargantuan_check_values(normalized_lattice_values(seq, window_hi), seq.label,
                                   window_lo, window_hi, r_max);
}

GargantuanReport product_check(const CountingSequence& a, const CountingSequence& b,
                               long window_lo, long window_hi, int r_max) {
    if (a.period != b.period)
        throw DomainError("product check: periods differ (" + std::to_string(a.period) +
                          " vs " + std::to_string(b.period) + ")");
    std::vector<Rational> qa = normalized_lattice_values(a, window_hi);
    std::vector<Rational> qb = normalized_lattice_values(b, window_hi);
    for (size_t i = 0; i < qa.size(); ++i) qa[i] *= qb[i];
    return gargantuan_check_values(qa, a.label + " * " + b.label, window_lo, window_hi, r_max);
}

}  // namespace connprob
