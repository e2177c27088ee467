// Integration gate: each criterion below must hold for the build to be
// considered correct. One PASS/FAIL line is printed per criterion and the
// exit status is the number of failures.
#include <connprob/decomp.hpp>
#include <connprob/diagnostics.hpp>
#include <connprob/expansion.hpp>
#include <connprob/models.hpp>
#include <connprob/oracle.hpp>
#include <connprob/verify.hpp>

#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace connprob;

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

Rational rat(long n, long d = 1) { return make_rational(n, d); }

Rational abs_diff(const Rational& a, const Rational& b) {
    Rational d = a - b;
    return d < 0 ? Rational(-d) : d;
}

// 1. The derivative sequence of simple graphs, cross-checked against
//    exhaustive irreducible-tournament enumeration.
void criterion_graph_derivative() {
    auto ds = derivative_coeffs(builtin_model("graph"), 7);
    const long expected[] = {1, 0, 2, 24, 544, 22320, 1677488};
    for (int k = 1; k <= 7; ++k) {
        require(ds.d[k - 1].has_value(), "d_" + std::to_string(k) + " not integral");
        require(*ds.d[k - 1] == expected[k - 1],
                "d_" + std::to_string(k) + " = " + ds.d[k - 1]->get_str());
    }
    for (int k = 1; k <= 5; ++k) {
        auto r = count_irreducible_tournaments(k, 1);
        require(r.hits == expected[k - 1],
                "tournament enumeration disagrees at k = " + std::to_string(k));
    }
}

// 2. The graph expansion terms carry the closed form
//    d_k * C(n,k) * 2^(k(k+1)/2 - kn), including the vanishing k = 2 term,
//    and evaluating the truncation reproduces that closed form exactly.
void criterion_graph_expansion() {
    ExpansionTermList list = term_list(builtin_model("graph"), 4);
    const long d[] = {1, 0, 2, 24};
    require(list.terms.size() == 4, "expected 4 terms");
    for (int k = 1; k <= 4; ++k) {
        const ExpansionTerm& t = list.terms[k - 1];
        require(t.d && *t.d == d[k - 1], "wrong d at k = " + std::to_string(k));
        require(t.exp_base == 2, "wrong base");
        require(t.exp_shift == k * (k + 1) / 2, "wrong exponent shift");
    }
    require(list.terms[1].delta == 0, "k = 2 term should vanish");
    for (long n : {8L, 12L, 20L}) {
        Rational closed = 1;
        for (int k = 1; k <= 4; ++k) {
            Rational term = Rational(d[k - 1]) * Rational(binomial(Integer(n), k));
            term /= Rational(int_pow(Integer(2), k * n - k * (k + 1) / 2));
            closed -= term;
        }
        require(evaluate_at(list, n) == closed,
                "evaluation mismatch at n = " + std::to_string(n));
    }
}

// 3. The origami derivative integers are the indecomposable permutation
//    counts, confirmed by exhaustive enumeration through k = 7.
void criterion_origami_derivative() {
    auto ds = derivative_coeffs(builtin_model("origami"), 7);
    const long ip[] = {1, 1, 3, 13, 71, 461, 3447};
    for (int k = 1; k <= 7; ++k) {
        require(ds.delta[k - 1] == Rational(ip[k - 1]),
                "delta_" + std::to_string(k) + " wrong");
        require(count_indecomposable_permutations(k).hits == ip[k - 1],
                "permutation enumeration disagrees at k = " + std::to_string(k));
    }
}

// 4. The 1/n expansions of the four face models, coefficientwise exact.
void criterion_face_series() {
    auto check = [](const char* id, int r, const std::vector<Rational>& want) {
        auto s = inv_n_series(builtin_model(id), r);
        require(s.e == want, std::string(id) + " series mismatch");
    };
    check("triangulation", 3, {rat(5, 36), rat(695, 2592), rat(216305, 279936)});
    check("quadrangulation", 3, {rat(3, 16), rat(183, 512), rat(8313, 8192)});
    check("quad_sts", 4, {rat(1, 4), rat(15, 32), rat(167, 128), rat(11845, 2048)});
    check("gem3", 5, {rat(0), rat(1, 8), rat(3, 16), rat(49, 128), rat(145, 128)});
}

// 5. Leading corrections: combinatorial maps lose connectivity at rate 1/n in
//    raw size units; ogem(D) at rate n^-(D-1) on the lattice, coefficient 1.
void criterion_leading_terms() {
    auto maps = leading_term_report(builtin_model("comb_map"));
    require(maps.order == 1 && maps.coefficient == 1 && maps.variable == "size",
            "comb_map leading term is not 1/size");
    require(inv_n_series(builtin_model("comb_map"), 1).coefficient(1) == rat(1, 2),
            "comb_map lattice coefficient is not 1/2");
    for (long D : {2L, 3L, 4L}) {
        auto rep = leading_term_report(builtin_model("ogem", {{"D", D}}));
        require(rep.order == D - 1 && rep.coefficient == 1,
                "ogem(D=" + std::to_string(D) + ") leading term wrong");
    }
}

// 6. Every oracle-bound builtin passes enumeration verification, and the
//    partition inclusion-exclusion reproduces the reciprocal-series route.
void criterion_verification() {
    for (const ModelSpec& m : canonical_models()) {
        if (m.oracle != OracleBinding::kNone) {
            VerifyReport rep = verify_model(m, 600'000);
            require(rep.has_oracle && !rep.checks.empty(), m.id + ": no checks ran");
            for (const auto& c : rep.checks)
                require(c.ok, m.id + ": " + c.name + " at " + std::to_string(c.index) +
                                  " expected " + c.expected.get_str() + " got " +
                                  c.actual.get_str());
        }
        auto ds = derivative_coeffs(m, 10);
        for (int k = 1; k <= 10; ++k)
            require(derivative_by_partitions(m, k) ==
                        ds.delta[k - 1] * Rational(factorial(static_cast<long>(k) * m.period)),
                    m.id + ": partition route disagrees at k = " + std::to_string(k));
    }
}

// 7. Exact inversions: exp(log A) = A and A * (1 - D) = 1 through order 12.
void criterion_round_trips() {
    const int N = 12;
    for (const ModelSpec& m : canonical_models()) {
        Egf a = egf_from_counts(m.counts(N), N);
        Egf u = a;
        u[0] = 0;
        Egf back = exp(log1p(u));
        back[0] = 0;
        require(back == u, m.id + ": exp(log) round trip failed");

        DerivedSequences ds = derivative_coeffs(m, N / m.period);
        Egf one_minus_d = Egf::one(N);
        for (int k = 1; k <= ds.order(); ++k) {
            long pos = static_cast<long>(k) * m.period;
            if (pos <= N) one_minus_d[pos] = -ds.delta[k - 1];
        }
        require(mul(a, one_minus_d) == Egf::one(N), m.id + ": A * (1 - D) != 1");
    }
}

// 8. Doubling n shrinks the truncation error |P_exact - series_r| by at least
//    2^(r+1), within 25% slack: 4 * 2^(r+1) * err(2n) <= 5 * err(n).
void criterion_error_decay() {
    for (const char* id : {"quad_sts", "quadrangulation"}) {
        ModelSpec m = builtin_model(id);
        for (int r = 1; r <= 3; ++r) {
            auto s = inv_n_series(m, r);
            auto err = [&](long n) {
                return abs_diff(exact_probability(m, m.period * n), s.value_at(n));
            };
            Rational e16 = err(16), e32 = err(32), e64 = err(64);
            require(e64 > 0, std::string(id) + ": error vanished unexpectedly");
            const Rational rate = Rational(4 * (1L << (r + 1)));
            require(rate * e32 <= Rational(5) * e16,
                    std::string(id) + ": decay too slow at r = " + std::to_string(r) +
                        ", n = 16 -> 32");
            require(rate * e64 <= Rational(5) * e32,
                    std::string(id) + ": decay too slow at r = " + std::to_string(r) +
                        ", n = 32 -> 64");
        }
    }
}

// 9. The growth diagnostics accept every builtin and reject a constant
//    sequence.
void criterion_diagnostics() {
    for (const ModelSpec& m : canonical_models()) {
        auto rep = gargantuan_check(m.counts(24 * m.period), 5, 24, 3);
        require(rep.verdict == Verdict::kConsistent, m.id + ": flagged inconsistent");
    }
    CountingSequence ones;
    ones.label = "constant";
    ones.period = 1;
    ones.terms.assign(25, Integer(1));
    require(gargantuan_check(ones, 5, 24, 3).verdict == Verdict::kInconsistent,
            "constant sequence not flagged");
}

}  // namespace

int main() {
    struct Criterion {
        std::string name;
        std::function<void()> check;
    };
    const std::vector<Criterion> criteria = {
        {"graph derivative sequence matches tournament enumeration",
         criterion_graph_derivative},
        {"graph expansion terms carry the closed exponential form",
         criterion_graph_expansion},
        {"origami derivative integers are the indecomposable permutation counts",
         criterion_origami_derivative},
        {"face-model 1/n expansions match the frozen coefficients", criterion_face_series},
        {"leading corrections: comb_map 1/size, ogem(D) n^-(D-1)", criterion_leading_terms},
        {"oracle verification and both derivative routes agree", criterion_verification},
        {"set/log and seq/reciprocal decompositions invert exactly", criterion_round_trips},
        {"truncation error decays at rate 2^(r+1) under n doubling", criterion_error_decay},
        {"growth diagnostics accept builtins, reject constant sequences",
         criterion_diagnostics},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        try {
            criteria[i].check();
        } catch (const std::exception& e) {
            detail = e.what();
            ++failures;
        }
        std::cout << (detail.empty() ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": "
                  << criteria[i].name;
        if (!detail.empty()) std::cout << " [" << detail << "]";
        std::cout << "\n";
    }
    std::cout << criteria.size() << " criteria, " << failures << " failed\n";
    return failures;
}
