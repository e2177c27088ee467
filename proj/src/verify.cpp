#include <connprob/verify.hpp>

#include <connprob/decomp.hpp>
#include <connprob/oracle.hpp>

namespace connprob {

namespace {

constexpr int kMaxProbe = 16;  // hard cap on probed indices regardless of budget

void push_check(VerifyReport& rep, const std::string& name, long index,
                const Integer& expected, const Integer& actual) {
    VerifyCheck c;
    c.name = name;
    c.index = index;
    c.expected = expected;
    c.actual = actual;
    c.ok = (expected == actual);
    rep.checks.push_back(std::move(c));
    if (!rep.checks.back().ok) rep.ok = false;
}

void push_rational_check(VerifyReport& rep, const std::string& name, long index,
                         const Rational& expected, const Integer& actual) {
    VerifyCheck c;
    c.name = name;
    c.index = index;
    c.actual = actual;
    c.ok = is_integer(expected) && expected.get_num() == actual;
    c.expected = is_integer(expected) ? expected.get_num() : Integer(-1);
    rep.checks.push_back(std::move(c));
    if (!rep.checks.back().ok) rep.ok = false;
}

void verify_multigraph(const ModelSpec& model, std::int64_t budget, VerifyReport& rep) {
    const long d = model.param;
    int n_max = 0;
    while (n_max < kMaxProbe &&
           int_pow(Integer(d + 1), static_cast<unsigned long>((n_max + 1) * n_max / 2)) <= budget)
        ++n_max;
    CountingSequence c = connected_counts(model, n_max);
    for (int n = 1; n <= n_max; ++n) {
        EnumResult e = count_connected_multigraphs(n, static_cast<int>(d), budget);
        push_check(rep, "ambient count", n, model.count(n), e.total);
        push_check(rep, "connected count", n, c.terms[static_cast<size_t>(n)], e.hits);
    }
    int k_max = 0;
    while (k_max < kMaxProbe &&
           int_pow(Integer(d + 1), static_cast<unsigned long>((k_max + 1) * k_max / 2)) *
                   int_pow(Integer(2), static_cast<unsigned long>(k_max + 1)) <=
               budget)
        ++k_max;
    if (k_max >= 1) {
        DerivedSequences der = derivative_coeffs(model, k_max);
        for (int k = 1; k <= k_max; ++k) {
            EnumResult e = count_irreducible_tournaments(k, static_cast<int>(d), budget);
            if (!der.d[static_cast<size_t>(k) - 1]) {
                push_rational_check(rep, "irreducible count", k,
                                    der.delta[static_cast<size_t>(k) - 1], e.hits);
            } else {
                push_check(rep, "irreducible count", k, *der.d[static_cast<size_t>(k) - 1],
                           e.hits);
            }
        }
    }
}

// Shared by origami/multilinear/constellation (ambient (n!)^e) and, through
// the (2m)!/m! lift, by ogem(D) (e = D on the compressed lattice).
void verify_tuples(const ModelSpec& model, long e, bool lifted, std::int64_t budget,
                   VerifyReport& rep) {
    int n_max = 0;
    while (n_max < kMaxProbe &&
           int_pow(factorial(n_max + 1), static_cast<unsigned long>(e)) <= budget)
        ++n_max;
    const int p = model.period;
    CountingSequence c = connected_counts(model, n_max * p);
    for (int n = 1; n <= n_max; ++n) {
        EnumResult en = count_transitive_tuples(n, static_cast<int>(e), budget);
        if (!lifted) {
            push_check(rep, "ambient count", n, model.count(n), en.total);
            push_check(rep, "connected count", n, c.terms[static_cast<size_t>(n)], en.hits);
        } else {
            // gluings are (2m)!/m!-to-one over transitive tuples
            const Rational lift = make_rational(factorial(2L * n), factorial(n));
            push_rational_check(rep, "ambient count (lift)", n,
                                Rational(model.count(2L * n)) / lift, en.total);
            push_rational_check(rep, "connected count (lift)", n,
                                Rational(c.terms[static_cast<size_t>(n) * 2]) / lift, en.hits);
        }
    }
    // indecomposable tuples: delta_k = count of (e-1)-tuples with no closed prefix
    int k_max = 0;
    while (k_max < kMaxProbe &&
           int_pow(factorial(k_max + 1), static_cast<unsigned long>(e - 1)) <= budget)
        ++k_max;
    if (k_max >= 1) {
        DerivedSequences der = derivative_coeffs(model, k_max);
        for (int k = 1; k <= k_max; ++k) {
            EnumResult en = (e == 2) ? count_indecomposable_permutations(k, budget)
                                     : count_indecomposable_tuples(k, static_cast<int>(e) - 1,
                                                                   budget);
            push_rational_check(rep, "indecomposable count", k,
                                der.delta[static_cast<size_t>(k) - 1], en.hits);
        }
    }
}

void verify_comb_map(const ModelSpec& model, std::int64_t budget, VerifyReport& rep) {
    int m_max = 0;
    while (m_max < kMaxProbe &&
           factorial(2 * (m_max + 1)) * odd_double_factorial(2 * m_max + 1) <= budget)
        ++m_max;
    CountingSequence c = connected_counts(model, 2 * m_max);
    for (int m = 1; m <= m_max; ++m) {
        EnumResult e = count_connected_maps(2 * m, budget);
        push_check(rep, "ambient count", 2 * m, model.count(2 * m), e.total);
        push_check(rep, "connected count", 2 * m, c.terms[static_cast<size_t>(m) * 2], e.hits);
    }
    int k_max = 0;
    while (k_max < kMaxProbe && odd_double_factorial(2 * k_max + 1) <= budget) ++k_max;
    if (k_max >= 1) {
        DerivedSequences der = derivative_coeffs(model, k_max);
        for (int k = 1; k <= k_max; ++k) {
            EnumResult e = count_indecomposable_matchings(k, budget);
            push_rational_check(rep, "indecomposable count", k,
                                der.delta[static_cast<size_t>(k) - 1], e.hits);
        }
    }
}

}  // namespace

VerifyReport verify_model(const ModelSpec& model, std::int64_t budget) {
    VerifyReport rep;
    rep.model_id = model.id;
    rep.ok = true;
    switch (model.oracle) {
        case OracleBinding::kMultigraph:
            rep.has_oracle = true;
            verify_multigraph(model, budget, rep);
            break;
        case OracleBinding::kPermutationTuples:
            rep.has_oracle = true;
            verify_tuples(model, model.param, /*lifted=*/false, budget, rep);
            break;
        case OracleBinding::kOgemLift:
            rep.has_oracle = true;
            verify_tuples(model, model.param, /*lifted=*/true, budget, rep);
            break;
        case OracleBinding::kCombMap:
            rep.has_oracle = true;
            verify_comb_map(model, budget, rep);
            break;
        case OracleBinding::kNone:
            rep.has_oracle = false;
            break;
    }
    return rep;
}

}  // namespace connprob
