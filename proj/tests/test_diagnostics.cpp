#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <connprob/diagnostics.hpp>
#include <connprob/models.hpp>

#include <vector>

using namespace connprob;

namespace {

CountingSequence constant_sequence(long max_index) {
    CountingSequence seq;
    seq.label = "constant";
    seq.period = 1;
    seq.terms.assign(static_cast<size_t>(max_index) + 1, Integer(1));
    return seq;
}

}  // namespace

TEST_CASE("every builtin model passes the growth check") {
    for (const ModelSpec& m : canonical_models()) {
        GargantuanReport rep = gargantuan_check(m.counts(24 * m.period), 5, 24, 3);
        CAPTURE(m.id);
        CHECK(rep.verdict == Verdict::kConsistent);
        CHECK(rep.violations.empty());
        CHECK(rep.products_monotone);
        CHECK(rep.back_ratio.size() == 19);
        CHECK(rep.tail_sum.size() == 3);
    }
}

TEST_CASE("raw factorial values are growth-consistent") {
    std::vector<Rational> q;
    for (long m = 0; m <= 20; ++m) q.emplace_back(factorial(m));
    GargantuanReport rep = gargantuan_check_values(q, "factorial", 5, 20, 3);
    CHECK(rep.verdict == Verdict::kConsistent);
}

TEST_CASE("the permutation egf sits exactly on the boundary and fails") {
    // a_n = n! normalizes to q_m = 1; the back ratio is constant, not
    // strictly decreasing.
    CountingSequence seq;
    seq.label = "permutation";
    seq.period = 1;
    for (long n = 0; n <= 24; ++n) seq.terms.push_back(factorial(n));
    GargantuanReport rep = gargantuan_check(seq, 5, 24, 3);
    CHECK(rep.verdict == Verdict::kInconsistent);
    REQUIRE(!rep.violations.empty());
    CHECK(rep.violations.front().find("back ratio") != std::string::npos);
}

TEST_CASE("a constant sequence is flagged on several monitors") {
    GargantuanReport rep = gargantuan_check(constant_sequence(24), 5, 24, 3);
    CHECK(rep.verdict == Verdict::kInconsistent);
    CHECK(rep.violations.size() >= 3);
}

TEST_CASE("a constant scaled ratio is allowed") {
    // ogem(D=2) normalizes to q_m = m!, so n * q_{n-1}/q_n = 1 exactly.
    GargantuanReport rep = gargantuan_check(builtin_model("ogem", {{"D", 2}}).counts(48),
                                            5, 24, 3);
    CHECK(rep.verdict == Verdict::kConsistent);
    for (const Rational& v : rep.scaled_ratio) CHECK(v == 1);
}

TEST_CASE("graph back ratios carry the exact values") {
    GargantuanReport rep = gargantuan_check(builtin_model("graph").counts(10), 5, 10, 2);
    // q_{n-1}/q_n = n / 2^(n-1)
    for (size_t i = 0; i < rep.back_ratio.size(); ++i) {
        long n = 6 + static_cast<long>(i);
        CHECK(rep.back_ratio[i] == make_rational(Integer(n), int_pow(Integer(2), n - 1)));
    }
}

TEST_CASE("products of consistent sequences stay consistent") {
    auto origami = builtin_model("origami").counts(24);
    CHECK(product_check(origami, origami, 5, 24, 3).verdict == Verdict::kConsistent);

    auto maps = builtin_model("comb_map").counts(48);
    auto ogem = builtin_model("ogem", {{"D", 2}}).counts(48);
    CHECK(product_check(maps, ogem, 5, 24, 3).verdict == Verdict::kConsistent);

    auto graph = builtin_model("graph").counts(24);
    CHECK_THROWS_AS(product_check(graph, maps, 5, 24, 3), DomainError);
}

TEST_CASE("window and data validation") {
    auto graph = builtin_model("graph").counts(10);
    CHECK_THROWS_AS(gargantuan_check(graph, 5, 8, 2), DomainError);       // hi-lo < 4
    CHECK_THROWS_AS(gargantuan_check(graph, 0, 10, 2), DomainError);      // lo < 1
    CHECK_THROWS_AS(gargantuan_check(graph, 5, 10, 0), DomainError);      // r_max < 1
    CHECK_THROWS_AS(gargantuan_check(graph, 5, 12, 2), InsufficientDataError);

    CountingSequence zeroed = constant_sequence(12);
    zeroed.terms[3] = 0;
    CHECK_THROWS_AS(gargantuan_check(zeroed, 5, 12, 2), DomainError);  // nonpositive value
}

TEST_CASE("verdict strings") {
    CHECK(to_string(Verdict::kConsistent) == "CONSISTENT");
    CHECK(to_string(Verdict::kInconsistent) == "INCONSISTENT");
}
