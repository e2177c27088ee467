#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <connprob/oracle.hpp>

using namespace connprob;

TEST_CASE("union-find merges components") {
    UnionFind uf(5);
    CHECK(uf.components() == 5);
    CHECK(uf.unite(0, 1));
    CHECK(uf.unite(2, 3));
    CHECK_FALSE(uf.unite(1, 0));
    CHECK(uf.components() == 3);
    CHECK(uf.find(0) == uf.find(1));
    CHECK(uf.find(0) != uf.find(2));
    uf.unite(1, 2);
    uf.unite(3, 4);
    CHECK(uf.components() == 1);
    uf.reset(3);
    CHECK(uf.components() == 3);
}

TEST_CASE("connected multigraphs") {
    CHECK(count_connected_multigraphs(0, 1).total == 1);
    CHECK(count_connected_multigraphs(0, 1).hits == 0);
    CHECK(count_connected_multigraphs(1, 1).hits == 1);
    CHECK(count_connected_multigraphs(2, 1).hits == 1);

    auto g3 = count_connected_multigraphs(3, 1);
    CHECK(g3.total == 8);
    CHECK(g3.hits == 4);
    auto g4 = count_connected_multigraphs(4, 1);
    CHECK(g4.total == 64);
    CHECK(g4.hits == 38);

    auto o3 = count_connected_multigraphs(3, 2);
    CHECK(o3.total == 27);
    CHECK(o3.hits == 20);
    auto d3 = count_connected_multigraphs(3, 3);
    CHECK(d3.total == 64);
    CHECK(d3.hits == 54);
}

TEST_CASE("irreducible tournaments") {
    const long simple[] = {1, 0, 2, 24, 544};
    for (int k = 1; k <= 5; ++k) {
        auto r = count_irreducible_tournaments(k, 1);
        CHECK(r.total == int_pow(Integer(2), k * (k - 1) / 2));
        CHECK(r.hits == simple[k - 1]);
    }
    const long two[] = {1, 1, 15, 543};
    for (int k = 1; k <= 4; ++k) CHECK(count_irreducible_tournaments(k, 2).hits == two[k - 1]);
    const long three[] = {1, 2, 46};
    for (int k = 1; k <= 3; ++k) CHECK(count_irreducible_tournaments(k, 3).hits == three[k - 1]);
}

TEST_CASE("indecomposable permutations") {
    const long ip[] = {1, 1, 3, 13, 71, 461, 3447};
    for (int k = 1; k <= 7; ++k) {
        auto r = count_indecomposable_permutations(k);
        CHECK(r.total == factorial(k));
        CHECK(r.hits == ip[k - 1]);
    }
}

TEST_CASE("indecomposable permutation tuples") {
    const long imp2[] = {1, 3, 29, 499, 13101};
    for (int k = 1; k <= 5; ++k) {
        auto r = count_indecomposable_tuples(k, 2);
        CHECK(r.total == factorial(k) * factorial(k));
        CHECK(r.hits == imp2[k - 1]);
    }
    // one-component tuples reduce to plain permutations
    for (int k = 1; k <= 6; ++k)
        CHECK(count_indecomposable_tuples(k, 1).hits ==
              count_indecomposable_permutations(k).hits);
    const long imp3[] = {1, 7, 201};
    for (int k = 1; k <= 3; ++k) CHECK(count_indecomposable_tuples(k, 3).hits == imp3[k - 1]);
}

TEST_CASE("indecomposable matchings") {
    const long im[] = {1, 2, 10, 74, 706};
    for (int k = 1; k <= 5; ++k) {
        auto r = count_indecomposable_matchings(k);
        CHECK(r.total == odd_double_factorial(2 * k - 1));
        CHECK(r.hits == im[k - 1]);
    }
}

TEST_CASE("transitive permutation tuples") {
    // single permutation: transitive = one n-cycle, (n-1)! of them
    for (int n = 1; n <= 5; ++n)
        CHECK(count_transitive_tuples(n, 1).hits == factorial(n - 1));
    const long two[] = {1, 3, 26, 426};
    for (int n = 1; n <= 4; ++n) {
        auto r = count_transitive_tuples(n, 2);
        CHECK(r.total == factorial(n) * factorial(n));
        CHECK(r.hits == two[n - 1]);
    }
    const long three[] = {1, 7, 194};
    for (int n = 1; n <= 3; ++n) CHECK(count_transitive_tuples(n, 3).hits == three[n - 1]);
}

TEST_CASE("connected maps on labeled darts") {
    auto m2 = count_connected_maps(2);
    CHECK(m2.total == 2);
    CHECK(m2.hits == 2);
    auto m4 = count_connected_maps(4);
    CHECK(m4.total == 72);
    CHECK(m4.hits == 60);
    auto m6 = count_connected_maps(6);
    CHECK(m6.total == 10800);
    CHECK(m6.hits == 8880);
    CHECK_THROWS_AS(count_connected_maps(3), DomainError);
}

TEST_CASE("relabeling lifts connect the reduced and labeled counts") {
    // irreducible order pairs vs indecomposable permutations: il_k = k! * ip_k
    const long ip[] = {1, 1, 3, 13, 71};
    for (int k = 1; k <= 5; ++k)
        CHECK(count_irreducible_order_tuples(k, 2).hits == factorial(k) * ip[k - 1]);
    // triples: il_k(3) = k! * (indecomposable pairs)
    const long imp2[] = {1, 3, 29};
    for (int k = 1; k <= 3; ++k)
        CHECK(count_irreducible_order_tuples(k, 3).hits == factorial(k) * imp2[k - 1]);

    // irreducible linear matchings vs indecomposable matchings: n! * im_{n/2}
    const long im[] = {1, 2, 10};
    for (int n = 2; n <= 6; n += 2) {
        auto r = count_irreducible_linear_matchings(n);
        CHECK(r.total == factorial(n) * odd_double_factorial(n - 1));
        CHECK(r.hits == factorial(n) * im[n / 2 - 1]);
    }
}

TEST_CASE("enumerators respect the state budget") {
    CHECK_THROWS_WITH_AS(count_connected_multigraphs(6, 1, 1000),
                         doctest::Contains("exceeds budget"), BudgetError);
    CHECK_THROWS_AS(count_irreducible_tournaments(5, 1, 100), BudgetError);
    CHECK_THROWS_AS(count_indecomposable_matchings(6, 100), BudgetError);
    CHECK_THROWS_AS(count_transitive_tuples(4, 2, 100), BudgetError);
    CHECK_THROWS_AS(count_irreducible_order_tuples(31, 2), BudgetError);
    CHECK_NOTHROW(count_connected_multigraphs(4, 1, 64));
}

TEST_CASE("enumeration is deterministic") {
    auto a = count_irreducible_tournaments(4, 2);
    auto b = count_irreducible_tournaments(4, 2);
    CHECK(a.hits == b.hits);
    CHECK(a.total == b.total);
}
