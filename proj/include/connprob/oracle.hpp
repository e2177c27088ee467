#pragma once

#include <connprob/rational.hpp>

#include <cstdint>
#include <vector>

namespace connprob {

// Disjoint-set forest with union by size and path halving; the single
// connectivity primitive shared by every enumerator.
class UnionFind {
  public:
    explicit UnionFind(int n) { reset(n); }

    void reset(int n);
    int find(int x);
    // Returns true if the two elements were in different components.
    bool unite(int a, int b);
    int components() const { return components_; }

  private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int components_ = 0;
};

// Result of one exhaustive enumeration. `total` is the number of states
// visited, `hits` the number satisfying the property (connected/irreducible/
// transitive/indecomposable depending on the enumerator).
struct EnumResult {
    long n = 0;       // size parameter the enumeration ran at
    Integer total;
    Integer hits;
};

// Every enumerator below walks its full state space deterministically and
// throws BudgetError when the state count would exceed `budget`.

// Multigraphs on n labeled vertices, every pair carrying 0..d edges.
// States: (d+1)^C(n,2). hits = connected ones (n = 0 yields no hit: the
// empty graph has no component).
EnumResult count_connected_multigraphs(int n, int d, std::int64_t budget = 100'000'000);

// Tournaments on k labeled vertices with d arcs per pair, each arc oriented
// independently; state s_ij in 0..d = number of arcs directed i -> j (i < j).
// Irreducible = no proper nonempty subset A with every arc between A and its
// complement directed from A. States: (d+1)^C(k,2), times 2^k subset checks.
EnumResult count_irreducible_tournaments(int k, int d, std::int64_t budget = 100'000'000);

// Permutations of [k] with no proper prefix {1..j} mapped onto itself.
EnumResult count_indecomposable_permutations(int k, std::int64_t budget = 100'000'000);

// d-tuples of permutations of [k] such that no proper prefix {1..j} is
// mapped onto itself by every component. States: (k!)^d.
EnumResult count_indecomposable_tuples(int k, int d, std::int64_t budget = 100'000'000);

// Perfect matchings of [2k] such that no proper prefix {1..2j} is a union of
// pairs. States: (2k-1)!!.
EnumResult count_indecomposable_matchings(int k, std::int64_t budget = 10'000'000);

// d-tuples of permutations of [n] whose induced action is transitive
// (single orbit under the union of the cycles). States: (n!)^d.
EnumResult count_transitive_tuples(int n, int d, std::int64_t budget = 100'000'000);

// Pairs (sigma, alpha) with sigma a permutation of the darts 1..n and alpha a
// perfect matching of the darts; hits = pairs whose orbit structure is
// connected. n must be even (DomainError otherwise). States: n!(n-1)!!.
EnumResult count_connected_maps(int n_darts, std::int64_t budget = 100'000'000);

// d-tuples of linear orders on [k] with no common proper prefix set.
// States: (k!)^d.
EnumResult count_irreducible_order_tuples(int k, int d, std::int64_t budget = 100'000'000);

// Pairs of linear orders (w1, w2) on [n] with w2 = alpha o w1 for some
// fixed-point-free involution alpha, and no common proper prefix set.
// n must be even. States: n!(n-1)!!.
EnumResult count_irreducible_linear_matchings(int n, std::int64_t budget = 100'000'000);

}  // namespace connprob
