#include <connprob/oracle.hpp>

#include <algorithm>
#include <numeric>

namespace connprob {

void UnionFind::reset(int n) {
    parent_.resize(static_cast<size_t>(n));
    size_.assign(static_cast<size_t>(n), 1);
    std::iota(parent_.begin(), parent_.end(), 0);
    components_ = n;
}

int UnionFind::find(int x) {
    while (parent_[static_cast<size_t>(x)] != x) {
        parent_[static_cast<size_t>(x)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
        x = parent_[static_cast<size_t>(x)];
    }
    return x;
}

bool UnionFind::unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[static_cast<size_t>(a)] < size_[static_cast<size_t>(b)]) std::swap(a, b);
    parent_[static_cast<size_t>(b)] = a;
    size_[static_cast<size_t>(a)] += size_[static_cast<size_t>(b)];
    --components_;
    return true;
}

namespace {

void check_budget(const Integer& states, std::int64_t budget, const char* what) {
    if (states > budget)
        throw BudgetError(std::string(what) + ": state space " + states.get_str() +
                          " exceeds budget " + std::to_string(budget));
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Perfect matchings of {0..n-1} as partner arrays, built by always pairing
// the smallest unmatched element.
std::vector<std::vector<int>> all_matchings(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> partner(static_cast<size_t>(n), -1);
    auto rec = [&](auto&& self) -> void {
        int a = -1;
        for (int i = 0; i < n; ++i)
            if (partner[static_cast<size_t>(i)] < 0) {
                a = i;
                break;
            }
        if (a < 0) {
            out.push_back(partner);
            return;
        }
        for (int b = a + 1; b < n; ++b) {
            if (partner[static_cast<size_t>(b)] >= 0) continue;
            partner[static_cast<size_t>(a)] = b;
            partner[static_cast<size_t>(b)] = a;
            self(self);
            partner[static_cast<size_t>(a)] = -1;
            partner[static_cast<size_t>(b)] = -1;
        }
    };
    rec(rec);
    return out;
}

}  // namespace

EnumResult count_connected_multigraphs(int n, int d, std::int64_t budget) {
    if (n < 0 || d < 1) throw DomainError("connected multigraphs: need n >= 0, d >= 1");
    const int pairs = n * (n - 1) / 2;
    const Integer states = int_pow(Integer(d + 1), static_cast<unsigned long>(pairs));
    check_budget(states, budget, "connected multigraphs");

    EnumResult res;
    res.n = n;
    res.total = states;
    if (n == 0) {
        res.hits = 0;  // the empty graph has no component, hence is not connected
        return res;
    }
    std::vector<std::pair<int, int>> pr;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pr.emplace_back(i, j);
    std::vector<int> mult(static_cast<size_t>(pairs), 0);
    UnionFind uf(n);
    Integer hits = 0;
    while (true) {
        uf.reset(n);
        for (int e = 0; e < pairs; ++e)
            if (mult[static_cast<size_t>(e)] > 0)
                uf.unite(pr[static_cast<size_t>(e)].first, pr[static_cast<size_t>(e)].second);
        if (uf.components() == 1) ++hits;
        // odometer over edge multiplicities 0..d
        int pos = 0;
        while (pos < pairs && mult[static_cast<size_t>(pos)] == d) {
            mult[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == pairs) break;
        ++mult[static_cast<size_t>(pos)];
    }
    res.hits = hits;
    return res;
}

EnumResult count_irreducible_tournaments(int k, int d, std::int64_t budget) {
    if (k < 1 || d < 1) throw DomainError("irreducible tournaments: need k >= 1, d >= 1");
    const int pairs = k * (k - 1) / 2;
    const Integer states = int_pow(Integer(d + 1), static_cast<unsigned long>(pairs));
    check_budget(states * int_pow(Integer(2), static_cast<unsigned long>(k)), budget,
                 "irreducible tournaments");

    EnumResult res;
    res.n = k;
    res.total = states;
    // arc(i,j) for i<j = number of the d arcs oriented i -> j
    std::vector<std::pair<int, int>> pr;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) pr.emplace_back(i, j);
    std::vector<int> arc(static_cast<size_t>(pairs), 0);
    std::vector<std::vector<int>> idx(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(k), -1));
    for (int e = 0; e < pairs; ++e) {
        idx[static_cast<size_t>(pr[static_cast<size_t>(e)].first)][static_cast<size_t>(pr[static_cast<size_t>(e)].second)] = e;
    }
    Integer hits = 0;
    const int full = (1 << k) - 1;
    while (true) {
        bool reducible = false;
        for (int mask = 1; mask < full && !reducible; ++mask) {
            // does every arc between mask and its complement leave mask?
            bool all_out = true;
            for (int a = 0; a < k && all_out; ++a) {
                if (!((mask >> a) & 1)) continue;
                for (int b = 0; b < k && all_out; ++b) {
                    if ((mask >> b) & 1) continue;
                    if (a < b) {
                        if (arc[static_cast<size_t>(idx[static_cast<size_t>(a)][static_cast<size_t>(b)])] != d) all_out = false;
                    } else {
                        if (arc[static_cast<size_t>(idx[static_cast<size_t>(b)][static_cast<size_t>(a)])] != 0) all_out = false;
                    }
                }
            }
            if (all_out) reducible = true;
        }
        if (!reducible) ++hits;
        int pos = 0;
        while (pos < pairs && arc[static_cast<size_t>(pos)] == d) {
            arc[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == pairs) break;
        ++arc[static_cast<size_t>(pos)];
    }
    res.hits = hits;
    return res;
}

EnumResult count_indecomposable_permutations(int k, std::int64_t budget) {
    if (k < 1) throw DomainError("indecomposable permutations: need k >= 1");
    check_budget(factorial(k), budget, "indecomposable permutations");
    EnumResult res;
    res.n = k;
    res.total = factorial(k);
    std::vector<int> p(static_cast<size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    Integer hits = 0;
    do {
        bool indec = true;
        int run_max = -1;
        for (int j = 0; j + 1 < k; ++j) {
            run_max = std::max(run_max, p[static_cast<size_t>(j)]);
            if (run_max == j) {
                indec = false;
                break;
            }
        }
        if (indec) ++hits;
    } while (std::next_permutation(p.begin(), p.end()));
    res.hits = hits;
    return res;
}

EnumResult count_indecomposable_tuples(int k, int d, std::int64_t budget) {
    if (k < 1 || d < 1) throw DomainError("indecomposable tuples: need k >= 1, d >= 1");
    const Integer states = int_pow(factorial(k), static_cast<unsigned long>(d));
    check_budget(states, budget, "indecomposable tuples");
    EnumResult res;
    res.n = k;
    res.total = states;
    const auto perms = all_permutations(k);
    const long np = static_cast<long>(perms.size());
    std::vector<long> sel(static_cast<size_t>(d), 0);
    Integer hits = 0;
    while (true) {
        bool indec = true;
        int run_max = -1;
        for (int j = 0; j + 1 < k && indec; ++j) {
            for (int t = 0; t < d; ++t)
                run_max = std::max(run_max, perms[static_cast<size_t>(sel[static_cast<size_t>(t)])][static_cast<size_t>(j)]);
            if (run_max == j) indec = false;
        }
        if (indec) ++hits;
        int pos = 0;
        while (pos < d && sel[static_cast<size_t>(pos)] == np - 1) {
            sel[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == d) break;
        ++sel[static_cast<size_t>(pos)];
    }
    res.hits = hits;
    return res;
}

EnumResult count_indecomposable_matchings(int k, std::int64_t budget) {
    if (k < 1) throw DomainError("indecomposable matchings: need k >= 1");
    check_budget(odd_double_factorial(2 * k - 1), budget, "indecomposable matchings");
    EnumResult res;
    res.n = k;
    res.total = odd_double_factorial(2 * k - 1);
    Integer hits = 0;
    for (const auto& partner : all_matchings(2 * k)) {
        bool indec = true;
        int run_max = -1;
        for (int j = 0; j + 1 < 2 * k && indec; ++j) {
            run_max = std::max(run_max, partner[static_cast<size_t>(j)]);
            // a closed prefix must end at an even position boundary
            if (j % 2 == 1 && run_max == j) indec = false;
        }
        if (indec) ++hits;
    }
    res.hits = hits;
    return res;
}

EnumResult count_transitive_tuples(int n, int d, std::int64_t budget) {
    if (n < 1 || d < 1) throw DomainError("transitive tuples: need n >= 1, d >= 1");
    const Integer states = int_pow(factorial(n), static_cast<unsigned long>(d));
    check_budget(states, budget, "transitive tuples");
    EnumResult res;
    res.n = n;
    res.total = states;
    const auto perms = all_permutations(n);
    const long np = static_cast<long>(perms.size());
    std::vector<long> sel(static_cast<size_t>(d), 0);
    UnionFind uf(n);
    Integer hits = 0;
    while (true) {
        uf.reset(n);
        for (int t = 0; t < d; ++t) {
            const auto& p = perms[static_cast<size_t>(sel[static_cast<size_t>(t)])];
            for (int i = 0; i < n; ++i) uf.unite(i, p[static_cast<size_t>(i)]);
        }
        if (uf.components() == 1) ++hits;
        int pos = 0;
        while (pos < d && sel[static_cast<size_t>(pos)] == np - 1) {
            sel[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == d) break;
        ++sel[static_cast<size_t>(pos)];
    }
    res.hits = hits;
    return res;
}

EnumResult count_connected_maps(int n_darts, std::int64_t budget) {
    if (n_darts < 2) throw DomainError("connected maps: need n >= 2 darts");
    if (n_darts % 2 != 0)
        throw DomainError("connected maps: dart count must be even, got " +
                          std::to_string(n_darts));
    const Integer states = factorial(n_darts) * odd_double_factorial(n_darts - 1);
    check_budget(states, budget, "connected maps");
    EnumResult res;
    res.n = n_darts;
    res.total = states;
    const auto matchings = all_matchings(n_darts);
    std::vector<int> sigma(static_cast<size_t>(n_darts));
    std::iota(sigma.begin(), sigma.end(), 0);
    UnionFind uf(n_darts);
    Integer hits = 0;
    do {
        for (const auto& alpha : matchings) {
            uf.reset(n_darts);
            for (int i = 0; i < n_darts; ++i) {
                uf.unite(i, sigma[static_cast<size_t>(i)]);
                uf.unite(i, alpha[static_cast<size_t>(i)]);
            }
            if (uf.components() == 1) ++hits;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    res.hits = hits;
    return res;
}

EnumResult count_irreducible_order_tuples(int k, int d, std::int64_t budget) {
    if (k < 1 || d < 1) throw DomainError("irreducible order tuples: need k >= 1, d >= 1");
    if (k > 30) throw BudgetError("irreducible order tuples: k too large for bitmask check");
    const Integer states = int_pow(factorial(k), static_cast<unsigned long>(d));
    check_budget(states, budget, "irreducible order tuples");
    EnumResult res;
    res.n = k;
    res.total = states;
    const auto perms = all_permutations(k);  // w[pos] = element at position pos
    const long np = static_cast<long>(perms.size());
    std::vector<long> sel(static_cast<size_t>(d), 0);
    Integer hits = 0;
    std::vector<unsigned> mask(static_cast<size_t>(d), 0);
    while (true) {
        bool irred = true;
        std::fill(mask.begin(), mask.end(), 0u);
        for (int j = 0; j + 1 < k && irred; ++j) {
            bool all_equal = true;
            for (int t = 0; t < d; ++t) {
                mask[static_cast<size_t>(t)] |=
                    1u << perms[static_cast<size_t>(sel[static_cast<size_t>(t)])][static_cast<size_t>(j)];
                if (mask[static_cast<size_t>(t)] != mask[0]) all_equal = false;
            }
            if (all_equal) irred = false;  // common proper prefix set
        }
        if (irred) ++hits;
        int pos = 0;
        while (pos < d && sel[static_cast<size_t>(pos)] == np - 1) {
            sel[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == d) break;
        ++sel[static_cast<size_t>(pos)];
    }
    res.hits = hits;
    return res;
}

EnumResult count_irreducible_linear_matchings(int n, std::int64_t budget) {
    if (n < 2 || n % 2 != 0)
        throw DomainError("irreducible linear matchings: need even n >= 2");
    if (n > 30) throw BudgetError("irreducible linear matchings: n too large for bitmask check");
    const Integer states = factorial(n) * odd_double_factorial(n - 1);
    check_budget(states, budget, "irreducible linear matchings");
    EnumResult res;
    res.n = n;
    res.total = states;
    const auto involutions = all_matchings(n);  // fixed-point-free involutions
    std::vector<int> w1(static_cast<size_t>(n));
    std::iota(w1.begin(), w1.end(), 0);
    Integer hits = 0;
    do {
        for (const auto& alpha : involutions) {
            // w2 = alpha o w1; prefix sets share elements iff masks coincide
            unsigned m1 = 0, m2 = 0;
            bool irred = true;
            for (int j = 0; j + 1 < n; ++j) {
                const int e1 = w1[static_cast<size_t>(j)];
                m1 |= 1u << e1;
                m2 |= 1u << alpha[static_cast<size_t>(e1)];
                if (m1 == m2) {
                    irred = false;
                    break;
                }
            }
            if (irred) ++hits;
        }
    } while (std::next_permutation(w1.begin(), w1.end()));
    res.hits = hits;
    return res;
}

}  // namespace connprob
