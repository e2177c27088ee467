#include <connprob/decomp.hpp>

#include <cmath>

namespace connprob {

namespace {

// Compressed-lattice series of the model: coeff[m] = a_{pm}/(pm)!, m = 0..M.
Egf compressed_egf(const ModelSpec& model, int M) {
    Egf f = Egf::zero(M);
    for (int m = 0; m <= M; ++m)
        f[m] = make_rational(model.count(static_cast<long>(m) * model.period),
                             factorial(static_cast<long>(m) * model.period));
    if (f[0] != 1)
        throw DomainError("model '" + model.id + "': size-0 count must be 1");
    return f;
}

}  // namespace

CountingSequence connected_counts(const ModelSpec& model, int order) {
    if (order < 0) throw DomainError("order must be >= 0");
    const int p = model.period;
    const int M = order / p;
    Egf u = compressed_egf(model, M);
    u[0] = 0;
    Egf l = log1p(u);
    CountingSequence seq;
    seq.label = model.id;
    seq.period = p;
    seq.terms.assign(order + 1, Integer(0));
    for (int m = 1; m <= M; ++m) {
        const Rational c = l[m] * Rational(factorial(static_cast<long>(m) * p));
        if (!is_integer(c))
            throw DomainError("model '" + model.id + "': connected count at size " +
                              std::to_string(m * p) + " is not an integer");
        seq.terms[static_cast<size_t>(m) * p] = c.get_num();
    }
    return seq;
}

DerivedSequences derivative_coeffs(const ModelSpec& model, int order) {
    if (order < 1) throw DomainError("order must be >= 1");
    const int p = model.period;
    Egf a = compressed_egf(model, order);
    Egf d = sub(Egf::one(order), reciprocal(a));  // 1 - 1/A on the compressed lattice
    DerivedSequences out;
    out.model_id = model.id;
    out.period = p;
    out.interpretation_claimed = model.seq_class_known;
    out.delta.reserve(order);
    out.d.reserve(order);
    for (int k = 1; k <= order; ++k) {
        out.delta.push_back(d[k]);
        const Rational lifted = d[k] * Rational(factorial(static_cast<long>(k) * p));
        if (is_integer(lifted))
            out.d.emplace_back(lifted.get_num());
        else
            out.d.emplace_back(std::nullopt);
    }
    return out;
}

void for_each_multiplicity_vector(int k,
                                  const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 1) throw DomainError("multiplicity vectors need k >= 1");
    std::vector<int> m(static_cast<size_t>(k), 0);
    // Choose m[0], then m[1], ... so vectors are produced in lexicographic
    // order of (m[0], m[1], ...); `rest` is the weight still to place.
    auto rec = [&](auto&& self, int i, int rest) -> void {
        const int part = i + 1;  // part size represented by m[i]
        if (part > k) return;
        if (part == k) {
            // only the single largest part can absorb the remainder exactly
            m[static_cast<size_t>(i)] = rest / part;
            if (rest % part == 0) fn(m);
            m[static_cast<size_t>(i)] = 0;
            return;
        }
        for (int c = 0; c * part <= rest; ++c) {
            m[static_cast<size_t>(i)] = c;
            const int left = rest - c * part;
            if (left == 0)
                fn(m);
            else
                self(self, i + 1, left);
        }
        m[static_cast<size_t>(i)] = 0;
    };
    rec(rec, 0, k);
    }

Rational derivative_by_partitions(const ModelSpec& model, int k) {
    if (k < 1) throw DomainError("partition formula needs k >= 1");
    const int p = model.period;
    Egf u = compressed_egf(model, k);
    u[0] = 0;
    Egf l = log1p(u);
    // c^_i = i! * [y^i] log A~ on the compressed lattice
    std::vector<Rational> chat(static_cast<size_t>(k) + 1, Rational(0));
    for (int i = 1; i <= k; ++i) chat[static_cast<size_t>(i)] = l[i] * Rational(factorial(i));

    Rational total = 0;
    for_each_multiplicity_vector(k, [&](const std::vector<int>& m) {
        Rational term = Rational(factorial(k));
        long parts = 0;
        for (int i = 1; i <= k; ++i) {
            const int mi = m[static_cast<size_t>(i - 1)];
            if (mi == 0) continue;
            parts += mi;
            term *= rat_pow(chat[static_cast<size_t>(i)] / Rational(factorial(i)), mi);
            term /= Rational(factorial(mi));
        }
        if (parts % 2 == 0) term = -term;
        total += term;
    });
    // total = k! * [y^k](1 - 1/A~); lift to the z-lattice factorial weight.
    return total * make_rational(factorial(static_cast<long>(k) * p), factorial(k));
}

BenderReport bender_compose_check(const Egf& u, int r_max, long window_lo, long window_hi) {
    if (u.coeff.empty() || u[0] != 0)
        throw DomainError("bender_compose_check requires zero constant term");
    if (r_max < 0 || window_lo <= r_max || window_hi <= window_lo ||
        window_hi > u.order())
        throw DomainError("bender_compose_check: bad window/r_max");
    Egf v = log1p(u);
    Egf a = u;
    a[0] = 1;
    Egf w = reciprocal(a);

    BenderReport rep;
    rep.r_max = r_max;
    rep.window_lo = window_lo;
    rep.window_hi = window_hi;
    rep.pass = true;
    for (int r = 0; r <= r_max; ++r) {
        std::vector<Rational> row;
        bool all_zero = true;
        for (long n = window_lo; n <= window_hi; ++n) {
            Rational resid = v[n];
            for (int k = 0; k <= r; ++k) resid -= w[k] * u[n - k];
            if (resid < 0) resid = -resid;
            const Rational denom = u[n - r];
            if (denom == 0) {
                if (resid != 0) {
                    rep.pass = false;
                    row.push_back(Rational(-1));  // sentinel: residual without scale
                    continue;
                }
                row.push_back(Rational(0));
                continue;
            }
            Rational q = resid / denom;
            if (q < 0) q = -q;
            if (q != 0) all_zero = false;
            row.push_back(q);
        }
        if (!all_zero) {
            for (size_t i = 1; i < row.size(); ++i)
                if (row[i] > row[i - 1]) rep.pass = false;
            if (row.back() >= row.front()) rep.pass = false;
        }
        rep.ratios.push_back(std::move(row));
    }
    return rep;
}

}  // namespace connprob
