#include <connprob/bigseries.hpp>

#include <algorithm>

namespace connprob {

void validate_sequence(const CountingSequence& seq, bool require_unit_head) {
    if (seq.period < 1) throw ValidationError("sequence '" + seq.label + "': period must be >= 1");
    if (seq.terms.empty()) throw ValidationError("sequence '" + seq.label + "': no terms");
    if (require_unit_head && seq.terms[0] != 1)
        throw ValidationError("sequence '" + seq.label + "': terms[0] must be 1");
    for (size_t n = 0; n < seq.terms.size(); ++n) {
        if (n % static_cast<size_t>(seq.period) != 0 && seq.terms[n] != 0)
            throw ValidationError("sequence '" + seq.label + "': terms[" + std::to_string(n) +
                                  "] must be 0 (period " + std::to_string(seq.period) + ")");
    }
}

Egf egf_from_counts(const CountingSequence& seq, int order) {
    if (order < 0) throw DomainError("series order must be >= 0");
    if (seq.max_index() < order)
        throw InsufficientDataError("sequence '" + seq.label + "' has " +
                                    std::to_string(seq.terms.size()) + " terms, need " +
                                    std::to_string(order + 1) + " for order " +
                                    std::to_string(order));
    Egf f = Egf::zero(order);
    for (int n = 0; n <= order; ++n) f[n] = make_rational(seq.terms[n], factorial(n));
    return f;
}

namespace {

int min_order(const Egf& a, const Egf& b) { return std::min(a.order(), b.order()); }

void require_zero_head(const Egf& u, const char* op) {
    if (u.coeff.empty() || u[0] != 0)
        throw DomainError(std::string(op) + " requires a series with zero constant term");
}

void require_unit(const Egf& f, const char* op) {
    if (f.coeff.empty() || f[0] == 0)
        throw DomainError(std::string(op) + " requires a series with nonzero constant term");
}

}  // namespace

Egf add(const Egf& a, const Egf& b) {
    Egf r = Egf::zero(min_order(a, b));
    for (int n = 0; n <= r.order(); ++n) r[n] = a[n] + b[n];
    return r;
}

Egf sub(const Egf& a, const Egf& b) {
    Egf r = Egf::zero(min_order(a, b));
    for (int n = 0; n <= r.order(); ++n) r[n] = a[n] - b[n];
    return r;
}

Egf mul(const Egf& a, const Egf& b) {
    Egf r = Egf::zero(min_order(a, b));
    for (int i = 0; i <= r.order(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= r.order(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

Egf scale(const Egf& a, const Rational& s) {
    Egf r = a;
    for (auto& c : r.coeff) c *= s;
    return r;
}

Egf truncated(const Egf& a, int order) {
    if (order < 0) throw DomainError("series order must be >= 0");
    if (order > a.order())
        throw InsufficientDataError("cannot truncate order " + std::to_string(a.order()) +
                                    " series to order " + std::to_string(order));
    Egf r = a;
    r.coeff.resize(order + 1);
    return r;
}

Egf log1p(const Egf& u) {
    require_zero_head(u, "log1p");
    const int N = u.order();
    Egf l = Egf::zero(N);
    // With A = 1 + u: n a_n = sum_{k=1}^{n} k l_k a_{n-k}, a_0 = 1.
    for (int n = 1; n <= N; ++n) {
        Rational s = 0;
        for (int k = 1; k < n; ++k) {
            if (l[k] == 0 || u[n - k] == 0) continue;
            s += Rational(k) * l[k] * u[n - k];
        }
        l[n] = u[n] - s / n;
    }
    return l;
}

Egf exp(const Egf& u) {
    require_zero_head(u, "exp");
    const int N = u.order();
    Egf b = Egf::zero(N);
    b[0] = 1;
    // n b_n = sum_{k=1}^{n} k u_k b_{n-k}
    for (int n = 1; n <= N; ++n) {
        Rational s = 0;
        for (int k = 1; k <= n; ++k) {
            if (u[k] == 0 || b[n - k] == 0) continue;
            s += Rational(k) * u[k] * b[n - k];
        }
        b[n] = s / n;
    }
    return b;
}

Egf reciprocal(const Egf& f) {
    require_unit(f, "reciprocal");
    const int N = f.order();
    Egf b = Egf::zero(N);
    b[0] = 1 / f[0];
    for (int n = 1; n <= N; ++n) {
        Rational s = 0;
        for (int k = 1; k <= n; ++k) {
            if (f[k] == 0 || b[n - k] == 0) continue;
            s += f[k] * b[n - k];
        }
        b[n] = -b[0] * s;
    }
    return b;
}

Egf substitute_power(const Egf& f, int p) {
    if (p < 1) throw DomainError("substitute_power requires p >= 1");
    Egf r = Egf::zero(f.order() * p);
    for (int n = 0; n <= f.order(); ++n) r[n * p] = f[n];
    return r;
}

Egf reciprocal_newton(const Egf& f) {
    require_unit(f, "reciprocal");
    const int N = f.order();
    Egf x = Egf::zero(0);
    x[0] = 1 / f[0];
    int m = 0;
    while (m < N) {
        m = std::min(2 * m + 1, N);
        // x <- x (2 - f x) at order m
        Egf fm = truncated(f, m);
        x.coeff.resize(m + 1, Rational(0));
        Egf t = mul(fm, x);
        Egf two_minus = Egf::zero(m);
        two_minus[0] = 2;
        x = mul(x, sub(two_minus, t));
    }
    return x;
}

Egf log1p_newton(const Egf& u) {
    require_zero_head(u, "log1p");
    const int N = u.order();
    // log A = integral of A'/A with A = 1 + u, using the Newton reciprocal.
    Egf a = u;
    a[0] = 1;
    Egf da = Egf::zero(N);  // A' shifted: da[n] = (n+1) a_{n+1}
    for (int n = 0; n < N; ++n) da[n] = Rational(n + 1) * a[n + 1];
    Egf q = mul(da, reciprocal_newton(a));
    Egf l = Egf::zero(N);
    for (int n = 1; n <= N; ++n) l[n] = q[n - 1] / n;
    return l;
}

Egf exp_newton(const Egf& u) {
    require_zero_head(u, "exp");
    const int N = u.order();
    Egf x = Egf::one(0);
    int m = 0;
    while (m < N) {
        m = std::min(2 * m + 1, N);
        x.coeff.resize(m + 1, Rational(0));
        // x <- x (1 + u - log x) at order m
        Egf lx = x;
        lx[0] = 0;
        Egf corr = sub(truncated(u, m), log1p_newton(lx));
        corr[0] += 1;
        x = mul(x, corr);
    }
    return x;
}

Egf log1p_by_powers(const Egf& u) {
    require_zero_head(u, "log1p");
    const int N = u.order();
    Egf acc = Egf::zero(N);
    Egf pw = Egf::one(N);
    for (int k = 1; k <= N; ++k) {
        pw = mul(pw, u);
        const Rational c = make_rational((k % 2 == 1) ? 1 : -1, k);
        for (int n = 0; n <= N; ++n) acc[n] += c * pw[n];
    }
    return acc;
}

Egf exp_by_powers(const Egf& u) {
    require_zero_head(u, "exp");
    const int N = u.order();
    Egf acc = Egf::one(N);
    Egf pw = Egf::one(N);
    for (int k = 1; k <= N; ++k) {
        pw = mul(pw, u);
        const Rational c = make_rational(1, factorial(k));
        for (int n = 0; n <= N; ++n) acc[n] += c * pw[n];
    }
    return acc;
}

}  // namespace connprob
