#include <connprob/expansion.hpp>

#include <algorithm>
#include <sstream>

namespace connprob {

namespace {

// Cancelled closed form of C(pn, pk) * a_{p(n-k)} / a_{pn} as a product of
// linear factors in the lattice variable n (validated against direct
// evaluation by tests). Returns false for models without such a form.
bool ratio_factors(const ModelSpec& model, int k, std::vector<LinearFactor>& numer,
                   std::vector<LinearFactor>& denom) {
    numer.clear();
    denom.clear();
    switch (model.family) {
        case ModelFamily::kMultilinear:
            // 1 / ((n)(n-1)...(n-k+1))^(e-1)
            for (long rep = 0; rep < model.param - 1; ++rep)
                for (long j = 0; j < k; ++j) denom.push_back({1, -j});
            return true;
        case ModelFamily::kCombMap:
            for (long i = 1; i <= k; ++i) denom.push_back({2, -(2 * i - 1)});
            return true;
        case ModelFamily::kOgem:
            for (long rep = 0; rep < model.param - 1; ++rep)
                for (long j = 0; j < k; ++j) denom.push_back({1, -j});
            return true;
        case ModelFamily::kTriangulation:
            for (long j = 0; j < 2 * k; ++j) numer.push_back({2, -j});
            for (long i = 1; i <= 3 * k; ++i) denom.push_back({6, -(2 * i - 1)});
            return true;
        case ModelFamily::kQuadrangulation:
            for (long j = 0; j < k; ++j) numer.push_back({1, -j});
            for (long i = 1; i <= 2 * k; ++i) denom.push_back({4, -(2 * i - 1)});
            return true;
        case ModelFamily::kQuadSts:
            for (long j = 0; j < k; ++j) numer.push_back({1, -j});
            for (long i = 1; i <= k; ++i) {
                denom.push_back({2, -(2 * i - 1)});
                denom.push_back({2, -(2 * i - 1)});
            }
            return true;
        case ModelFamily::kGem3:
            for (long j = 0; j < 2 * k; ++j) numer.push_back({2, -j});
            for (long i = 1; i <= k; ++i)
                for (int rep = 0; rep < 4; ++rep) denom.push_back({2, -(2 * i - 1)});
            return true;
        default:
            return false;
    }
}

std::string factor_text(const LinearFactor& f) {
    std::ostringstream os;
    os << "(";
    if (f.a == 1)
        os << "n";
    else
        os << f.a << "n";
    if (f.b > 0) os << "+" << f.b;
    if (f.b < 0) os << f.b;
    os << ")";
    return os.str();
}

std::string term_formula(const ModelSpec& model, const ExpansionTerm& t) {
    std::ostringstream os;
    if (t.exp_base != 0) {
        os << (t.d ? to_string(*t.d) : to_string(t.delta)) << " * C(n," << t.k << ") * "
           << t.exp_base << "^(" << t.exp_shift << " - " << t.k << "n)";
        return os.str();
    }
    if (t.numer.empty() && t.denom.empty()) {
        const long pk = static_cast<long>(t.k) * model.period;
        os << (t.d ? to_string(*t.d) : to_string(t.delta)) << " * C(" << model.period << "n,"
           << pk << ") * a(" << model.period << "(n-" << t.k << "))/a(" << model.period << "n)";
        return os.str();
    }
    os << "(" << to_string(t.delta) << ")";
    if (!t.numer.empty()) {
        os << " * ";
        for (const auto& f : t.numer) os << factor_text(f);
    }
    if (!t.denom.empty()) {
        os << " / (";
        for (const auto& f : t.denom) os << factor_text(f);
        os << ")";
    }
    return os.str();
}

// Decay order: the 1/n-degree contributed per lattice index k, i.e.
// (len(denom) - len(numer)) / k. Zero for non-rational models.
int decay_order(const ModelSpec& model) {
    switch (model.family) {
        case ModelFamily::kMultilinear:
        case ModelFamily::kOgem:
            return static_cast<int>(model.param) - 1;
        case ModelFamily::kCombMap:
        case ModelFamily::kTriangulation:
        case ModelFamily::kQuadrangulation:
        case ModelFamily::kQuadSts:
            return 1;
        case ModelFamily::kGem3:
            return 2;
        default:
            return 0;
    }
}

// Multiplies the truncated x-series `s` by (1 + c x).
void mul_linear(std::vector<Rational>& s, const Rational& c) {
    for (size_t i = s.size(); i-- > 1;) s[i] += c * s[i - 1];
}

// Multiplies the truncated x-series `s` by 1/(1 + c x) = sum (-c)^t x^t.
void mul_geometric(std::vector<Rational>& s, const Rational& c) {
    // in-place: t[i] = s[i] - c * t[i-1]
    for (size_t i = 1; i < s.size(); ++i) s[i] -= c * s[i - 1];
}

}  // namespace

ExpansionTermList term_list(const ModelSpec& model, int r) {
    if (r < 0) throw DomainError("term_list needs r >= 0");
    ExpansionTermList list;
    list.model = model;
    list.r = r;
    if (r == 0) return list;
    DerivedSequences der = derivative_coeffs(model, r);
    for (int k = 1; k <= r; ++k) {
        ExpansionTerm t;
        t.k = k;
        t.delta = der.delta[static_cast<size_t>(k) - 1];
        t.d = der.d[static_cast<size_t>(k) - 1];
        if (model.family == ModelFamily::kMultigraph) {
            t.exp_base = model.param + 1;
            t.exp_shift = static_cast<long>(k) * (k + 1) / 2;
        } else {
            ratio_factors(model, k, t.numer, t.denom);
        }
        t.formula = term_formula(model, t);
        list.terms.push_back(std::move(t));
    }
    return list;
}

Rational evaluate_at(const ExpansionTermList& list, long n) {
    if (n <= list.r)
        throw DomainError("evaluate_at needs n > r (got n = " + std::to_string(n) +
                          ", r = " + std::to_string(list.r) + ")");
    const ModelSpec& model = list.model;
    const long p = model.period;
    const Integer a_n = model.count(p * n);
    if (a_n == 0) throw DomainError("model '" + model.id + "': no objects at size " +
                                    std::to_string(p * n));
    Rational acc = 1;
    for (const auto& t : list.terms) {
        const long pk = p * t.k;
        // d_{pk} * C(pn, pk) * a_{p(n-k)} / a_{pn}, all exact
        Rational term = t.delta * Rational(factorial(pk));
        term *= Rational(binomial(Integer(p * n), pk));
        term *= make_rational(model.count(p * (n - t.k)), a_n);
        acc -= term;
    }
    return acc;
}

Rational exact_probability(const ModelSpec& model, long n) {
    if (n < 1) throw DomainError("exact_probability needs size n >= 1");
    const Integer a_n = model.count(n);
    if (a_n == 0)
        throw DomainError("model '" + model.id + "': no objects of size " + std::to_string(n) +
                          " (period " + std::to_string(model.period) + ")");
    if (n % model.period != 0)
        throw DomainError("model '" + model.id + "': size " + std::to_string(n) +
                          " is off the period-" + std::to_string(model.period) + " lattice");
    CountingSequence c = connected_counts(model, static_cast<int>(n));
    return make_rational(c.terms[static_cast<size_t>(n)], a_n);
}

Rational InvNSeries::value_at(long n) const {
    if (n < 1) throw DomainError("series evaluation needs n >= 1");
    Rational acc = 1;
    Rational x = make_rational(1, n);
    Rational pw = 1;
    for (int j = 1; j <= r; ++j) {
        pw *= x;
        acc -= e[static_cast<size_t>(j) - 1] * pw;
    }
    return acc;
}

namespace {

InvNSeries make_series_shell(const ModelSpec& model, int r) {
    InvNSeries s;
    s.model_id = model.id;
    s.period = model.period;
    s.r = r;
    s.convention = (model.period == 1)
                       ? "P(size n) ~ 1 - sum e_j / n^j; n = size"
                       : "P(size " + std::to_string(model.period) + "n) ~ 1 - sum e_j / n^j; n = size/" +
                             std::to_string(model.period) + " (lattice index)";
    s.e.assign(static_cast<size_t>(r), Rational(0));
    return s;
}

void require_rational_kind(const ModelSpec& model) {
    if (model.ratio_kind != RatioKind::kRationalInN)
        throw DomainError("model '" + model.id +
                          "': correction terms are not rational in n; use term_list instead");
}

}  // namespace

InvNSeries inv_n_series(const ModelSpec& model, int r) {
    require_rational_kind(model);
    if (r < 1) throw DomainError("inv_n_series needs r >= 1");
    InvNSeries out = make_series_shell(model, r);
    const int g = decay_order(model);
    if (g < 1) throw DomainError("model '" + model.id + "': no 1/n decay order");
    const int k_max = r / g;
    // the first dropped term k_max+1 must sit entirely beyond order r
    if ((k_max + 1) * g <= r)
        throw DomainError("internal: truncation cutoff k_max=" + std::to_string(k_max) +
                          " misses order " + std::to_string(r));
    if (k_max == 0) return out;

    DerivedSequences der = derivative_coeffs(model, k_max);
    for (int k = 1; k <= k_max; ++k) {
        std::vector<LinearFactor> numer, denom;
        ratio_factors(model, k, numer, denom);
        const int shift = static_cast<int>(denom.size() - numer.size());
        if (shift != g * k)
            throw DomainError("internal: factor shift " + std::to_string(shift) +
                              " != " + std::to_string(g * k) + " for k=" + std::to_string(k));
        if (shift > r) continue;

        // x-series of n^shift * term_k(n), x = 1/n; with each factor written
        // as a*n*(1 + (b/a)x) resp. (x/a)/(1 + (b/a)x), the pure scalars
        // commute out front and the polynomial parts multiply in.
        std::vector<Rational> s(static_cast<size_t>(r - shift) + 1, Rational(0));
        Rational scalar = der.delta[static_cast<size_t>(k) - 1];
        for (const auto& f : numer) scalar *= f.a;
        for (const auto& f : denom) scalar /= f.a;
        s[0] = scalar;
        for (const auto& f : numer) mul_linear(s, make_rational(f.b, f.a));
        for (const auto& f : denom) mul_geometric(s, make_rational(f.b, f.a));
        for (size_t i = 0; i < s.size(); ++i)
            out.e[static_cast<size_t>(shift) + i - 1] += s[i];
    }
    return out;
}

InvNSeries inv_n_series_by_division(const ModelSpec& model, int r) {
    require_rational_kind(model);
    if (r < 1) throw DomainError("inv_n_series needs r >= 1");
    InvNSeries out = make_series_shell(model, r);
    const int g = decay_order(model);
    const int k_max = r / g;
    if (k_max == 0) return out;

    DerivedSequences der = derivative_coeffs(model, k_max);
    for (int k = 1; k <= k_max; ++k) {
        std::vector<LinearFactor> numer, denom;
        ratio_factors(model, k, numer, denom);

        // expand both products as polynomials in n (ascending coefficients)
        auto poly_of = [](const std::vector<LinearFactor>& fs) {
            std::vector<Rational> p{Rational(1)};
            for (const auto& f : fs) {
                std::vector<Rational> q(p.size() + 1, Rational(0));
                for (size_t i = 0; i < p.size(); ++i) {
                    q[i] += p[i] * Rational(f.b);
                    q[i + 1] += p[i] * Rational(f.a);
                }
                p = std::move(q);
            }
            return p;
        };
        std::vector<Rational> pn = poly_of(numer), pd = poly_of(denom);
        const int shift = static_cast<int>(pd.size() - pn.size());
        if (shift > r) continue;

        // reverse coefficients: P(n) = n^deg * P*(x) with x = 1/n
        Egf prev(std::vector<Rational>(pn.rbegin(), pn.rend()));
        Egf drev(std::vector<Rational>(pd.rbegin(), pd.rend()));
        const int need = r - shift;
        prev.coeff.resize(static_cast<size_t>(std::max<int>(need, prev.order())) + 1, Rational(0));
        drev.coeff.resize(static_cast<size_t>(std::max<int>(need, drev.order())) + 1, Rational(0));
        Egf ratio = mul(truncated(prev, need), reciprocal(truncated(drev, need)));
        for (int i = 0; i <= need; ++i)
            out.e[static_cast<size_t>(shift + i) - 1] +=
                der.delta[static_cast<size_t>(k) - 1] * ratio[i];
    }
    return out;
}

LeadingTermReport leading_term_report(const ModelSpec& model) {
    LeadingTermReport rep;
    rep.model_id = model.id;
    rep.ratio_kind = model.ratio_kind;
    if (model.ratio_kind == RatioKind::kRationalInN) {
        const int g = decay_order(model);
        InvNSeries s = inv_n_series(model, g);
        rep.order = g;
        rep.coefficient = s.coefficient(g);
        rep.variable = "lattice index (size/" + std::to_string(model.period) + ")";
        if (model.leading_term_in_size_units) {
            // e_j in size units picks up a factor period^j
            rep.coefficient *= rat_pow(Rational(model.period), g);
            rep.variable = "size";
        } else if (model.period == 1) {
            rep.variable = "size";
        }
        std::ostringstream os;
        if (rep.coefficient != 1) os << "(" << to_string(rep.coefficient) << ") * ";
        os << "1/n" << (g > 1 ? "^" + std::to_string(g) : "");
        rep.formula = os.str();
        return rep;
    }
    // exponential family: leading term is the k = 1 term of the list
    ExpansionTermList list = term_list(model, 1);
    const ExpansionTerm& t = list.terms.front();
    rep.order = 0;
    rep.coefficient = t.delta * Rational(factorial(model.period));
    rep.variable = "size";
    if (t.exp_base != 0) {
        std::ostringstream os;
        if (rep.coefficient != 1) os << to_string(rep.coefficient) << " * ";
        os << "n * " << t.exp_base << "^(" << t.exp_shift << " - n)";
        rep.formula = os.str();
    } else {
        rep.formula = t.formula;
    }
    return rep;
}

}  // namespace connprob
