#pragma once

#include <connprob/bigseries.hpp>
#include <connprob/rational.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace connprob {

// How the correction terms behave as functions of the size n.
enum class RatioKind {
    kRationalInN,     // each term is a rational function of n -> 1/n series exists
    kExponentialInN,  // terms decay exponentially in n -> term list only
};

std::string to_string(RatioKind k);

// Structural family driving the closed-form term factorization in expansion.
enum class ModelFamily {
    kMultigraph,      // ambient (d+1)^C(n,2); graph/oriented_graph/digraph/multigraph(d)
    kMultilinear,     // ambient (n!)^e normalized; origami/multilinear(d)/constellation(d)
    kCombMap,         // ambient n!(n-1)!! on even sizes
    kOgem,            // ambient (2m)!(m!)^(D-1) on even sizes
    kTriangulation,   // ambient (6m-1)!! on even sizes
    kQuadrangulation, // ambient (4n-1)!!
    kQuadSts,         // ambient ((2n-1)!!)^2
    kGem3,            // ambient ((2m-1)!!)^4 on even sizes
    kCustom,          // user-supplied terms
};

// Which independent enumerator can confirm this model's outputs.
enum class OracleBinding {
    kNone,
    kMultigraph,        // connected multigraphs + irreducible tournaments
    kPermutationTuples, // transitive tuples + indecomposable perms/tuples
    kCombMap,           // connected maps + indecomposable matchings
    kOgemLift,          // permutation tuples via the (2m)!/m! compressed-lattice lift
};

struct ModelSpec {
    std::string id;          // canonical id, e.g. "graph", "multigraph(d=2)", "ogem(D=3)"
    ModelFamily family = ModelFamily::kCustom;
    long param = 0;          // d or D for parametric families; 0 otherwise
    int period = 1;
    RatioKind ratio_kind = RatioKind::kExponentialInN;
    // True when the derivative coefficients are established counts of
    // irreducible objects; false for models where only the numbers are claimed.
    bool seq_class_known = false;
    OracleBinding oracle = OracleBinding::kNone;
    // Report the leading 1/n term in raw size units instead of lattice units.
    bool leading_term_in_size_units = false;
    // Exact number of objects of size n (raw size, not lattice index).
    std::function<Integer(long)> count_fn;

    Integer count(long n) const;
    // Convenience: counting sequence a_0..a_max_n.
    CountingSequence counts(long max_n) const;
};

// Construct a builtin model. Known ids: graph, oriented_graph, digraph,
// multigraph (param d >= 1), origami, multilinear (param d >= 2), comb_map,
// ogem (param D >= 2), constellation (param d >= 3), triangulation,
// quadrangulation, quad_sts, gem3.
// Unknown id -> UsageError. Bad/missing parameter values -> ValidationError.
ModelSpec builtin_model(const std::string& id, const std::map<std::string, long>& params = {});

bool is_builtin_model_id(const std::string& id);

struct ModelInfo {
    std::string id;
    std::string params;  // human note, e.g. "d >= 1", or "" if none
    int period;
    RatioKind ratio_kind;
    bool seq_class_known;
    bool has_oracle;
};

// Registry listing for the `models` subcommand, in fixed order.
std::vector<ModelInfo> model_registry();

// Canonical instances used by "run everything" sweeps: every parameterless
// builtin plus representative parameter choices for the parametric families.
std::vector<ModelSpec> canonical_models();

// Load a custom model from a JSON file of shape
//   {"label": "...", "period": p, "terms": [1, "26", ...]}
// Terms may be JSON integers or decimal strings (for values beyond 2^63).
// Requirements: terms[0] = 1, off-lattice terms zero, period >= 1.
// Violations raise ValidationError naming the offending field/index.
ModelSpec custom_model_from_file(const std::string& path);

}  // namespace connprob
