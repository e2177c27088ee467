#include <connprob/models.hpp>

#include <json.hpp>

#include <fstream>
#include <memory>
#include <sstream>

namespace connprob {

std::string to_string(RatioKind k) {
    return k == RatioKind::kRationalInN ? "rational_in_n" : "exponential_in_n";
}

Integer ModelSpec::count(long n) const {
    if (n < 0) throw DomainError("model '" + id + "': size must be >= 0");
    if (n % period != 0) return 0;
    return count_fn(n);
}

CountingSequence ModelSpec::counts(long max_n) const {
    CountingSequence seq;
    seq.label = id;
    seq.period = period;
    seq.terms.reserve(max_n + 1);
    for (long n = 0; n <= max_n; ++n) seq.terms.push_back(count(n));
    return seq;
}

namespace {

long get_param(const std::map<std::string, long>& params, const std::string& key,
               const std::string& id) {
    auto it = params.find(key);
    if (it == params.end())
        throw ValidationError("model '" + id + "' requires parameter " + key);
    return it->second;
}

ModelSpec multigraph_spec(const std::string& id, long d) {
    if (d < 1) throw ValidationError("model 'multigraph' requires d >= 1");
    ModelSpec m;
    m.id = id;
    m.family = ModelFamily::kMultigraph;
    m.param = d;
    m.period = 1;
    m.ratio_kind = RatioKind::kExponentialInN;
    m.seq_class_known = true;
    m.oracle = OracleBinding::kMultigraph;
    m.count_fn = [d](long n) -> Integer {
        return int_pow(Integer(d + 1), static_cast<unsigned long>(n * (n - 1) / 2));
    };
    return m;
}

// Ambient count (n!)^e with e >= 2 (origami e = 2, multilinear(d) e = d,
// constellation(d) e = d - 1).
ModelSpec power_factorial_spec(const std::string& id, long e) {
    ModelSpec m;
    m.id = id;
    m.family = ModelFamily::kMultilinear;
    m.param = e;
    m.period = 1;
    m.ratio_kind = RatioKind::kRationalInN;
    m.seq_class_known = true;
    m.oracle = OracleBinding::kPermutationTuples;
    m.count_fn = [e](long n) -> Integer { return int_pow(factorial(n), static_cast<unsigned long>(e)); };
    return m;
}

}  // namespace

ModelSpec builtin_model(const std::string& id, const std::map<std::string, long>& params) {
    if (id == "graph") return multigraph_spec("graph", 1);
    if (id == "oriented_graph") return multigraph_spec("oriented_graph", 2);
    if (id == "digraph") return multigraph_spec("digraph", 3);
    if (id == "multigraph") {
        long d = get_param(params, "d", id);
        if (d < 1) throw ValidationError("model 'multigraph' requires d >= 1");
        return multigraph_spec("multigraph(d=" + std::to_string(d) + ")", d);
    }
    if (id == "origami") return power_factorial_spec("origami", 2);
    if (id == "multilinear") {
        long d = get_param(params, "d", id);
        if (d < 2) throw ValidationError("model 'multilinear' requires d >= 2");
        return power_factorial_spec("multilinear(d=" + std::to_string(d) + ")", d);
    }
    if (id == "constellation") {
        long d = get_param(params, "d", id);
        if (d < 3) throw ValidationError("model 'constellation' requires d >= 3");
        return power_factorial_spec("constellation(d=" + std::to_string(d) + ")", d - 1);
    }
    if (id == "comb_map") {
        ModelSpec m;
        m.id = "comb_map";
        m.family = ModelFamily::kCombMap;
        m.period = 2;
        m.ratio_kind = RatioKind::kRationalInN;
        m.seq_class_known = true;
        m.oracle = OracleBinding::kCombMap;
        m.leading_term_in_size_units = true;
        m.count_fn = [](long n) -> Integer { return factorial(n) * odd_double_factorial(n - 1); };
        return m;
    }
    if (id == "ogem") {
        long D = get_param(params, "D", id);
        if (D < 2) throw ValidationError("model 'ogem' requires D >= 2");
        ModelSpec m;
        m.id = "ogem(D=" + std::to_string(D) + ")";
        m.family = ModelFamily::kOgem;
        m.param = D;
        m.period = 2;
        m.ratio_kind = RatioKind::kRationalInN;
        m.seq_class_known = true;
        m.oracle = OracleBinding::kOgemLift;
        m.count_fn = [D](long n) -> Integer {
            return factorial(n) * int_pow(factorial(n / 2), static_cast<unsigned long>(D - 1));
        };
        return m;
    }
    if (id == "triangulation") {
        ModelSpec m;
        m.id = "triangulation";
        m.family = ModelFamily::kTriangulation;
        m.period = 2;
        m.ratio_kind = RatioKind::kRationalInN;
        m.seq_class_known = false;
        m.count_fn = [](long n) -> Integer { return odd_double_factorial(3 * n - 1); };
        return m;
    }
    if (id == "quadrangulation") {
        ModelSpec m;
        m.id = "quadrangulation";
        m.family = ModelFamily::kQuadrangulation;
        m.period = 1;
        m.ratio_kind = RatioKind::kRationalInN;
        m.seq_class_known = false;
        m.count_fn = [](long n) -> Integer { return odd_double_factorial(4 * n - 1); };
        return m;
    }
    if (id == "quad_sts") {
        ModelSpec m;
        m.id = "quad_sts";
        m.family = ModelFamily::kQuadSts;
        m.period = 1;
        m.ratio_kind = RatioKind::kRationalInN;
        m.seq_class_known = false;
        m.count_fn = [](long n) -> Integer {
            Integer v = odd_double_factorial(2 * n - 1);
            return v * v;
        };
        return m;
    }
    if (id == "gem3") {
        ModelSpec m;
        m.id = "gem3";
        m.family = ModelFamily::kGem3;
        m.period = 2;
        m.ratio_kind = RatioKind::kRationalInN;
        m.seq_class_known = false;
        m.count_fn = [](long n) -> Integer { return int_pow(odd_double_factorial(n - 1), 4); };
        return m;
    }
    throw UsageError("unknown model '" + id + "'");
}

bool is_builtin_model_id(const std::string& id) {
    static const char* ids[] = {"graph",   "oriented_graph", "digraph",        "multigraph",
                                "origami", "multilinear",    "constellation",  "comb_map",
                                "ogem",    "triangulation",  "quadrangulation", "quad_sts",
                                "gem3"};
    for (const char* s : ids)
        if (id == s) return true;
    return false;
}

std::vector<ModelInfo> model_registry() {
    auto info = [](const std::string& id, const std::map<std::string, long>& params,
                   const std::string& note) {
        ModelSpec m = builtin_model(id, params);
        return ModelInfo{id, note, m.period, m.ratio_kind, m.seq_class_known,
                         m.oracle != OracleBinding::kNone};
    };
    return {
        info("graph", {}, ""),
        info("oriented_graph", {}, ""),
        info("digraph", {}, ""),
        info("multigraph", {{"d", 2}}, "d >= 1"),
        info("origami", {}, ""),
        info("multilinear", {{"d", 2}}, "d >= 2"),
        info("constellation", {{"d", 3}}, "d >= 3"),
        info("comb_map", {}, ""),
        info("ogem", {{"D", 2}}, "D >= 2"),
        info("triangulation", {}, ""),
        info("quadrangulation", {}, ""),
        info("quad_sts", {}, ""),
        info("gem3", {}, ""),
    };
}

std::vector<ModelSpec> canonical_models() {
    return {
        builtin_model("graph"),
        builtin_model("oriented_graph"),
        builtin_model("digraph"),
        builtin_model("multigraph", {{"d", 4}}),
        builtin_model("origami"),
        builtin_model("multilinear", {{"d", 3}}),
        builtin_model("constellation", {{"d", 3}}),
        builtin_model("comb_map"),
        builtin_model("ogem", {{"D", 2}}),
        builtin_model("ogem", {{"D", 3}}),
        builtin_model("triangulation"),
        builtin_model("quadrangulation"),
        builtin_model("quad_sts"),
        builtin_model("gem3"),
    };
}

ModelSpec custom_model_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open model file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("model file '" + path + "': invalid JSON: " + e.what());
    }
    if (!j.is_object()) throw ValidationError("model file '" + path + "': expected an object");
    if (!j.contains("label") || !j["label"].is_string())
        throw ValidationError("model file '" + path + "': missing string field 'label'");
    if (!j.contains("period") || !j["period"].is_number_integer())
        throw ValidationError("model file '" + path + "': missing integer field 'period'");
    if (!j.contains("terms") || !j["terms"].is_array())
        throw ValidationError("model file '" + path + "': missing array field 'terms'");

    CountingSequence seq;
    seq.label = j["label"].get<std::string>();
    seq.period = j["period"].get<int>();
    for (size_t i = 0; i < j["terms"].size(); ++i) {
        const auto& t = j["terms"][i];
        if (t.is_number_integer()) {
            seq.terms.emplace_back(static_cast<long>(t.get<long long>()));
        } else if (t.is_string()) {
            try {
                seq.terms.push_back(parse_integer(t.get<std::string>()));
            } catch (const ValidationError&) {
                throw ValidationError("model file '" + path + "': terms[" + std::to_string(i) +
                                      "] is not an integer");
            }
        } else {
            throw ValidationError("model file '" + path + "': terms[" + std::to_string(i) +
                                  "] must be an integer or a decimal string");
        }
    }
    validate_sequence(seq, /*require_unit_head=*/true);

    ModelSpec m;
    m.id = "custom:" + seq.label;
    m.family = ModelFamily::kCustom;
    m.period = seq.period;
    m.ratio_kind = RatioKind::kExponentialInN;
    m.seq_class_known = false;
    m.oracle = OracleBinding::kNone;
    auto table = std::make_shared<std::vector<Integer>>(std::move(seq.terms));
    const std::string id = m.id;
    m.count_fn = [table, id](long n) -> Integer {
        if (n >= static_cast<long>(table->size()))
            throw InsufficientDataError("model '" + id + "' has " +
                                        std::to_string(table->size()) + " terms, need " +
                                        std::to_string(n + 1) + " for size " + std::to_string(n));
        return (*table)[static_cast<size_t>(n)];
    };
    return m;
}

}  // namespace connprob
