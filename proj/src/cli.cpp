#include <connprob/cli.hpp>

#include <connprob/decomp.hpp>
#include <connprob/diagnostics.hpp>
#include <connprob/expansion.hpp>
#include <connprob/models.hpp>
#include <connprob/rational.hpp>
#include <connprob/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <unistd.h>

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace connprob::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

// ---------------------------------------------------------------- options

struct CommonOpts {
    std::string model_id;
    std::string model_file;
    std::vector<std::string> params;
    std::string format = "table";
    int decimal = -1;
    std::string cache_dir;
    bool no_cache = false;
};

void add_common(CLI::App* sc, CommonOpts& o, bool with_model = true) {
    if (with_model) {
        sc->add_option("--model", o.model_id, "builtin model id (see `models`)");
        sc->add_option("--model-file", o.model_file, "JSON file with a custom counting sequence");
        sc->add_option("--param", o.params, "model parameter as key=value (repeatable)");
    }
    sc->add_option("--format", o.format, "output format: table|json")
        ->check(CLI::IsMember({"table", "json"}));
    sc->add_option("--decimal", o.decimal, "also render rationals to K decimal digits")
        ->check(CLI::NonNegativeNumber);
    sc->add_option("--cache-dir", o.cache_dir, "cache directory");
    sc->add_flag("--no-cache", o.no_cache, "disable the result cache");
}

std::map<std::string, long> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, long> out;
    for (const auto& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == kv.size())
            throw UsageError("--param expects key=value, got '" + kv + "'");
        const std::string key = kv.substr(0, eq);
        const std::string val = kv.substr(eq + 1);
        try {
            size_t used = 0;
            long v = std::stol(val, &used);
            if (used != val.size()) throw std::invalid_argument(val);
            out[key] = v;
        } catch (const std::exception&) {
            throw UsageError("--param " + key + ": '" + val + "' is not an integer");
        }
    }
    return out;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct ResolvedModel {
    ModelSpec spec;
    std::string cache_id;  // stable identity for cache keys
};

ResolvedModel resolve_model(const CommonOpts& o) {
    if (!o.model_id.empty() && !o.model_file.empty())
        throw UsageError("give either --model or --model-file, not both");
    if (!o.model_id.empty()) {
        if (!is_builtin_model_id(o.model_id)) throw UsageError("unknown model '" + o.model_id + "'");
        ModelSpec spec = builtin_model(o.model_id, parse_params(o.params));
        return {spec, spec.id};
    }
    if (!o.model_file.empty()) {
        if (!o.params.empty())
            throw UsageError("--param is only valid with builtin models");
        ModelSpec spec = custom_model_from_file(o.model_file);
        std::ifstream in(o.model_file, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        std::ostringstream id;
        id << spec.id << "#" << std::hex << fnv1a64(buf.str());
        return {spec, id.str()};
    }
    throw UsageError("a model is required (--model or --model-file)");
}

std::pair<long, long> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos)
        throw UsageError("--range expects A..B, got '" + s + "'");
    try {
        size_t u1 = 0, u2 = 0;
        long a = std::stol(s.substr(0, dots), &u1);
        long b = std::stol(s.substr(dots + 2), &u2);
        if (u1 != dots || u2 != s.size() - dots - 2) throw std::invalid_argument(s);
        if (a < 0 || b < a) throw UsageError("--range needs 0 <= A <= B, got '" + s + "'");
        return {a, b};
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("--range expects integers A..B, got '" + s + "'");
    }
}

// ---------------------------------------------------------------- cache

class ResultCache {
  public:
    ResultCache(const std::string& dir_flag, bool disabled) : enabled_(!disabled) {
        if (!enabled_) return;
        if (!dir_flag.empty()) {
            dir_ = dir_flag;
        } else if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
            dir_ = fs::path(xdg) / "connprob";
        } else if (const char* home = std::getenv("HOME"); home && *home) {
            dir_ = fs::path(home) / ".cache" / "connprob";
        } else {
            dir_ = fs::temp_directory_path() / "connprob-cache";
        }
    }

    std::optional<json> get(const std::string& key) const {
        if (!enabled_) return std::nullopt;
        try {
            std::ifstream in(path_for(key));
            if (!in) return std::nullopt;
            json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
            if (j.is_discarded() || !j.is_object()) return std::nullopt;
            if (!j.contains("key") || j["key"] != key) return std::nullopt;
            if (!j.contains("payload")) return std::nullopt;
            return j["payload"];
        } catch (...) {
            return std::nullopt;  // unreadable cache entries are ignored
        }
    }

    void put(const std::string& key, const json& payload) const {
        if (!enabled_) return;
        try {
            fs::create_directories(dir_);
            json envelope;
            envelope["key"] = key;
            envelope["payload"] = payload;
            const fs::path final_path = path_for(key);
            const fs::path tmp = final_path.string() + ".tmp" + std::to_string(::getpid());
            {
                std::ofstream out(tmp, std::ios::trunc);
                out << envelope.dump(2) << "\n";
                if (!out) {
                    std::error_code ec;
                    fs::remove(tmp, ec);
                    return;
                }
            }
            std::error_code ec;
            fs::rename(tmp, final_path, ec);  // atomic within the directory
            if (ec) fs::remove(tmp, ec);
        } catch (...) {
            // the cache is best-effort; failures never affect results
        }
    }

  private:
    fs::path path_for(const std::string& key) const {
        std::string name;
        for (char c : key)
            name += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.')
                        ? c
                        : '_';
        std::ostringstream h;
        h << std::hex << fnv1a64(key);
        return dir_ / (name + "-" + h.str() + ".json");
    }

    bool enabled_;
    fs::path dir_;
};

// Computes the payload through the cache: on a hit the stored payload is
// returned untouched, otherwise `compute` runs and the result is stored.
template <typename Fn>
json cached(const ResultCache& cache, const std::string& key, Fn&& compute) {
    if (auto hit = cache.get(key)) return *hit;
    json payload = compute();
    cache.put(key, payload);
    return payload;
}

// ---------------------------------------------------------------- helpers

json rational_json(const Rational& r) {
    json j;
    j["numerator"] = r.get_num().get_str();
    j["denominator"] = r.get_den().get_str();
    return j;
}

Rational rational_from_json(const json& j) {
    return make_rational(parse_integer(j.at("numerator").get<std::string>()),
                         parse_integer(j.at("denominator").get<std::string>()));
}

std::string rational_text(const json& j) {
    const std::string num = j.at("numerator").get<std::string>();
    const std::string den = j.at("denominator").get<std::string>();
    return den == "1" ? num : num + "/" + den;
}

// Adds "decimal" next to every {"numerator","denominator"} object (display-only).
void decorate_decimals(json& j, int digits) {
    if (digits < 0) return;
    if (j.is_object()) {
        if (j.contains("numerator") && j.contains("denominator")) {
            j["decimal"] = to_decimal(rational_from_json(j), digits);
            return;
        }
        for (auto& [key, value] : j.items()) {
            (void)key;
            decorate_decimals(value, digits);
        }
    } else if (j.is_array()) {
        for (auto& v : j) decorate_decimals(v, digits);
    }
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void print(std::ostream& out) const {
        std::vector<size_t> w(header.size());
        for (size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
        for (const auto& r : rows)
            for (size_t i = 0; i < r.size() && i < w.size(); ++i)
                w[i] = std::max(w[i], r[i].size());
        auto line = [&](const std::vector<std::string>& cells) {
            for (size_t i = 0; i < cells.size(); ++i) {
                if (i) out << "  ";
                out << std::left << std::setw(static_cast<int>(w[i])) << cells[i];
            }
            out << "\n";
        };
        line(header);
        std::vector<std::string> rule;
        for (size_t i = 0; i < header.size(); ++i) rule.push_back(std::string(w[i], '-'));
        line(rule);
        for (const auto& r : rows) line(r);
    }
};

void emit(const json& payload, const CommonOpts& o, std::ostream& out,
          const std::function<void(const json&, std::ostream&)>& table_renderer) {
    json decorated = payload;
    decorate_decimals(decorated, o.decimal);
    if (o.format == "json") {
        out << decorated.dump(2) << "\n";
    } else {
        table_renderer(decorated, out);
    }
}

std::string maybe_decimal_cell(const json& v) {
    std::string cell = rational_text(v);
    if (v.contains("decimal")) cell += "  (~" + v["decimal"].get<std::string>() + ")";
    return cell;
}

// ---------------------------------------------------------------- payloads

json payload_counts(const ModelSpec& model, long from, long to, const char* field) {
    json j;
    j["model"] = model.id;
    j["period"] = model.period;
    j["from"] = from;
    j["to"] = to;
    json terms = json::array();
    if (std::string(field) == "connected") {
        CountingSequence c = connected_counts(model, static_cast<int>(to));
        for (long n = from; n <= to; ++n)
            terms.push_back(c.terms[static_cast<size_t>(n)].get_str());
    } else {
        for (long n = from; n <= to; ++n) terms.push_back(model.count(n).get_str());
    }
    j[field] = std::move(terms);
    return j;
}

json payload_derivative(const ModelSpec& model, int order) {
    DerivedSequences der = derivative_coeffs(model, order);
    json j;
    j["model"] = model.id;
    j["period"] = model.period;
    j["order"] = order;
    j["interpretation_claimed"] = der.interpretation_claimed;
    json terms = json::array();
    for (int k = 1; k <= order; ++k) {
        json t;
        t["k"] = k;
        t["size"] = static_cast<long>(k) * model.period;
        t["delta"] = rational_json(der.delta[static_cast<size_t>(k) - 1]);
        const auto& d = der.d[static_cast<size_t>(k) - 1];
        t["d"] = d ? json(d->get_str()) : json(nullptr);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

json payload_expand(const ModelSpec& model, int r, std::optional<long> at) {
    ExpansionTermList list = term_list(model, r);
    json j;
    j["model"] = model.id;
    j["period"] = model.period;
    j["r"] = r;
    json terms = json::array();
    for (const auto& t : list.terms) {
        json e;
        e["k"] = t.k;
        e["size"] = static_cast<long>(t.k) * model.period;
        e["delta"] = rational_json(t.delta);
        e["d"] = t.d ? json(t.d->get_str()) : json(nullptr);
        e["formula"] = t.formula;
        terms.push_back(std::move(e));
    }
    j["terms"] = std::move(terms);
    if (at) {
        json v;
        v["n"] = *at;
        v["size"] = *at * model.period;
        v["value"] = rational_json(evaluate_at(list, *at));
        j["at"] = std::move(v);
    }
    return j;
}

json payload_series(const ModelSpec& model, int r) {
    InvNSeries s = inv_n_series(model, r);
    json j;
    j["model"] = model.id;
    j["period"] = model.period;
    j["r"] = r;
    j["convention"] = s.convention;
    json coeffs = json::array();
    for (int k = 1; k <= r; ++k) {
        json c;
        c["order"] = k;
        const Rational e = s.coefficient(k);
        c["numerator"] = e.get_num().get_str();
        c["denominator"] = e.get_den().get_str();
        coeffs.push_back(std::move(c));
    }
    j["coefficients"] = std::move(coeffs);
    return j;
}

json payload_exact(const ModelSpec& model, long from, long to) {
    json j;
    j["model"] = model.id;
    j["period"] = model.period;
    json values = json::array();
    for (long n = from; n <= to; ++n) {
        if (n % model.period != 0) continue;  // ranges skip off-lattice sizes
        if (n == 0) continue;
        json v;
        v["size"] = n;
        v["probability"] = rational_json(exact_probability(model, n));
        values.push_back(std::move(v));
    }
    if (values.empty())
        throw DomainError("model '" + model.id + "': no on-lattice sizes in " +
                          std::to_string(from) + ".." + std::to_string(to));
    j["values"] = std::move(values);
    return j;
}

json payload_verify(const VerifyReport& rep) {
    json j;
    j["model"] = rep.model_id;
    j["has_oracle"] = rep.has_oracle;
    j["ok"] = rep.ok;
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e;
        e["name"] = c.name;
        e["index"] = c.index;
        e["expected"] = c.expected.get_str();
        e["actual"] = c.actual.get_str();
        e["ok"] = c.ok;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    return j;
}

json payload_diagnose(const GargantuanReport& rep) {
    json j;
    j["label"] = rep.label;
    j["window"] = json::array({rep.window_lo, rep.window_hi});
    j["r_max"] = rep.r_max;
    j["verdict"] = to_string(rep.verdict);
    json viol = json::array();
    for (const auto& v : rep.violations) viol.push_back(v);
    j["violations"] = std::move(viol);
    auto rats = [](const std::vector<Rational>& vs) {
        json a = json::array();
        for (const auto& v : vs) a.push_back(to_string(v));
        return a;
    };
    j["back_ratio"] = rats(rep.back_ratio);
    j["scaled_ratio"] = rats(rep.scaled_ratio);
    json sums = json::array();
    for (const auto& row : rep.tail_sum) sums.push_back(rats(row));
    j["tail_sums"] = std::move(sums);
    j["products_monotone"] = rep.products_monotone;
    return j;
}

// ---------------------------------------------------------------- tables

void table_counts(const json& p, std::ostream& out, const char* field) {
    Table t;
    t.header = {"size", field};
    long n = p["from"].get<long>();
    for (const auto& v : p[field]) t.rows.push_back({std::to_string(n++), v.get<std::string>()});
    t.print(out);
}

void table_derivative(const json& p, std::ostream& out) {
    Table t;
    t.header = {"k", "size", "delta", "d"};
    for (const auto& e : p["terms"])
        t.rows.push_back({std::to_string(e["k"].get<int>()),
                          std::to_string(e["size"].get<long>()), maybe_decimal_cell(e["delta"]),
                          e["d"].is_null() ? "-" : e["d"].get<std::string>()});
    t.print(out);
    if (!p["interpretation_claimed"].get<bool>())
        out << "(no combinatorial interpretation claimed for these values)\n";
}

void table_expand(const json& p, std::ostream& out) {
    Table t;
    t.header = {"k", "size", "delta", "d", "term"};
    for (const auto& e : p["terms"])
        t.rows.push_back({std::to_string(e["k"].get<int>()),
                          std::to_string(e["size"].get<long>()), maybe_decimal_cell(e["delta"]),
                          e["d"].is_null() ? "-" : e["d"].get<std::string>(),
                          e["formula"].get<std::string>()});
    t.print(out);
    if (p.contains("at")) {
        const auto& v = p["at"];
        out << "value at n = " << v["n"].get<long>() << " (size " << v["size"].get<long>()
            << "): " << maybe_decimal_cell(v["value"]) << "\n";
    }
}

void table_series(const json& p, std::ostream& out) {
    out << "P ~ 1 - sum e_j / n^j   [" << p["convention"].get<std::string>() << "]\n";
    Table t;
    t.header = {"order", "e_j"};
    for (const auto& c : p["coefficients"])
        t.rows.push_back({std::to_string(c["order"].get<int>()), maybe_decimal_cell(c)});
    t.print(out);
}

void table_exact(const json& p, std::ostream& out) {
    Table t;
    t.header = {"size", "P(connected)"};
    for (const auto& v : p["values"])
        t.rows.push_back({std::to_string(v["size"].get<long>()),
                          maybe_decimal_cell(v["probability"])});
    t.print(out);
}

void table_verify(const json& p, std::ostream& out) {
    if (!p["has_oracle"].get<bool>()) {
        out << p["model"].get<std::string>() << ": no oracle binding (skipped)\n";
        return;
    }
    Table t;
    t.header = {"check", "index", "expected", "actual", "ok"};
    for (const auto& c : p["checks"])
        t.rows.push_back({c["name"].get<std::string>(), std::to_string(c["index"].get<long>()),
                          c["expected"].get<std::string>(), c["actual"].get<std::string>(),
                          c["ok"].get<bool>() ? "yes" : "NO"});
    t.print(out);
    out << p["model"].get<std::string>() << ": "
        << (p["ok"].get<bool>() ? "all checks passed" : "MISMATCH FOUND") << "\n";
}

void table_diagnose(const json& p, std::ostream& out) {
    out << p["label"].get<std::string>() << ", window [" << p["window"][0].get<long>() << ", "
        << p["window"][1].get<long>() << "], r_max " << p["r_max"].get<int>() << ": "
        << p["verdict"].get<std::string>() << "\n";
    for (const auto& v : p["violations"]) out << "  violation: " << v.get<std::string>() << "\n";
}

// ---------------------------------------------------------------- driver

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact connectivity probabilities for rapidly growing labeled classes"};
    app.require_subcommand(1);

    // models
    CommonOpts mo;
    CLI::App* sc_models = app.add_subcommand("models", "list builtin models");
    add_common(sc_models, mo, /*with_model=*/false);

    // coeffs / connected
    CommonOpts co;
    long co_order = -1;
    std::string co_range;
    long co_at = -1;
    CLI::App* sc_coeffs = app.add_subcommand("coeffs", "ambient counting sequence");
    add_common(sc_coeffs, co);
    sc_coeffs->add_option("-r,--order", co_order, "max size (prints sizes 0..r)");
    sc_coeffs->add_option("--range", co_range, "size range A..B");
    sc_coeffs->add_option("--at", co_at, "single size");

    CommonOpts no;
    long nn_order = -1;
    std::string nn_range;
    long nn_at = -1;
    CLI::App* sc_conn = app.add_subcommand("connected", "connected counting sequence");
    add_common(sc_conn, no);
    sc_conn->add_option("-r,--order", nn_order, "max size (prints sizes 0..r)");
    sc_conn->add_option("--range", nn_range, "size range A..B");
    sc_conn->add_option("--at", nn_at, "single size");

    // derivative
    CommonOpts dv;
    int dv_order = 8;
    CLI::App* sc_der = app.add_subcommand("derivative", "derivative sequence (SEQ decomposition)");
    add_common(sc_der, dv);
    sc_der->add_option("-r,--order", dv_order, "number of lattice coefficients");

    // expand
    CommonOpts ex;
    int ex_r = 3;
    long ex_at = -1;
    CLI::App* sc_exp = app.add_subcommand("expand", "correction terms of P(connected)");
    add_common(sc_exp, ex);
    sc_exp->add_option("-r,--order", ex_r, "number of correction terms");
    sc_exp->add_option("--at", ex_at, "evaluate the truncated expansion at lattice index n");

    // series
    CommonOpts se;
    int se_r = 3;
    CLI::App* sc_ser = app.add_subcommand("series", "1/n expansion of P(connected)");
    add_common(sc_ser, se);
    sc_ser->add_option("-r,--order", se_r, "series truncation order");

    // exact
    CommonOpts xa;
    long xa_at = -1;
    std::string xa_range;
    CLI::App* sc_exa = app.add_subcommand("exact", "exact connectivity probability");
    add_common(sc_exa, xa);
    sc_exa->add_option("--at", xa_at, "object size");
    sc_exa->add_option("--range", xa_range, "size range A..B");

    // verify
    CommonOpts ve;
    std::int64_t ve_budget = 5'000'000;
    CLI::App* sc_ver = app.add_subcommand("verify", "cross-check against exhaustive enumeration");
    add_common(sc_ver, ve);
    sc_ver->add_option("--budget", ve_budget, "max enumeration states per check");

    // diagnose
    CommonOpts di;
    std::string di_window = "5..24";
    int di_rmax = 3;
    std::string di_product;
    CLI::App* sc_dia = app.add_subcommand("diagnose", "growth consistency check");
    add_common(sc_dia, di);
    sc_dia->add_option("--window", di_window, "lattice window A..B");
    sc_dia->add_option("--r-max", di_rmax, "max tail-sum order");
    sc_dia->add_option("--product-with", di_product,
                       "check the normalized product with this builtin model");

    try {
        std::vector<const char*> argv;
        argv.push_back("connprob");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    auto range_of = [](long order, const std::string& range, long at, long dflt)
        -> std::pair<long, long> {
        const int given = (order >= 0) + (!range.empty()) + (at >= 0);
        if (given > 1) throw UsageError("give at most one of -r, --range, --at");
        if (order >= 0) return {0, order};
        if (at >= 0) return {at, at};
        if (!range.empty()) return parse_range(range);
        return {0, dflt};
    };

    if (sc_models->parsed()) {
        json payload = json::object();
        json arr = json::array();
        for (const auto& m : model_registry()) {
            json e;
            e["id"] = m.id;
            e["params"] = m.params;
            e["period"] = m.period;
            e["ratio_kind"] = to_string(m.ratio_kind);
            e["seq_class_known"] = m.seq_class_known;
            e["oracle"] = m.has_oracle;
            arr.push_back(std::move(e));
        }
        payload["models"] = std::move(arr);
        emit(payload, mo, out, [](const json& p, std::ostream& os) {
            Table t;
            t.header = {"id", "params", "period", "ratio", "classes", "oracle"};
            for (const auto& e : p["models"])
                t.rows.push_back({e["id"].get<std::string>(), e["params"].get<std::string>(),
                                  std::to_string(e["period"].get<int>()),
                                  e["ratio_kind"].get<std::string>(),
                                  e["seq_class_known"].get<bool>() ? "known" : "numbers-only",
                                  e["oracle"].get<bool>() ? "yes" : "no"});
            t.print(os);
        });
        return 0;
    }

    if (sc_coeffs->parsed() || sc_conn->parsed()) {
        const bool conn = sc_conn->parsed();
        const CommonOpts& o = conn ? no : co;
        ResolvedModel rm = resolve_model(o);
        auto [from, to] = conn ? range_of(nn_order, nn_range, nn_at, 10)
                               : range_of(co_order, co_range, co_at, 10);
        const char* field = conn ? "connected" : "terms";
        ResultCache cache(o.cache_dir, o.no_cache);
        const std::string key = std::string(conn ? "connected" : "coeffs") + "|" + rm.cache_id +
                                "|" + std::to_string(from) + "|" + std::to_string(to);
        json payload = cached(cache, key, [&] { return payload_counts(rm.spec, from, to, field); });
        emit(payload, o, out,
             [field](const json& p, std::ostream& os) { table_counts(p, os, field); });
        return 0;
    }

    if (sc_der->parsed()) {
        ResolvedModel rm = resolve_model(dv);
        if (dv_order < 1) throw UsageError("-r must be >= 1");
        ResultCache cache(dv.cache_dir, dv.no_cache);
        const std::string key = "derivative|" + rm.cache_id + "|" + std::to_string(dv_order);
        json payload = cached(cache, key, [&] { return payload_derivative(rm.spec, dv_order); });
        emit(payload, dv, out, table_derivative);
        return 0;
    }

    if (sc_exp->parsed()) {
        ResolvedModel rm = resolve_model(ex);
        if (ex_r < 0) throw UsageError("-r must be >= 0");
        std::optional<long> at;
        if (ex_at >= 0) at = ex_at;
        ResultCache cache(ex.cache_dir, ex.no_cache);
        const std::string key = "expand|" + rm.cache_id + "|" + std::to_string(ex_r) + "|" +
                                (at ? std::to_string(*at) : "-");
        json payload = cached(cache, key, [&] { return payload_expand(rm.spec, ex_r, at); });
        emit(payload, ex, out, table_expand);
        return 0;
    }

    if (sc_ser->parsed()) {
        ResolvedModel rm = resolve_model(se);
        if (se_r < 1) throw UsageError("-r must be >= 1");
        ResultCache cache(se.cache_dir, se.no_cache);
        const std::string key = "series|" + rm.cache_id + "|" + std::to_string(se_r);
        json payload = cached(cache, key, [&] { return payload_series(rm.spec, se_r); });
        emit(payload, se, out, table_series);
        return 0;
    }

    if (sc_exa->parsed()) {
        ResolvedModel rm = resolve_model(xa);
        if (xa_at < 0 && xa_range.empty()) throw UsageError("exact needs --at N or --range A..B");
        auto [from, to] = range_of(-1, xa_range, xa_at, 0);
        ResultCache cache(xa.cache_dir, xa.no_cache);
        const std::string key = "exact|" + rm.cache_id + "|" + std::to_string(from) + "|" +
                                std::to_string(to);
        // single --at on an off-lattice size is a hard error; ranges just skip
        if (xa_at >= 0 && (xa_at == 0 || xa_at % rm.spec.period != 0))
            throw DomainError("model '" + rm.spec.id + "': no objects of size " +
                              std::to_string(xa_at) + " (period " +
                              std::to_string(rm.spec.period) + ")");
        json payload = cached(cache, key, [&] { return payload_exact(rm.spec, from, to); });
        emit(payload, xa, out, table_exact);
        return 0;
    }

    if (sc_ver->parsed()) {
        bool all_ok = true;
        json payload;
        if (!ve.model_id.empty() || !ve.model_file.empty()) {
            ResolvedModel rm = resolve_model(ve);
            VerifyReport rep = verify_model(rm.spec, ve_budget);
            all_ok = rep.ok;
            payload = payload_verify(rep);
            emit(payload, ve, out, table_verify);
        } else {
            json reports = json::array();
            std::vector<json> tables;
            for (const auto& spec : canonical_models()) {
                if (spec.oracle == OracleBinding::kNone) continue;
                VerifyReport rep = verify_model(spec, ve_budget);
                all_ok = all_ok && rep.ok;
                reports.push_back(payload_verify(rep));
            }
            payload["ok"] = all_ok;
            payload["reports"] = std::move(reports);
            emit(payload, ve, out, [](const json& p, std::ostream& os) {
                for (const auto& r : p["reports"]) table_verify(r, os);
                os << (p["ok"].get<bool>() ? "verification passed" : "VERIFICATION FAILED")
                   << "\n";
            });
        }
        return all_ok ? 0 : 1;
    }

    if (sc_dia->parsed()) {
        ResolvedModel rm = resolve_model(di);
        auto [lo, hi] = parse_range(di_window);
        GargantuanReport rep;
        if (!di_product.empty()) {
            if (!is_builtin_model_id(di_product))
                throw UsageError("unknown model '" + di_product + "'");
            ModelSpec other = builtin_model(di_product);
            if (other.period != rm.spec.period)
                throw DomainError("product check: periods differ");
            rep = product_check(rm.spec.counts(hi * rm.spec.period),
                                other.counts(hi * other.period), lo, hi, di_rmax);
        } else {
            rep = gargantuan_check(rm.spec.counts(hi * rm.spec.period), lo, hi, di_rmax);
        }
        json payload = payload_diagnose(rep);
        emit(payload, di, out, table_diagnose);
        return 0;
    }

    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(args, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const InsufficientDataError& e) {
        err << "insufficient data: " << e.what() << "\n";
        return 1;
    } catch (const BudgetError& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace connprob::cli
