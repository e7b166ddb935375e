#include "cliff/harness.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "cliff/duality.hpp"
#include "cliff/expectations.hpp"
#include "cliff/random_gen.hpp"
#include "cliff/super_tensor.hpp"

namespace cliff {

using nlohmann::ordered_json;

const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> names = {"duality",      "expectation", "hyperplane",
                                                   "intersection", "supercentre", "tensor"};
    return names;
}

std::vector<Subspace> RunConfig::parsed_subspaces() const {
    std::vector<Subspace> out;
    for (const auto& literal : subspace_literals) out.push_back(Subspace::parse(dim, literal));
    return out;
}

namespace {

int require_int(const ordered_json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ConfigError(path + ": expected an integer");
    return j.get<int>();
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("$: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("$: expected an object");

    RunConfig config;
    if (!j.contains("dim")) throw ConfigError("$.dim: missing");
    config.dim = require_int(j["dim"], "$.dim");
    if (config.dim < 0) throw ConfigError("$.dim: must be nonnegative");

    if (j.contains("dim_cap")) {
        config.dim_cap = require_int(j["dim_cap"], "$.dim_cap");
        if (config.dim_cap > kHardDimCap) throw ConfigError("$.dim_cap: exceeds the hard dimension cap 14");
    }
    if (config.dim > config.dim_cap)
        throw ConfigError("$.dim: dimension cap exceeded (dim " + std::to_string(config.dim) + " > cap " +
                          std::to_string(config.dim_cap) + ")");

    if (!j.contains("checks") || !j["checks"].is_array() || j["checks"].empty())
        throw ConfigError("$.checks: expected a nonempty array");
    std::set<std::string> checks;
    for (size_t i = 0; i < j["checks"].size(); ++i) {
        const auto& c = j["checks"][i];
        if (!c.is_string()) throw ConfigError("$.checks[" + std::to_string(i) + "]: expected a string");
        const std::string name = c.get<std::string>();
        const auto& known = all_check_names();
        if (std::find(known.begin(), known.end(), name) == known.end())
            throw ConfigError("$.checks[" + std::to_string(i) + "]: unknown check '" + name + "'");
        checks.insert(name);
    }
    config.checks.assign(checks.begin(), checks.end());

    if (j.contains("subspaces")) {
        if (!j["subspaces"].is_array()) throw ConfigError("$.subspaces: expected an array");
        for (size_t s = 0; s < j["subspaces"].size(); ++s) {
            const auto& lit = j["subspaces"][s];
            const std::string spath = "$.subspaces[" + std::to_string(s) + "]";
            if (!lit.is_array()) throw ConfigError(spath + ": expected an array of rows");
            std::vector<std::vector<std::string>> rows;
            for (size_t r = 0; r < lit.size(); ++r) {
                const auto& row = lit[r];
                const std::string rpath = spath + "[" + std::to_string(r) + "]";
                if (!row.is_array()) throw ConfigError(rpath + ": expected an array of scalars");
                if (static_cast<int>(row.size()) != config.dim)
                    throw ConfigError(rpath + ": row length does not match dim");
                std::vector<std::string> entries;
                for (size_t c = 0; c < row.size(); ++c) {
                    const auto& cell = row[c];
                    const std::string cpath = rpath + "[" + std::to_string(c) + "]";
                    if (!cell.is_string()) throw ConfigError(cpath + ": expected a scalar string");
                    try {
                        GaussianRational::parse(cell.get<std::string>());
                    } catch (const std::exception& e) {
                        throw ConfigError(cpath + ": " + e.what());
                    }
                    entries.push_back(cell.get<std::string>());
                }
                rows.push_back(std::move(entries));
            }
            config.subspace_literals.push_back(std::move(rows));
        }
    }

    if (j.contains("random")) {
        const auto& r = j["random"];
        if (!r.is_object()) throw ConfigError("$.random: expected an object");
        if (!r.contains("count")) throw ConfigError("$.random.count: missing");
        config.random.count = require_int(r["count"], "$.random.count");
        if (config.random.count < 0) throw ConfigError("$.random.count: must be nonnegative");
        if (config.random.count > 0) {
            if (!r.contains("seed")) throw ConfigError("$.random.seed: required when count > 0");
            if (!r["seed"].is_number_integer() && !r["seed"].is_number_unsigned())
                throw ConfigError("$.random.seed: expected an integer");
            config.random.seed = r["seed"].get<std::uint64_t>();
        }
        if (r.contains("dims")) {
            if (!r["dims"].is_array()) throw ConfigError("$.random.dims: expected an array");
            for (size_t i = 0; i < r["dims"].size(); ++i) {
                const int d = require_int(r["dims"][i], "$.random.dims[" + std::to_string(i) + "]");
                if (d < 0 || d > config.dim)
                    throw ConfigError("$.random.dims[" + std::to_string(i) + "]: out of range");
                config.random.dims.push_back(d);
            }
        }
    }
    if (config.random.dims.empty())
        for (int d = 0; d <= config.dim; ++d) config.random.dims.push_back(d);

    if (j.contains("coeff_bound")) {
        config.coeff_bound = require_int(j["coeff_bound"], "$.coeff_bound");
        if (config.coeff_bound < 1) throw ConfigError("$.coeff_bound: must be positive");
    }
    if (j.contains("rng")) {
        // the algorithm name is pinned so reports stay portable
        if (!j["rng"].is_string() || j["rng"].get<std::string>() != SeededRng::algorithm())
            throw ConfigError(std::string("$.rng: only '") + SeededRng::algorithm() + "' is supported");
    }
    if (j.contains("report")) {
        if (!j["report"].is_string()) throw ConfigError("$.report: expected a string");
        config.report_path = j["report"].get<std::string>();
    }
    return config;
}

namespace {

ordered_json config_echo(const RunConfig& config) {
    ordered_json echo;
    echo["dim"] = config.dim;
    echo["rng"] = SeededRng::algorithm();
    echo["checks"] = config.checks;
    echo["subspaces"] = config.subspace_literals;
    echo["random"] = {{"count", config.random.count},
                      {"dims", config.random.dims},
                      {"seed", config.random.seed}};
    echo["coeff_bound"] = config.coeff_bound;
    echo["dim_cap"] = config.dim_cap;
    return echo;
}

ordered_json subspace_json(const Subspace& s) { return ordered_json(s.to_literal()); }

class RecordBuilder {
public:
    RecordBuilder(const std::string& check, int index) {
        record_["check"] = check;
        record_["index"] = index;
        start_ = std::chrono::steady_clock::now();
    }

    ordered_json& input() { return record_["input"]; }
    ordered_json& dims() { return dims_; }
    void set_note(const std::string& note) { note_ = note; }

    ordered_json finish(bool pass, const std::optional<std::string>& counterexample) {
        const auto stop = std::chrono::steady_clock::now();
        record_["verdict"] = pass ? "PASS" : "FAIL";
        if (!dims_.is_null()) record_["dims"] = dims_;
        if (note_) record_["note"] = *note_;
        if (!pass)
            record_["counterexample"] = counterexample ? *counterexample : record_["input"].dump();
        record_["elapsed_ms"] =
            std::chrono::duration<double, std::milli>(stop - start_).count();
        return record_;
    }

private:
    ordered_json record_;
    ordered_json dims_;
    std::optional<std::string> note_;
    std::chrono::steady_clock::time_point start_;
};

int check_id(const std::string& name) {
    const auto& names = all_check_names();
    return static_cast<int>(std::find(names.begin(), names.end(), name) - names.begin());
}

/// Literal subspaces first, then `count` random ones with dimensions
/// cycling through the configured distribution.
std::vector<Subspace> gather_subspaces(const RunConfig& config, SeededRng& rng, bool real) {
    std::vector<Subspace> inputs = config.parsed_subspaces();
    for (int i = 0; i < config.random.count; ++i) {
        const int d = config.random.dims[i % config.random.dims.size()];
        inputs.push_back(random_subspace(config.dim, d, rng, config.coeff_bound, real));
    }
    return inputs;
}

void run_duality(const RunConfig& config, std::vector<ordered_json>& records) {
    SeededRng rng(substream_seed(config.random.seed, check_id("duality"), config.dim));
    const auto inputs = gather_subspaces(config, rng, false);
    for (size_t i = 0; i < inputs.size(); ++i) {
        const Subspace& w = inputs[i];
        RecordBuilder rb("duality", static_cast<int>(i));
        rb.input()["subspace"] = subspace_json(w);
        const DualityComputation computed = compute_twisted_duality(w);
        const DualityReport report = computed.report(w);
        rb.dims()["supercommutant"] = report.dim_supercommutant;
        rb.dims()["subalgebra"] = report.dim_subalgebra;
        rb.dims()["expected"] = 1 << (config.dim - w.dim());
        const bool dims_ok = report.dim_supercommutant == (1 << (config.dim - w.dim()));
        // Basis-independence: recombined generators must give the same
        // supercommutant and subalgebra span. The span side multiplies
        // out 2^d dense products, so it is limited to d <= 8; the
        // kernel side runs at every size.
        const auto gens = recombined_basis(w, rng, config.coeff_bound);
        bool recombined_ok = supercommutant_from_generators(config.dim, gens) == computed.commutant;
        if (recombined_ok && w.dim() <= 8)
            recombined_ok = subalgebra_span_from_generators(config.dim, gens) == subalgebra_span(w);
        if (report.complement_equals_w) rb.set_note("W-perp = W");
        if (!recombined_ok) rb.set_note("basis recombination changed the result");
        records.push_back(rb.finish(report.equal && dims_ok && recombined_ok, report.counterexample));
    }
}

void run_hyperplane(const RunConfig& config, std::vector<ordered_json>& records) {
    SeededRng rng(substream_seed(config.random.seed, check_id("hyperplane"), config.dim));
    const int n = config.dim;
    const int max_terms = std::min(8, 1 << n);

    std::vector<CoordRow> vectors;
    for (const auto& s : config.parsed_subspaces())
        if (s.dim() > 0) vectors.push_back(s.basis().front());
    if (n > 0)  // no nonzero w exists in dimension 0
        for (int i = 0; i < config.random.count; ++i)
            vectors.push_back(rng.nonzero_coord_row(n, config.coeff_bound));

    for (size_t i = 0; i < vectors.size(); ++i) {
        const CoordRow& w = vectors[i];
        const Multivector c = rng.multivector(n, max_terms, config.coeff_bound);
        RecordBuilder rb("hyperplane", static_cast<int>(i));
        rb.input()["w"] = Multivector::vector(w).str();
        rb.input()["c"] = c.str();
        const HyperplaneSplit split = hyperplane_decompose(c, w);
        CoordRow wbar(w.size());
        for (size_t k = 0; k < w.size(); ++k) wbar[k] = w[k].conj();
        const bool reconstructs = (split.a + Multivector::vector(wbar) * split.b == c);
        const AlgebraSubspace perp_algebra =
            subalgebra_span(Subspace::span(n, {w}).orthogonal_complement());
        const bool members = perp_algebra.contains(split.a) && perp_algebra.contains(split.b);
        const auto solved = hyperplane_decompose_by_solve(c, w);
        const bool unique_ok = solved && solved->a == split.a && solved->b == split.b;
        std::optional<std::string> counterexample;
        if (!(reconstructs && members && unique_ok)) counterexample = c.str();
        records.push_back(rb.finish(reconstructs && members && unique_ok, counterexample));
    }
}

void run_intersection(const RunConfig& config, std::vector<ordered_json>& records) {
    SeededRng rng(substream_seed(config.random.seed, check_id("intersection"), config.dim));
    int index = 0;
    const auto literals = config.parsed_subspaces();
    if (literals.size() >= 2) {
        RecordBuilder rb("intersection", index);
        ordered_json inputs = ordered_json::array();
        for (const auto& s : literals) inputs.push_back(subspace_json(s));
        rb.input()["subspaces"] = inputs;
        const IntersectionReport report = verify_intersection_theorem(literals);
        rb.dims()["algebra_side"] = report.dim_algebra_side;
        rb.dims()["subspace_side"] = report.dim_subspace_side;
        records.push_back(rb.finish(report.equal, report.counterexample));
        ++index;
    }
    for (int i = 0; i < config.random.count; ++i, ++index) {
        const size_t family = 2 + (i % 2);  // alternate pairs and triples
        std::vector<Subspace> subspaces;
        for (size_t k = 0; k < family; ++k) {
            const int d = config.random.dims[(i + k) % config.random.dims.size()];
            subspaces.push_back(random_subspace(config.dim, d, rng, config.coeff_bound));
        }
        RecordBuilder rb("intersection", index);
        ordered_json inputs = ordered_json::array();
        for (const auto& s : subspaces) inputs.push_back(subspace_json(s));
        rb.input()["subspaces"] = inputs;
        const IntersectionReport report = verify_intersection_theorem(subspaces);
        rb.dims()["algebra_side"] = report.dim_algebra_side;
        rb.dims()["subspace_side"] = report.dim_subspace_side;
        records.push_back(rb.finish(report.equal, report.counterexample));
    }
}

void run_supercentre(const RunConfig& config, std::vector<ordered_json>& records) {
    RecordBuilder rb("supercentre", 0);
    rb.input()["dim"] = config.dim;
    const AlgebraSubspace centre = supercentre(config.dim);
    rb.dims()["supercentre"] = centre.dim();
    const bool pass = (centre == AlgebraSubspace::scalars(config.dim));
    std::optional<std::string> counterexample;
    if (!pass)
        for (const auto& e : centre.basis())
            if (e != Multivector::unit(config.dim)) {
                counterexample = e.str();
                break;
            }
    records.push_back(rb.finish(pass, counterexample));
}

void run_tensor(const RunConfig& config, std::vector<ordered_json>& records) {
    SeededRng rng(substream_seed(config.random.seed, check_id("tensor"), config.dim));
    const int n = config.dim;
    const int max_terms = std::min(8, 1 << n);

    struct SplitInput {
        Subspace x;
        Subspace y;
    };
    std::vector<SplitInput> inputs;
    const auto literals = config.parsed_subspaces();
    for (size_t i = 0; i < literals.size(); i += 2) {
        const Subspace& x = literals[i];
        const Subspace y =
            (i + 1 < literals.size()) ? literals[i + 1] : x.orthogonal_complement();
        inputs.push_back({x, y});
    }
    for (int i = 0; i < config.random.count; ++i) {
        const BladeMask x_mask = static_cast<BladeMask>(rng.below(std::uint64_t(1) << n));
        const CoordinateSplit split = CoordinateSplit::of(n, x_mask);
        std::vector<CoordRow> x_rows, y_rows;
        for (int k = 0; k < n; ++k) {
            CoordRow row(n);
            row[k] = GaussianRational(1);
            if (split.x_mask & (BladeMask(1) << k)) x_rows.push_back(row);
            else y_rows.push_back(row);
        }
        inputs.push_back({Subspace::span(n, x_rows), Subspace::span(n, y_rows)});
    }

    for (size_t i = 0; i < inputs.size(); ++i) {
        RecordBuilder rb("tensor", static_cast<int>(i));
        rb.input()["x"] = subspace_json(inputs[i].x);
        rb.input()["y"] = subspace_json(inputs[i].y);
        try {
            const CoordinateSplit split = CoordinateSplit::from_subspaces(inputs[i].x, inputs[i].y);
            std::vector<Multivector> sample_vectors;
            std::vector<std::pair<Multivector, Multivector>> sample_pairs;
            for (int k = 0; k < 8; ++k) {
                sample_vectors.push_back(Multivector::vector(rng.coord_row(n, config.coeff_bound)));
                sample_pairs.emplace_back(rng.multivector(n, max_terms, config.coeff_bound),
                                          rng.multivector(n, max_terms, config.coeff_bound));
            }
            const PhiIsomorphismReport iso = verify_phi_isomorphism(split, sample_vectors, sample_pairs);
            const TensorDualityReport duality_report = verify_tensor_duality(split);
            rb.dims()["rank"] = iso.rank;
            rb.dims()["tensor_commutant"] = duality_report.dim;
            rb.dims()["expected_commutant"] = 1 << split.right_dim();
            const bool pass = iso.all_ok() && duality_report.equal && duality_report.transport_ok &&
                              duality_report.dim == (1 << split.right_dim());
            std::optional<std::string> counterexample = iso.counterexample;
            if (!counterexample) counterexample = duality_report.counterexample;
            records.push_back(rb.finish(pass, counterexample));
        } catch (const std::invalid_argument& e) {
            rb.set_note("precondition violated");
            records.push_back(rb.finish(false, std::string(e.what())));
        }
    }
}

void run_expectation(const RunConfig& config, std::vector<ordered_json>& records) {
    SeededRng rng(substream_seed(config.random.seed, check_id("expectation"), config.dim));
    const int n = config.dim;
    const int max_terms = std::min(8, 1 << n);
    const auto inputs = gather_subspaces(config, rng, true);

    for (size_t i = 0; i < inputs.size(); ++i) {
        const Subspace& m = inputs[i];
        RecordBuilder rb("expectation", static_cast<int>(i));
        rb.input()["subspace"] = subspace_json(m);
        try {
            if (!m.is_real()) throw std::invalid_argument("expectation check requires a real subspace");
            const ExpectationOperator e(m);
            const AlgebraSubspace commutant_algebra = subalgebra_span(m.orthogonal_complement());

            std::vector<Multivector> samples_a;
            for (int k = 0; k < 6; ++k)
                samples_a.push_back(rng.multivector(n, max_terms, config.coeff_bound, true));
            std::vector<std::pair<Multivector, Multivector>> samples_bc;
            for (int k = 0; k < 3; ++k) {
                Multivector b = Multivector::zero(n);
                Multivector c = Multivector::zero(n);
                for (int t = 0; t < 3; ++t) {
                    const auto& basis = commutant_algebra.basis();
                    b = b + basis[rng.below(basis.size())] * GaussianRational(rng.rational(config.coeff_bound));
                    c = c + basis[rng.below(basis.size())] * GaussianRational(rng.rational(config.coeff_bound));
                }
                samples_bc.emplace_back(b, c);
            }
            const ExpectationPropertiesReport props =
                verify_expectation_properties(e, samples_a, samples_bc);

            bool positivity_ok = true;
            std::optional<std::string> counterexample = props.counterexample;
            if (!e.ortho_basis().empty()) {
                for (int k = 0; k < 2; ++k) {
                    const auto& u = e.ortho_basis()[rng.below(e.ortho_basis().size())];
                    const PositivityReport pos = verify_positivity_identity(
                        u, rng.multivector(n, max_terms, config.coeff_bound, true));
                    if (!pos.all_ok()) {
                        positivity_ok = false;
                        if (!counterexample) counterexample = pos.counterexample;
                    }
                }
            }

            // Stabilization with X = M and a built inside C(N).
            const Subspace n_space =
                random_subspace(n, static_cast<int>(rng.below(n + 1)), rng, config.coeff_bound, true);
            Multivector a = Multivector::zero(n);
            const AlgebraSubspace n_algebra = subalgebra_span(n_space);
            const auto& n_basis = n_algebra.basis();
            for (int t = 0; t < 3; ++t)
                a = a + n_basis[rng.below(n_basis.size())] * GaussianRational(rng.rational(config.coeff_bound));
            const StabilizationReport stab = verify_stabilization(a, m, n_space);
            if (!stab.all_ok() && !counterexample) counterexample = stab.counterexample;

            const RealDualityReport real_duality = verify_real_duality(m);
            const bool real_ok = real_duality.fixed_by_expectation_ok &&
                                 real_duality.contained_in_complement_ok && real_duality.matches_duality_ok;

            rb.dims()["commutant"] = real_duality.dim;
            rb.dims()["stabilization_chain"] = stab.chain_length;
            const bool pass = props.all_ok() && positivity_ok && stab.all_ok() && real_ok;
            records.push_back(rb.finish(pass, counterexample));
        } catch (const std::invalid_argument& e) {
            rb.set_note("precondition violated");
            records.push_back(rb.finish(false, std::string(e.what())));
        }
    }
}

}  // namespace

ordered_json run(const RunConfig& config) {
    std::vector<ordered_json> records;
    for (const auto& check : config.checks) {
        if (check == "duality") run_duality(config, records);
        else if (check == "expectation") run_expectation(config, records);
        else if (check == "hyperplane") run_hyperplane(config, records);
        else if (check == "intersection") run_intersection(config, records);
        else if (check == "supercentre") run_supercentre(config, records);
        else if (check == "tensor") run_tensor(config, records);
    }
    int failed = 0;
    for (const auto& r : records)
        if (r["verdict"] == "FAIL") ++failed;
    ordered_json out;
    out["config"] = config_echo(config);
    out["records"] = records;
    out["summary"] = {{"total", records.size()}, {"failed", failed}};
    return out;
}

ordered_json run_suite(const std::vector<RunConfig>& configs) {
    ordered_json report;
    report["tool"] = "cliffdual-verify";
    report["rng"] = SeededRng::algorithm();
    report["runs"] = ordered_json::array();
    int total = 0;
    int failed = 0;
    for (const auto& config : configs) {
        ordered_json one = run(config);
        total += one["summary"]["total"].get<int>();
        failed += one["summary"]["failed"].get<int>();
        report["runs"].push_back(std::move(one));
    }
    report["summary"] = {{"total", total}, {"failed", failed}};
    return report;
}

int report_failures(const nlohmann::ordered_json& report) {
    return report["summary"]["failed"].get<int>();
}

std::string human_summary(const ordered_json& report) {
    std::string out;
    for (const auto& run_report : report["runs"]) {
        const int dim = run_report["config"]["dim"].get<int>();
        for (const auto& r : run_report["records"]) {
            out += r["verdict"].get<std::string>() + "  n=" + std::to_string(dim) + "  " +
                   r["check"].get<std::string>() + "[" + std::to_string(r["index"].get<int>()) + "]";
            if (r.contains("note")) out += "  (" + r["note"].get<std::string>() + ")";
            out += "\n";
        }
    }
    const auto& s = report["summary"];
    out += "total " + std::to_string(s["total"].get<int>()) + ", failed " +
           std::to_string(s["failed"].get<int>()) + "\n";
    return out;
}

ordered_json scrub_timing(const ordered_json& report) {
    ordered_json out = report;
    if (out.is_object()) {
        out.erase("elapsed_ms");
        for (auto& [key, value] : out.items()) value = scrub_timing(value);
    } else if (out.is_array()) {
        for (auto& value : out) value = scrub_timing(value);
    }
    return out;
}

}  // namespace cliff
