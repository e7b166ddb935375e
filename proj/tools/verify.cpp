#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cliff/harness.hpp"

namespace {

cliff::RunConfig all_suite_config(int dim, std::uint64_t seed, const std::vector<std::string>& checks,
                                  int count) {
    cliff::RunConfig config;
    config.dim = dim;
    config.checks = checks;
    config.random.count = count;
    config.random.seed = seed;
    for (int d = 0; d <= dim; ++d) config.random.dims.push_back(d);
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Clifford superalgebra verification suites"};

    std::string config_path;
    std::string report_path;
    std::string checks_arg;
    bool run_all = false;
    int dim = -1;
    std::uint64_t seed = cliff::kDefaultSeed;
    int count = cliff::kDefaultRandomCount;

    auto* config_opt = app.add_option("--config", config_path, "JSON run configuration");
    auto* all_opt = app.add_flag("--all", run_all, "run every check at n in {2..6}");
    app.add_option("--dim", dim, "restrict --all to a single ambient dimension")->needs(all_opt);
    app.add_option("--seed", seed, "random seed for --all (default 1)")->needs(all_opt);
    app.add_option("--count", count, "random subspaces per check for --all (default 25)")->needs(all_opt);
    app.add_option("--checks", checks_arg, "comma-separated subset of checks");
    app.add_option("--report", report_path, "write the JSON report to this path");
    all_opt->excludes(config_opt);

    CLI11_PARSE(app, argc, argv);

    if (config_path.empty() == !run_all) {
        std::cerr << "error: exactly one of --config or --all is required\n";
        return 2;
    }

    std::vector<std::string> checks = cliff::all_check_names();
    if (!checks_arg.empty()) {
        checks.clear();
        std::stringstream ss(checks_arg);
        std::string name;
        while (std::getline(ss, name, ',')) {
            const auto& known = cliff::all_check_names();
            if (std::find(known.begin(), known.end(), name) == known.end()) {
                std::cerr << "error: unknown check '" << name << "'\n";
                return 2;
            }
            checks.push_back(name);
        }
        std::sort(checks.begin(), checks.end());
        checks.erase(std::unique(checks.begin(), checks.end()), checks.end());
    }

    std::vector<cliff::RunConfig> configs;
    try {
        if (run_all) {
            if (dim >= 0) {
                if (dim > cliff::kHardDimCap) {
                    std::cerr << "error: dimension cap exceeded (hard cap " << cliff::kHardDimCap << ")\n";
                    return 2;
                }
                configs.push_back(all_suite_config(dim, seed, checks, count));
            } else {
                for (int n = 2; n <= 6; ++n) configs.push_back(all_suite_config(n, seed, checks, count));
            }
        } else {
            std::ifstream in(config_path);
            if (!in) {
                std::cerr << "error: cannot open config '" << config_path << "'\n";
                return 2;
            }
            std::stringstream buffer;
            buffer << in.rdbuf();
            cliff::RunConfig config = cliff::parse_config(buffer.str());
            if (!checks_arg.empty()) config.checks = checks;
            if (config.report_path && report_path.empty()) report_path = *config.report_path;
            configs.push_back(std::move(config));
        }

        const nlohmann::ordered_json report = cliff::run_suite(configs);
        const std::string text = report.dump(2) + "\n";
        if (!report_path.empty()) {
            std::ofstream out(report_path);
            if (!out) {
                std::cerr << "error: cannot write report '" << report_path << "'\n";
                return 2;
            }
            out << text;
            std::cout << cliff::human_summary(report);
        } else {
            std::cout << text;
            std::cerr << cliff::human_summary(report);
        }
        return cliff::report_failures(report) == 0 ? 0 : 1;
    } catch (const cliff::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
