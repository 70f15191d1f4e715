#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsearch/analysis.hpp"
#include "qsearch/emit.hpp"

namespace {

using namespace qsearch;

std::string default_output_dir() {
    if (const char* dir = std::getenv("QSEARCH_OUTPUT_DIR")) return dir;
    return ".";
}

std::string extension(OutputFormat f) {
    switch (f) {
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Json: return "json";
        case OutputFormat::Svg: return "svg";
    }
    return "dat";
}

SearchSpec build_spec(int n, int M, const std::vector<std::uint64_t>& solutions) {
    if (!solutions.empty()) {
        if (static_cast<int>(solutions.size()) != M)
            throw std::invalid_argument("explicit solution list inconsistent with M");
        return make_spec(n, solutions);
    }
    if (M == 1) return symmetric_single(n);
    if (M == 2) return antipodal_pair(n);
    throw std::invalid_argument("M > 2 requires an explicit solution list");
}

EmitMetadata make_metadata(const SearchSpec& spec, const std::string& algorithm) {
    const auto angle = grover_angle(spec);
    return EmitMetadata{spec.n, spec.M, angle.theta, angle.theta_approx, k_opt(spec), algorithm};
}

int fail_with(const std::string& kind, const std::string& message) {
    nlohmann::ordered_json err{{"error", kind}, {"message", message}};
    std::cerr << err.dump() << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grover / pi-3 search entanglement dynamics"};
    app.require_subcommand(1);

    int n = 12;
    int M = 1;
    std::vector<std::uint64_t> solutions;
    std::string format_str = "csv";
    std::string output_path;
    std::vector<int> n_list;
    int pi3_steps = 6;
    int grid_points = 1024;
    double tol_closed_form = 1e-9;
    double tol_effective = 1e-10;

    auto add_common = [&](CLI::App* cmd, bool with_n) {
        if (with_n) cmd->add_option("--n", n, "Number of qubits");
        cmd->add_option("--m", M, "Number of solutions");
        cmd->add_option("--solutions", solutions, "Explicit solution indices");
        cmd->add_option("--format", format_str, "Output format: csv, json or svg");
        cmd->add_option("-o,--output", output_path, "Output file (or prefix for sweep)");
    };

    auto* grover_cmd = app.add_subcommand("grover", "Entanglement dynamics over k = 0..k_opt");
    add_common(grover_cmd, true);
    grover_cmd->add_option("--grid", grid_points, "Optimizer alpha-grid size");

    auto* pi3_cmd = app.add_subcommand("pi3", "Fixed-point search dynamics over recursion depth");
    add_common(pi3_cmd, true);
    pi3_cmd->add_option("--steps", pi3_steps, "Maximum recursion depth");
    pi3_cmd->add_option("--grid", grid_points, "Optimizer alpha-grid size");

    auto* sweep_cmd = app.add_subcommand("sweep", "Scale-invariance sweep over several n");
    add_common(sweep_cmd, false);
    sweep_cmd->add_option("--n-list", n_list, "Qubit counts")->delimiter(',')->required();
    sweep_cmd->add_option("--grid", grid_points, "Optimizer alpha-grid size");

    auto* verify_cmd = app.add_subcommand("verify", "Run the consolidated verification suite");
    verify_cmd->add_option("-o,--output", output_path, "Optional JSON report path");
    verify_cmd->add_option("--tol-closed-form", tol_closed_form,
                           "Closed-form vs SVD tolerance");
    verify_cmd->add_option("--tol-effective", tol_effective,
                           "Effective vs full per-component tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        const OutputFormat format = parse_format(format_str);

        if (grover_cmd->parsed() || pi3_cmd->parsed()) {
            const SearchSpec spec = build_spec(n, M, solutions);
            const bool is_pi3 = pi3_cmd->parsed();
            const auto rows = is_pi3 ? pi3_dynamics_table(spec, pi3_steps, grid_points)
                                     : grover_dynamics_table(spec, grid_points);
            std::string path = output_path;
            if (path.empty()) {
                std::ostringstream os;
                os << default_output_dir() << "/" << (is_pi3 ? "pi3" : "grover") << "_n" << spec.n
                   << "_M" << spec.M << "." << extension(format);
                path = os.str();
            }
            emit_table(rows, make_metadata(spec, is_pi3 ? "pi3" : "grover"), format, path);
            std::cout << "wrote " << path << " (" << rows.size() << " rows)\n";
            return 0;
        }

        if (sweep_cmd->parsed()) {
            if (format == OutputFormat::Svg && n_list.size() > 1 && output_path.empty()) {
                // fall through; per-n files get distinct names anyway
            }
            const SweepResult result = scale_invariance_sweep(n_list, M, grid_points);
            std::string prefix = output_path;
            if (prefix.empty())
                prefix = default_output_dir() + "/sweep_M" + std::to_string(M);
            for (std::size_t i = 0; i < result.n_list.size(); ++i) {
                const SearchSpec spec =
                    (M == 1) ? symmetric_single(result.n_list[i]) : antipodal_pair(result.n_list[i]);
                const std::string path =
                    prefix + "_n" + std::to_string(result.n_list[i]) + "." + extension(format);
                emit_table(result.tables[i], make_metadata(spec, "grover"), format, path);
                std::cout << "wrote " << path << "\n";
            }
            for (const auto& dev : result.deviation_summary) {
                std::cout << "n=" << dev.n << " max|E_n-asym|=" << format_double(dev.max_dev_E_n)
                          << " max|E_2-asym|=" << format_double(dev.max_dev_E_2) << "\n";
            }
            return 0;
        }

        if (verify_cmd->parsed()) {
            const auto results = verification_suite(VerifyOptions{tol_closed_form, tol_effective});
            nlohmann::ordered_json report = nlohmann::ordered_json::array();
            for (const auto& r : results) {
                std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name
                          << "  measured=" << format_double(r.measured)
                          << " tolerance=" << format_double(r.tolerance) << "  (" << r.detail
                          << ")\n";
                report.push_back({{"name", r.name},
                                  {"passed", r.passed},
                                  {"measured", r.measured},
                                  {"tolerance", r.tolerance},
                                  {"detail", r.detail}});
            }
            if (!output_path.empty()) {
                std::ofstream out(output_path, std::ios::binary);
                if (!out) throw std::runtime_error("cannot open output file: " + output_path);
                out << report.dump(2) << "\n";
            }
            return all_passed(results) ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        return fail_with("invalid_argument", e.what());
    } catch (const qsearch::OptimizationError& e) {
        return fail_with("optimization_failure", e.what());
    } catch (const std::exception& e) {
        return fail_with("runtime_error", e.what());
    }
    return 0;
}
