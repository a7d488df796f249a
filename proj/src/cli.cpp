#include "flrcov/cli.hpp"

#include "flrcov/io.hpp"
#include "flrcov/mc.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

namespace flrcov::cli {

namespace fs = std::filesystem;

namespace {

KernelSpec make_kernel(const RunConfig& cfg) {
    return KernelSpec::from_name(cfg.kernel, cfg.k1, cfg.k2);
}

CellOptions cell_options(const RunConfig& cfg) {
    CellOptions o;
    o.h_min = cfg.h_min;
    o.c0_rule = cfg.c0_derived ? C0Rule::Minimizer : C0Rule::Standard;
    o.flat_top_k1 = cfg.k1;
    o.flat_top_k2 = cfg.k2;
    o.h_override = cfg.h;
    o.h1_override = cfg.h1;
    return o;
}

std::string sanitize_key(std::string s) {
    for (char& c : s)
        if (!std::isalnum(static_cast<unsigned char>(c))) c = '-';
    return s;
}

// Reference streams live in their own id namespace so they never collide
// with replication streams 0..reps-1.
constexpr std::uint64_t kReferenceStream = 1ULL << 63;

Surface make_reference(const DgpSpec& dgp, const Grid& grid, const RunConfig& cfg) {
    if (auto analytic = true_lrcov(dgp, grid)) return std::move(*analytic);

    fs::path cache_file;
    if (const char* dir = std::getenv("FLRCOV_CACHE_DIR"); dir && *dir) {
        const std::string key = "ref_" + sanitize_key(dgp.tag()) + "_b" +
                                std::to_string(dgp.burn_in) + "_n" + std::to_string(cfg.n) +
                                "_J" + std::to_string(cfg.ref_J) + "_Ti" +
                                std::to_string(cfg.ref_T_inner) + "_seed" +
                                std::to_string(cfg.seed) + ".csv";
        cache_file = fs::path(dir) / key;
        if (fs::exists(cache_file)) return read_surface_csv(cache_file);
    }
    const Surface ref = reference_lrcov_mc(dgp, grid, cfg.ref_J, cfg.ref_T_inner,
                                           RngStream(cfg.seed, kReferenceStream), cfg.threads);
    if (!cache_file.empty()) {
        fs::create_directories(cache_file.parent_path());
        write_surface_csv(cache_file, ref);
    }
    return ref;
}

void write_results_csv(const fs::path& path, const std::string& dgp_tag,
                       const std::string& kernel_name, int setting,
                       const std::vector<SweepRow>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "dgp,kernel,setting,T,rep,h_used,loss\n";
    for (const SweepRow& row : rows)
        for (std::size_t r = 0; r < row.summary.losses.size(); ++r)
            out << dgp_tag << ',' << kernel_name << ',' << setting << ',' << row.T << ','
                << r << ',' << format_double(row.summary.bandwidths[r]) << ','
                << format_double(row.summary.losses[r]) << '\n';
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

void write_json(const fs::path& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

int run_estimate(const RunConfig& cfg) {
    if (cfg.in.empty()) throw std::runtime_error("estimate mode requires --in");
    const CurveSample sample = read_sample_csv(cfg.in);
    const int T = sample.length();
    const KernelSpec kernel = make_kernel(cfg);

    double h = 0.0;
    std::optional<BandwidthReport> report;
    if (cfg.h) {
        h = *cfg.h;
    } else if (cfg.setting == 1 || cfg.setting == 2) {
        h = fixed_bandwidth(T, cfg.setting == 1 ? 1.0 / 5.0 : 1.0 / 4.0);
    } else {
        const KernelSpec pilot =
            cfg.setting == 3 ? kernel : KernelSpec::flat_top(cfg.k1, cfg.k2);
        const double h1 = cfg.setting == 5
                              ? adaptive_initial_bandwidth(sample)
                              : cfg.h1.value_or(fixed_bandwidth(T, 1.0 / 5.0));
        const PluginOptions po{cfg.h_min,
                               cfg.c0_derived ? C0Rule::Minimizer : C0Rule::Standard};
        report = plugin_bandwidth(sample, pilot, h1, kernel, po);
        h = report->h_opt_hat;
    }

    const LrcovEstimate est = lrcov_estimate(center(sample), kernel, h);
    const fs::path out_dir(cfg.out);
    fs::create_directories(out_dir);
    write_surface_csv(out_dir / "surface.csv", est.surface);

    nlohmann::json j{
        {"mode", "estimate"},
        {"setting", cfg.setting},
        {"T", T},
        {"n", sample.grid.size()},
        {"h", h},
        {"lag_cap", est.lag_cap},
        {"kernel", kernel_to_json(kernel)},
        {"min_eigenvalue", min_eigenvalue(est.surface)},
        {"plugin", report ? report_to_json(*report) : nlohmann::json(nullptr)},
    };
    write_json(out_dir / "report.json", j);
    return 0;
}

int run_experiment_or_sweep(const RunConfig& cfg) {
    const Grid grid(cfg.n);
    const DgpSpec dgp = make_named_dgp(cfg.dgp, grid, cfg.phi, cfg.p, cfg.burn_in);
    const KernelSpec kernel = make_kernel(cfg);
    const Setting setting = setting_from_int(cfg.setting);
    const Surface reference = make_reference(dgp, grid, cfg);
    const CellOptions opts = cell_options(cfg);

    std::vector<SweepRow> rows;
    if (cfg.mode == "experiment") {
        ExperimentCell cell{dgp, kernel, setting, cfg.T, cfg.n, cfg.reps, cfg.seed};
        rows.push_back({cfg.T, run_cell(cell, reference, cfg.threads, opts)});
    } else {
        if (cfg.Ts.empty()) throw std::runtime_error("sweep mode requires --Ts");
        rows = consistency_sweep(dgp, kernel, setting, cfg.Ts, cfg.n, cfg.reps, cfg.seed,
                                 reference, cfg.threads, opts);
    }

    const fs::path out_dir(cfg.out);
    fs::create_directories(out_dir);
    write_results_csv(out_dir / "results.csv", dgp.tag(), kernel.name(), cfg.setting, rows);

    nlohmann::json cells = nlohmann::json::array();
    for (const SweepRow& row : rows) {
        cells.push_back({{"dgp", dgp.tag()},
                         {"kernel", kernel.name()},
                         {"setting", cfg.setting},
                         {"T", row.T},
                         {"n", cfg.n},
                         {"seed", cfg.seed},
                         {"summary", summary_to_json(row.summary)}});
    }
    write_json(out_dir / "summary.json",
               cfg.mode == "experiment" ? cells.front() : nlohmann::json{{"cells", cells}});
    return 0;
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
    RunConfig cfg;
    cfg.threads = std::max(1u, std::thread::hardware_concurrency());

    CLI::App app{"Long-run covariance estimation for functional time series"};
    app.set_config("--config", "", "Read options from a config file");
    app.allow_config_extras(false);

    app.add_option("--mode", cfg.mode, "Run mode: estimate | experiment | sweep")
        ->required()
        ->check(CLI::IsMember({"estimate", "experiment", "sweep"}));
    app.add_option("--dgp", cfg.dgp,
                   "Data generating process: ma0 | ma1 | ma4 | ma8 | ma-psi4 | far1 | far-psi1")
        ->capture_default_str()
        ->check(CLI::IsMember({"ma0", "ma1", "ma4", "ma8", "ma-psi4", "far1", "far-psi1"}));
    app.add_option("--kernel", cfg.kernel,
                   "Weight function: bartlett | parzen | tukey-hanning | qs | flat-top")
        ->capture_default_str()
        ->check(CLI::IsMember({"bartlett", "parzen", "tukey-hanning", "qs", "flat-top"}));
    app.add_option("--setting", cfg.setting,
                   "Bandwidth setting: 1 h=T^(1/5), 2 h=T^(1/4), 3 plug-in (pilot = final "
                   "kernel), 4 plug-in (flat-top pilot), 5 plug-in (flat-top pilot, adaptive h1)")
        ->capture_default_str()
        ->check(CLI::IsMember({1, 2, 3, 4, 5}));
    app.add_option("--T", cfg.T, "Sample size (curves)")->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--Ts", cfg.Ts, "Sweep mode sample sizes, increasing (e.g. 100,300,500)")
        ->delimiter(',');
    app.add_option("--n", cfg.n, "Grid points per curve")->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--reps", cfg.reps, "Monte Carlo replications")->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Master RNG seed; replication r uses stream r")
        ->capture_default_str();
    app.add_option("--threads", cfg.threads, "Worker threads for replication fan-out")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--in", cfg.in, "Input sample CSV (estimate mode): one curve per row");
    app.add_option("--out", cfg.out, "Output directory")->capture_default_str();
    app.add_option("--h", cfg.h, "Force this final bandwidth (skips selection)");
    app.add_option("--h1", cfg.h1, "Pilot bandwidth for settings 3-4 (default T^(1/5))");
    app.add_option("--k1", cfg.k1, "Flat-top plateau end")->capture_default_str();
    app.add_option("--k2", cfg.k2, "Flat-top support end")->capture_default_str();
    app.add_option("--h-min", cfg.h_min, "Lower floor for the selected bandwidth")
        ->capture_default_str();
    app.add_flag("--c0-derived", cfg.c0_derived,
                 "Use the AMSNE-minimizer plug-in constant (2 q w^2 |C^(q)|^2) instead of the "
                 "standard one");
    app.add_option("--phi", cfg.phi, "Override the DGP coefficient phi");
    app.add_option("--p", cfg.p, "Override the MA order p");
    app.add_option("--burn-in", cfg.burn_in, "FAR burn-in iterations (default 50)");
    app.add_option("--ref-J", cfg.ref_J, "Reference surface: number of outer samples")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--ref-T-inner", cfg.ref_T_inner, "Reference surface: inner sample length")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    // CLI11 parses argv back-to-front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        throw CliExit{0, app.help()};
    } catch (const CLI::ParseError& e) {
        throw CliExit{e.get_exit_code() == 0 ? 1 : e.get_exit_code(), e.what()};
    }
    return cfg;
}

int run(const RunConfig& cfg) {
    if (cfg.mode == "estimate") return run_estimate(cfg);
    return run_experiment_or_sweep(cfg);
}

}  // namespace flrcov::cli
