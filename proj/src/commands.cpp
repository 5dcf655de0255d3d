#include "negchain/commands.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "negchain/config.hpp"
#include "negchain/csv.hpp"
#include "negchain/limit.hpp"
#include "negchain/version.hpp"

namespace negchain {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ParseError("cannot read config file '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

PartitionChoice parse_partition_label(const std::string& label) {
    if (label == "eo" || label == "even-odd" || label == "even_odd")
        return {PartitionKind::even_odd, 0};
    if (label == "hh" || label == "half-half" || label == "half_half")
        return {PartitionKind::half_half, 0};
    if (label == "1vr" || label == "one-vs-rest" || label == "one_vs_rest")
        return {PartitionKind::one_vs_rest, 0};
    if (label.rfind("hh", 0) == 0) return {PartitionKind::half_half, std::stoi(label.substr(2))};
    if (label.rfind("cont", 0) == 0)
        return {PartitionKind::contiguous, std::stoi(label.substr(4))};
    throw ValidationError("unknown partition label '" + label + "'");
}

std::vector<PartitionChoice> parse_partition_list(const std::string& csv) {
    std::vector<PartitionChoice> choices;
    std::stringstream stream(csv);
    std::string token;
    while (std::getline(stream, token, ',')) choices.push_back(parse_partition_label(token));
    if (choices.empty()) throw ValidationError("empty partition list");
    return choices;
}

std::string partition_spec_kind(const PartitionChoice& choice) {
    switch (choice.kind) {
        case PartitionKind::even_odd: return "even_odd";
        case PartitionKind::half_half: return "half_half";
        case PartitionKind::contiguous: return "contiguous";
        case PartitionKind::one_vs_rest: return "one_vs_rest";
        case PartitionKind::custom: break;
    }
    return "custom";
}

void write_sidecar(const std::string& csv_path, const RunConfig& config,
                   const std::string& command, double wall_seconds) {
    const std::string config_text = emit_config(config);
    char hash_hex[20];
    std::snprintf(hash_hex, sizeof(hash_hex), "%016llx",
                  static_cast<unsigned long long>(fnv1a_hash(config_text)));
    nlohmann::json meta;
    meta["tool"] = "negchain";
    meta["version"] = NEGCHAIN_VERSION;
    meta["command"] = command;
    meta["config_hash"] = hash_hex;
    meta["wall_time_s"] = wall_seconds;
    meta["config"] = nlohmann::json::parse(config_text);
    std::ofstream file(csv_path + ".meta.json", std::ios::binary);
    if (!file) throw IoError("cannot write sidecar for '" + csv_path + "'");
    file << meta.dump(2) << "\n";
}

// Thresholds of one partition list as wide CSV rows, column order as given.
struct TableResult {
    CsvSchema schema;
    std::vector<CsvRow> rows;
};

TableResult curves_to_table(const std::string& param_name,
                            const std::vector<ThresholdCurve>& curves,
                            const std::string& schema_name) {
    TableResult table;
    table.schema.name = schema_name;
    table.schema.columns.push_back(param_name);
    for (const ThresholdCurve& curve : curves)
        table.schema.columns.push_back("T_" + curve.partition);
    const std::size_t count = curves.front().samples.size();
    for (std::size_t i = 0; i < count; ++i) {
        CsvRow row;
        row.push_back(curves.front().samples[i].parameter);
        for (const ThresholdCurve& curve : curves) row.push_back(curve.samples[i].t_th);
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::shared_ptr<const SpinSystem> build_spin(const SpinSpec& spec, int n) {
    return std::make_shared<const SpinSystem>(spec.model(), n, spec.boundary_kind());
}

// ---------------------------------------------------------------------------
// Preset pipelines (shared by `reproduce` and tested directly).

TableResult negativity_vs_size_table(const RunConfig& config) {
    TableResult table;
    const bool harmonic = config.system.family == "harmonic";
    table.schema.name = config.preset;
    table.schema.columns = {"n", "T", "partition", harmonic ? "E_l" : "E_N"};
    for (double T : config.temperatures.resolve()) {
        for (int n : config.sizes) {
            std::shared_ptr<const SpinSystem> spin;
            if (!harmonic) spin = build_spin(config.system.spin, n);
            for (const PartitionSpec& spec : config.partitions) {
                const Partition part = spec.choice().realize(n);
                double value = 0.0;
                if (harmonic) {
                    const GaussianThermalState state(config.system.potential.build(n), T);
                    value = log_negativity(state, part).value;
                } else {
                    value = spin->thermal_negativity(T, part);
                }
                table.rows.push_back(
                    {static_cast<long long>(n), T, spec.choice().label(), value});
            }
        }
    }
    return table;
}

TableResult harmonic_phase_table(const RunConfig& config) {
    SweepSpec sweep;
    const PotentialSpec& pot = config.system.potential;
    sweep.family = (pot.kind == "nearest") ? "harmonic-nearest" : "harmonic-next-nearest";
    sweep.parameters = config.parameters.resolve();
    for (const PartitionSpec& spec : config.partitions) sweep.partitions.push_back(spec.choice());
    sweep.t_max = config.t_max;
    sweep.tol = config.threshold_tol;
    const int n = pot.n;
    const std::string kind = pot.kind;
    sweep.make = [n, kind](double param, const PartitionChoice& choice) {
        PotentialSpec spec;
        spec.kind = kind;
        spec.n = n;
        spec.c = param;
        spec.mu = param;
        return harmonic_negativity_fn(spec.build(), choice.realize(n));
    };
    const std::string param_name = (kind == "nearest") ? "c" : "mu";
    return curves_to_table(param_name, phase_diagram(sweep), config.preset);
}

TableResult spin_phase_table(const RunConfig& config, const std::string& sweep_name) {
    SweepSpec sweep;
    sweep.family = "spin-" + config.system.spin.kind;
    sweep.parameters = config.parameters.resolve();
    for (const PartitionSpec& spec : config.partitions) sweep.partitions.push_back(spec.choice());
    sweep.t_max = config.t_max;
    sweep.tol = config.threshold_tol;
    // Diagonalize each swept system once, shared across partitions.
    std::map<double, std::shared_ptr<const SpinSystem>> systems;
    for (double param : sweep.parameters) {
        SpinSpec spec = config.system.spin;
        (sweep_name == "B" ? spec.B : spec.J) = param;
        systems[param] = build_spin(spec, spec.n);
    }
    const int n = config.system.spin.n;
    sweep.make = [systems, n](double param, const PartitionChoice& choice) {
        return spin_negativity_fn(systems.at(param), choice.realize(n));
    };
    return curves_to_table(sweep_name, phase_diagram(sweep), config.preset);
}

TableResult limit_table(const RunConfig& config) {
    TableResult table;
    table.schema.name = config.preset;
    table.schema.columns = {"c", "T_eo_limit", "T_hh_upper"};
    for (double c : config.parameters.resolve())
        table.rows.push_back({c, threshold_even_odd_limit(c),
                              threshold_halfhalf_upper(c, config.limit_m, config.limit_s)});
    return table;
}

TableResult spin_field_sweep_table(const RunConfig& config) {
    TableResult table;
    table.schema.name = config.preset;
    table.schema.columns = {"B", "partition", "E_N"};
    const double T = config.temperatures.resolve().front();
    for (double B : config.parameters.resolve()) {
        SpinSpec spec = config.system.spin;
        spec.B = B;
        const auto spin = build_spin(spec, spec.n);
        for (const PartitionSpec& part : config.partitions)
            table.rows.push_back(
                {B, part.choice().label(),
                 spin->thermal_negativity(T, part.choice().realize(spec.n))});
    }
    return table;
}

TableResult spin_temperature_sweep_table(const RunConfig& config) {
    TableResult table;
    table.schema.name = config.preset;
    table.schema.columns = {"T", "partition", "E_N"};
    const auto spin = build_spin(config.system.spin, config.system.spin.n);
    for (double T : config.temperatures.resolve())
        for (const PartitionSpec& part : config.partitions)
            table.rows.push_back(
                {T, part.choice().label(),
                 spin->thermal_negativity(T, part.choice().realize(config.system.spin.n))});
    return table;
}

TableResult run_preset(const RunConfig& config) {
    const std::string& tag = config.preset;
    if (tag == "fig1" || tag == "fig5") return negativity_vs_size_table(config);
    if (tag == "fig2" || tag == "fig3") return harmonic_phase_table(config);
    if (tag == "fig4") return limit_table(config);
    if (tag == "fig6") return spin_phase_table(config, "J");
    if (tag == "fig7") return spin_field_sweep_table(config);
    if (tag == "fig8") return spin_temperature_sweep_table(config);
    throw ValidationError("preset '" + tag + "' has no reproduction pipeline");
}

// ---------------------------------------------------------------------------
// Window certification.

struct CertifyOutcome {
    std::optional<BoundWindow> window;
    RunConfig config;
};

CertifyOutcome run_certify(const RunConfig& config, int probes, double refine_tol) {
    WindowProblem problem;
    std::vector<double> grid = log_grid(config.t_max / 100.0, config.t_max, probes);
    if (config.system.family == "harmonic") {
        const auto pot = std::make_shared<const Potential>(config.system.potential.build());
        const int n = pot->size();
        problem.n = n;
        problem.translation_invariant = pot->is_circulant();
        problem.even_odd = [pot, n](double T) {
            const GaussianThermalState state(*pot, T);
            return log_negativity(state, Partition::even_odd(n)).value;
        };
        problem.half_half = [pot, n](int offset, double T) {
            const GaussianThermalState state(*pot, T);
            return log_negativity(state, Partition::half_half(n, offset)).value;
        };
    } else {
        const auto spin = build_spin(config.system.spin, config.system.spin.n);
        const int n = config.system.spin.n;
        problem.n = n;
        problem.translation_invariant =
            config.system.spin.boundary_kind() == BoundaryKind::periodic;
        problem.even_odd = [spin, n](double T) {
            return spin->thermal_negativity(T, Partition::even_odd(n));
        };
        problem.half_half = [spin, n](int offset, double T) {
            return spin->thermal_negativity(T, Partition::half_half(n, offset));
        };
    }
    return {certify_bound_window(problem, grid, refine_tol), config};
}

// ---------------------------------------------------------------------------

struct OutputOptions {
    std::string path;
    bool sidecar = false;
};

void emit_table(const TableResult& table, const OutputOptions& out, const RunConfig& config,
                const std::string& command, double wall_seconds) {
    if (out.path.empty()) return;
    emit_csv(out.path, table.schema, table.rows);
    if (out.sidecar) write_sidecar(out.path, config, command, wall_seconds);
    std::cout << "wrote " << out.path << " (" << table.rows.size() << " rows)\n";
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int run_command(const std::vector<std::string>& args) {
    CLI::App app{"thermal-state entanglement negativities of harmonic and spin chains"};
    app.set_version_flag("--version", NEGCHAIN_VERSION);
    app.require_subcommand(1);

    std::function<int()> job;

    // ---- harmonic-negativity -----------------------------------------
    {
        auto* cmd = app.add_subcommand("harmonic-negativity",
                                       "log-negativity of one harmonic thermal state");
        auto opts = std::make_shared<RunConfig>();
        opts->system.family = "harmonic";
        auto partition = std::make_shared<std::string>("eo");
        auto param = std::make_shared<int>(0);
        auto temperature = std::make_shared<double>(0.0);
        auto first_row_text = std::make_shared<std::string>();
        auto out = std::make_shared<OutputOptions>();
        cmd->add_option("--kind", opts->system.potential.kind,
                        "nearest | next_nearest | custom");
        cmd->add_option("--n", opts->system.potential.n, "number of oscillators")->required();
        cmd->add_option("--c", opts->system.potential.c, "nearest-neighbour coupling");
        cmd->add_option("--mu", opts->system.potential.mu, "next-nearest coupling");
        cmd->add_option("--first-row", *first_row_text, "custom circulant first row (comma list)");
        cmd->add_option("--T", *temperature, "temperature")->required();
        cmd->add_option("--partition", *partition, "eo | hh | 1vr | contM (or long names)");
        cmd->add_option("--param", *param, "partition offset/m/site");
        cmd->add_option("--out", out->path, "CSV output path");
        cmd->add_flag("--sidecar", out->sidecar, "write JSON metadata sidecar");
        cmd->callback([=, &job] {
            job = [=] {
                const auto start = std::chrono::steady_clock::now();
                RunConfig config = *opts;
                if (!first_row_text->empty()) {
                    std::stringstream stream(*first_row_text);
                    std::string tok;
                    while (std::getline(stream, tok, ','))
                        config.system.potential.first_row.push_back(std::stod(tok));
                    config.system.potential.n =
                        static_cast<int>(config.system.potential.first_row.size());
                }
                config.temperatures.values = {*temperature};
                PartitionChoice choice = parse_partition_label(*partition);
                if (*param != 0) choice.param = *param;
                config.partitions = {{partition_spec_kind(choice), choice.param}};
                config.output_csv = out->path;
                validate_config(config);
                const GaussianThermalState state(config.system.potential.build(), *temperature);
                const NegativityResult res =
                    log_negativity(state, choice.realize(config.system.potential.n));
                std::cout << "E_l = " << format_significant(res.value) << " bits ("
                          << (res.is_ppt ? "PPT" : "NPPT") << ", " << res.contributing_count
                          << " contributing eigenvalues)\n";
                TableResult table;
                table.schema = {"negativity", {"n", "T", "partition", "E_l"}};
                table.rows.push_back({static_cast<long long>(config.system.potential.n),
                                      *temperature, choice.label(), res.value});
                emit_table(table, *out, config, "harmonic-negativity", seconds_since(start));
                return 0;
            };
        });
    }

    // ---- spin-negativity ----------------------------------------------
    {
        auto* cmd = app.add_subcommand("spin-negativity",
                                       "negativity of one spin-chain thermal state");
        auto opts = std::make_shared<RunConfig>();
        opts->system.family = "spin";
        auto partition = std::make_shared<std::string>("eo");
        auto param = std::make_shared<int>(0);
        auto temperature = std::make_shared<double>(0.0);
        auto out = std::make_shared<OutputOptions>();
        cmd->add_option("--model", opts->system.spin.kind, "xx | xxx");
        cmd->add_option("--n", opts->system.spin.n, "number of spins")->required();
        cmd->add_option("--J", opts->system.spin.J, "XX coupling");
        cmd->add_option("--B", opts->system.spin.B, "transverse field");
        cmd->add_option("--boundary", opts->system.spin.boundary, "periodic | open");
        cmd->add_option("--T", *temperature, "temperature")->required();
        cmd->add_option("--partition", *partition, "eo | hh | 1vr | contM (or long names)");
        cmd->add_option("--param", *param, "partition offset/m/site");
        cmd->add_option("--out", out->path, "CSV output path");
        cmd->add_flag("--sidecar", out->sidecar, "write JSON metadata sidecar");
        cmd->callback([=, &job] {
            job = [=] {
                const auto start = std::chrono::steady_clock::now();
                RunConfig config = *opts;
                config.temperatures.values = {*temperature};
                PartitionChoice choice = parse_partition_label(*partition);
                if (*param != 0) choice.param = *param;
                config.partitions = {{partition_spec_kind(choice), choice.param}};
                config.t_max = std::max(config.t_max, *temperature);
                config.output_csv = out->path;
                validate_config(config);
                const auto spin = build_spin(config.system.spin, config.system.spin.n);
                const double value = spin->thermal_negativity(
                    *temperature, choice.realize(config.system.spin.n));
                std::cout << "E_N = " << format_significant(value) << " ("
                          << (value > eps_neg ? "NPPT" : "PPT") << ")\n";
                TableResult table;
                table.schema = {"negativity", {"n", "T", "partition", "E_N"}};
                table.rows.push_back({static_cast<long long>(config.system.spin.n), *temperature,
                                      choice.label(), value});
                emit_table(table, *out, config, "spin-negativity", seconds_since(start));
                return 0;
            };
        });
    }

    // ---- harmonic-phase -------------------------------------------------
    {
        auto* cmd = app.add_subcommand(
            "harmonic-phase", "threshold-temperature curves of a harmonic family");
        auto opts = std::make_shared<RunConfig>();
        opts->system.family = "harmonic";
        auto config_path = std::make_shared<std::string>();
        auto partitions = std::make_shared<std::string>("eo,hh,1vr");
        auto params_text = std::make_shared<std::string>();
        auto grid = std::make_shared<GridSpec>();
        auto sizes = std::make_shared<std::vector<int>>();
        auto out = std::make_shared<OutputOptions>();
        cmd->add_option("--config", *config_path, "JSON config file (replaces other flags)");
        cmd->add_option("--kind", opts->system.potential.kind, "nearest | next_nearest");
        cmd->add_option("--n", opts->system.potential.n, "number of oscillators");
        cmd->add_option("--c", opts->system.potential.c, "fixed coupling for --sizes mode");
        cmd->add_option("--mu", opts->system.potential.mu, "fixed coupling for --sizes mode");
        cmd->add_option("--params", *params_text, "coupling grid (comma list)");
        cmd->add_option("--param-min", grid->min, "coupling grid lower edge");
        cmd->add_option("--param-max", grid->max, "coupling grid upper edge");
        cmd->add_option("--param-count", grid->count, "coupling grid size");
        cmd->add_option("--param-spacing", grid->spacing, "linear | log");
        cmd->add_option("--sizes", *sizes, "size-scan mode: ring sizes");
        cmd->add_option("--partitions", *partitions, "comma list of partition labels");
        cmd->add_option("--t-max", opts->t_max, "threshold search ceiling");
        cmd->add_option("--tol", opts->threshold_tol, "threshold bisection tolerance");
        cmd->add_option("--out", out->path, "CSV output path");
        cmd->add_flag("--sidecar", out->sidecar, "write JSON metadata sidecar");
        cmd->callback([=, &job] {
            job = [=] {
                const auto start = std::chrono::steady_clock::now();
                RunConfig config;
                if (!config_path->empty()) {
                    config = parse_config(read_file(*config_path));
                } else {
                    config = *opts;
                    if (!params_text->empty()) {
                        std::stringstream stream(*params_text);
                        std::string tok;
                        while (std::getline(stream, tok, ','))
                            config.parameters.values.push_back(std::stod(tok));
                    } else if (grid->count > 0) {
                        config.parameters = *grid;
                    }
                    config.sizes = *sizes;
                    for (const PartitionChoice& choice : parse_partition_list(*partitions))
                        config.partitions.push_back({partition_spec_kind(choice), choice.param});
                }
                if (!out->path.empty()) config.output_csv = out->path;
                OutputOptions output{config.output_csv, out->sidecar || config.sidecar};

                TableResult table;
                if (!config.sizes.empty()) {
                    // threshold curves over the ring size at fixed coupling
                    for (int n : config.sizes) config.system.potential.build(n);
                    SizeScanSpec scan;
                    scan.family = (config.system.potential.kind == "nearest")
                                      ? "harmonic-nearest"
                                      : "harmonic-next-nearest";
                    scan.sizes = config.sizes;
                    for (const PartitionSpec& spec : config.partitions)
                        scan.partitions.push_back(spec.choice());
                    scan.t_max = config.t_max;
                    scan.tol = config.threshold_tol;
                    const PotentialSpec pot = config.system.potential;
                    scan.make = [pot](int n, const PartitionChoice& choice) {
                        return harmonic_negativity_fn(pot.build(n), choice.realize(n));
                    };
                    table = curves_to_table("n", size_scan(scan), "size_scan");
                } else {
                    RunConfig probe = config;
                    probe.parameters.values = {config.parameters.resolve().front()};
                    probe.system.potential.c = probe.parameters.values[0];
                    probe.system.potential.mu = probe.parameters.values[0];
                    validate_config(probe);
                    table = harmonic_phase_table(config);
                    table.schema.name = "phase";
                }
                emit_table(table, output, config, "harmonic-phase", seconds_since(start));
                if (output.path.empty()) std::cout << render_csv(table.schema, table.rows);
                return 0;
            };
        });
    }

    // ---- spin-phase -------------------------------------------------------
    {
        auto* cmd =
            app.add_subcommand("spin-phase", "threshold-temperature curves of a spin family");
        auto opts = std::make_shared<RunConfig>();
        opts->system.family = "spin";
        opts->t_max = 8.0;
        auto config_path = std::make_shared<std::string>();
        auto partitions = std::make_shared<std::string>("eo,hh,1vr");
        auto params_text = std::make_shared<std::string>();
        auto grid = std::make_shared<GridSpec>();
        auto sizes = std::make_shared<std::vector<int>>();
        auto sweep_name = std::make_shared<std::string>();
        auto out = std::make_shared<OutputOptions>();
        cmd->add_option("--config", *config_path, "JSON config file (replaces other flags)");
        cmd->add_option("--model", opts->system.spin.kind, "xx | xxx");
        cmd->add_option("--n", opts->system.spin.n, "number of spins");
        cmd->add_option("--J", opts->system.spin.J, "fixed XX coupling");
        cmd->add_option("--B", opts->system.spin.B, "fixed transverse field");
        cmd->add_option("--boundary", opts->system.spin.boundary, "periodic | open");
        cmd->add_option("--sweep", *sweep_name, "swept parameter: J | B");
        cmd->add_option("--params", *params_text, "parameter grid (comma list)");
        cmd->add_option("--param-min", grid->min, "parameter grid lower edge");
        cmd->add_option("--param-max", grid->max, "parameter grid upper edge");
        cmd->add_option("--param-count", grid->count, "parameter grid size");
        cmd->add_option("--param-spacing", grid->spacing, "linear | log");
        cmd->add_option("--sizes", *sizes, "size-scan mode: chain sizes");
        cmd->add_option("--partitions", *partitions, "comma list of partition labels");
        cmd->add_option("--t-max", opts->t_max, "threshold search ceiling");
        cmd->add_option("--tol", opts->threshold_tol, "threshold bisection tolerance");
        cmd->add_option("--out", out->path, "CSV output path");
        cmd->add_flag("--sidecar", out->sidecar, "write JSON metadata sidecar");
        cmd->callback([=, &job] {
            job = [=] {
                const auto start = std::chrono::steady_clock::now();
                RunConfig config;
                if (!config_path->empty()) {
                    config = parse_config(read_file(*config_path));
                } else {
                    config = *opts;
                    if (!params_text->empty()) {
                        std::stringstream stream(*params_text);
                        std::string tok;
                        while (std::getline(stream, tok, ','))
                            config.parameters.values.push_back(std::stod(tok));
                    } else if (grid->count > 0) {
                        config.parameters = *grid;
                    }
                    config.sizes = *sizes;
                    for (const PartitionChoice& choice : parse_partition_list(*partitions))
                        config.partitions.push_back({partition_spec_kind(choice), choice.param});
                }
                if (!out->path.empty()) config.output_csv = out->path;
                OutputOptions output{config.output_csv, out->sidecar || config.sidecar};
                validate_config(config);

                TableResult table;
                if (!config.sizes.empty()) {
                    SizeScanSpec scan;
                    scan.family = "spin-" + config.system.spin.kind;
                    scan.sizes = config.sizes;
                    for (const PartitionSpec& spec : config.partitions)
                        scan.partitions.push_back(spec.choice());
                    scan.t_max = config.t_max;
                    scan.tol = config.threshold_tol;
                    const SpinSpec spin = config.system.spin;
                    std::map<int, std::shared_ptr<const SpinSystem>> systems;
                    for (int n : scan.sizes) systems[n] = build_spin(spin, n);
                    scan.make = [systems](int n, const PartitionChoice& choice) {
                        return spin_negativity_fn(systems.at(n), choice.realize(n));
                    };
                    table = curves_to_table("n", size_scan(scan), "size_scan");
                } else {
                    const std::string sweep =
                        !sweep_name->empty() ? *sweep_name
                                             : (config.system.spin.kind == "xx" ? "J" : "B");
                    if (sweep != "J" && sweep != "B")
                        throw ValidationError("--sweep must be J or B");
                    table = spin_phase_table(config, sweep);
                    table.schema.name = "phase";
                }
                emit_table(table, output, config, "spin-phase", seconds_since(start));
                if (output.path.empty()) std::cout << render_csv(table.schema, table.rows);
                return 0;
            };
        });
    }

    // ---- harmonic-limit -----------------------------------------------
    {
        auto* cmd = app.add_subcommand(
            "harmonic-limit", "macroscopic-limit thresholds and PPT bound (nearest chain)");
        auto c_single = std::make_shared<double>(-1.0);
        auto temperature = std::make_shared<double>(-1.0);
        auto grid = std::make_shared<GridSpec>();
        auto m = std::make_shared<int>(10);
        auto s = std::make_shared<int>(3);
        auto out = std::make_shared<OutputOptions>();
        cmd->add_option("--c", *c_single, "single coupling: print both thresholds");
        cmd->add_option("--T", *temperature,
                        "with --c: also report the log-negativity density and PPT bound");
        cmd->add_option("--c-min", grid->min, "coupling grid lower edge");
        cmd->add_option("--c-max", grid->max, "coupling grid upper edge");
        cmd->add_option("--c-count", grid->count, "coupling grid size");
        cmd->add_option("--m", *m, "partial-sum order");
        cmd->add_option("--s", *s, "integration-by-parts order");
        cmd->add_option("--out", out->path, "CSV output path");
        cmd->add_flag("--sidecar", out->sidecar, "write JSON metadata sidecar");
        cmd->callback([=, &job] {
            job = [=] {
                const auto start = std::chrono::steady_clock::now();
                RunConfig config;
                config.preset = "custom";
                config.system.family = "harmonic";
                config.system.potential = {"nearest", 4, std::max(*c_single, 0.0), 0.0, {}};
                config.limit_m = *m;
                config.limit_s = *s;
                config.output_csv = out->path;
                if (*c_single >= 0.0) {
                    validate_config(config);
                    std::cout << "T_eo_limit = "
                              << format_significant(threshold_even_odd_limit(*c_single)) << "\n";
                    std::cout << "T_hh_upper = "
                              << format_significant(threshold_halfhalf_upper(*c_single, *m, *s))
                              << "\n";
                    if (*temperature > 0.0) {
                        std::cout << "E_l_density = "
                                  << format_significant(
                                         logneg_density_limit(*c_single, *temperature))
                                  << "\n";
                        const bool ppt = halfhalf_ppt_sufficient_limit(
                            {*c_single, *temperature, *m, *s});
                        std::cout << "half_half_ppt_sufficient = " << (ppt ? "true" : "false")
                                  << "\n";
                    }
                    return 0;
                }
                if (grid->count <= 0)
                    throw ValidationError("harmonic-limit needs --c or a --c-min/max/count grid");
                config.parameters = *grid;
                validate_config(config);
                TableResult table = limit_table(config);
                table.schema.name = "limit";
                emit_table(table, *out, config, "harmonic-limit", seconds_since(start));
                if (out->path.empty()) std::cout << render_csv(table.schema, table.rows);
                return 0;
            };
        });
    }

    // ---- certify ---------------------------------------------------------
    {
        auto* cmd = app.add_subcommand(
            "certify", "certify a bound-entanglement temperature window on a ring");
        auto config_path = std::make_shared<std::string>();
        auto preset = std::make_shared<std::string>();
        auto opts = std::make_shared<RunConfig>();
        auto n_override = std::make_shared<int>(0);
        auto probes = std::make_shared<int>(256);
        auto refine_tol = std::make_shared<double>(1e-4);
        auto t_max = std::make_shared<double>(0.0);
        auto out = std::make_shared<OutputOptions>();
        cmd->add_option("--config", *config_path, "JSON config file");
        cmd->add_option("--preset", *preset, "preset tag (fig1..fig8)");
        cmd->add_option("--family", opts->system.family, "harmonic | spin");
        cmd->add_option("--kind", opts->system.potential.kind, "nearest | next_nearest");
        cmd->add_option("--c", opts->system.potential.c, "harmonic coupling");
        cmd->add_option("--mu", opts->system.potential.mu, "harmonic next-nearest coupling");
        cmd->add_option("--model", opts->system.spin.kind, "xx | xxx");
        cmd->add_option("--J", opts->system.spin.J, "XX coupling");
        cmd->add_option("--B", opts->system.spin.B, "transverse field");
        cmd->add_option("--n", *n_override, "ring size");
        cmd->add_option("--t-max", *t_max, "probe ceiling (default from config)");
        cmd->add_option("--probes", *probes, "number of log-spaced probe temperatures");
        cmd->add_option("--refine-tol", *refine_tol, "window edge bisection tolerance");
        cmd->add_option("--out", out->path, "evidence CSV output path");
        cmd->add_flag("--sidecar", out->sidecar, "write JSON metadata sidecar");
        cmd->callback([=, &job] {
            job = [=] {
                const auto start = std::chrono::steady_clock::now();
                RunConfig config;
                if (!config_path->empty())
                    config = parse_config(read_file(*config_path));
                else if (!preset->empty())
                    config = preset_config(*preset);
                else
                    config = *opts;
                if (*n_override > 0) {
                    config.system.potential.n = *n_override;
                    config.system.spin.n = *n_override;
                }
                if (*t_max > 0.0) config.t_max = *t_max;
                config.partitions.clear();  // certification fixes its own partitions
                config.sizes.clear();
                config.temperatures = {};
                if (!out->path.empty()) config.output_csv = out->path;
                validate_config(config);
                const CertifyOutcome outcome = run_certify(config, *probes, *refine_tol);
                if (!outcome.window) {
                    std::cout << "no bound-entanglement window found (T <= "
                              << format_significant(config.t_max) << ")\n";
                } else {
                    const BoundWindow& window = *outcome.window;
                    std::cout << "bound-entanglement window: T in ("
                              << format_significant(window.t_low) << ", "
                              << format_significant(window.t_high) << ")\n";
                    std::cout << "  half-half offsets mode: " << window.offset_mode
                              << "; pair coverage on the ring: "
                              << (window.pair_coverage ? "yes" : "no") << "\n";
                    std::cout << "  certifies non-distillability under fully local "
                                 "(single-site) LOCC only\n";
                }
                if (!config.output_csv.empty() && outcome.window) {
                    TableResult table;
                    table.schema = {"certify",
                                    {"T", "even_odd", "half_half_max", "offsets_checked",
                                     "in_window"}};
                    for (const WindowEvidence& ev : outcome.window->evidence)
                        table.rows.push_back({ev.T, ev.even_odd, ev.half_half_max,
                                              static_cast<long long>(ev.offsets_checked),
                                              std::string(ev.in_window ? "1" : "0")});
                    emit_table(table, {config.output_csv, out->sidecar}, config, "certify",
                               seconds_since(start));
                }
                return 0;
            };
        });
    }

    // ---- reproduce ------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("reproduce", "run a figure preset end to end");
        auto preset = std::make_shared<std::string>();
        auto config_path = std::make_shared<std::string>();
        auto out_dir = std::make_shared<std::string>(".");
        auto sidecar = std::make_shared<bool>(false);
        cmd->add_option("--preset", *preset, "fig1..fig8");
        cmd->add_option("--config", *config_path, "JSON config carrying a preset tag");
        cmd->add_option("--out-dir", *out_dir, "output directory");
        cmd->add_flag("--sidecar", *sidecar, "write JSON metadata sidecars");
        cmd->callback([=, &job] {
            job = [=] {
                const auto start = std::chrono::steady_clock::now();
                RunConfig config;
                if (!config_path->empty())
                    config = parse_config(read_file(*config_path));
                else if (!preset->empty())
                    config = preset_config(*preset);
                else
                    throw ValidationError("reproduce needs --preset or --config");
                validate_config(config);
                const TableResult table = run_preset(config);
                const std::string path = *out_dir + "/" + config.output_csv;
                OutputOptions output{path, *sidecar || config.sidecar};
                emit_table(table, output, config, "reproduce " + config.preset,
                           seconds_since(start));
                return 0;
            };
        });
    }

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("negchain");
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    try {
        return job ? job() : 1;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace negchain
