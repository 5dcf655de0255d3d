#include "negchain/config.hpp"

#include <json.hpp>

#include "negchain/errors.hpp"

namespace negchain {

using nlohmann::json;

std::vector<double> GridSpec::resolve() const {
    if (!values.empty()) return values;
    if (count <= 0) throw ValidationError("grid has neither values nor a range");
    if (spacing == "log") return log_grid(min, max, count);
    if (spacing == "linear") return linear_grid(min, max, count);
    throw ValidationError("grid spacing must be 'linear' or 'log'");
}

Potential PotentialSpec::build() const { return build(n); }

Potential PotentialSpec::build(int size) const {
    if (kind == "nearest") return Potential::nearest(size, c);
    if (kind == "next_nearest") return Potential::next_nearest(size, mu);
    if (kind == "custom") {
        if (size != static_cast<int>(first_row.size()))
            throw ValidationError("custom potential size is fixed by its first row");
        return Potential::circulant(first_row);
    }
    throw ValidationError("potential kind must be nearest, next_nearest or custom");
}

SpinModel SpinSpec::model() const {
    if (kind == "xx") return SpinModel::xx(J, B);
    if (kind == "xxx") return SpinModel::xxx(B);
    throw ValidationError("spin model kind must be xx or xxx");
}

BoundaryKind SpinSpec::boundary_kind() const {
    if (boundary == "periodic") return BoundaryKind::periodic;
    if (boundary == "open") return BoundaryKind::open;
    throw ValidationError("boundary must be periodic or open");
}

PartitionChoice PartitionSpec::choice() const {
    if (kind == "even_odd") return {PartitionKind::even_odd, 0};
    if (kind == "half_half") return {PartitionKind::half_half, param};
    if (kind == "contiguous") return {PartitionKind::contiguous, param};
    if (kind == "one_vs_rest") return {PartitionKind::one_vs_rest, param};
    throw ValidationError("unknown partition kind '" + kind + "'");
}

namespace {

void check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* name : allowed)
            if (key == name) known = true;
        if (!known) throw ParseError("unknown key '" + key + "' in " + where);
    }
}

template <typename T>
T get_field(const json& obj, const std::string& where, const char* key, T fallback) {
    if (!obj.contains(key)) return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError("bad value for '" + std::string(key) + "' in " + where + ": " +
                         e.what());
    }
}

GridSpec parse_grid(const json& obj, const std::string& where) {
    check_keys(obj, where, {"values", "min", "max", "count", "spacing"});
    GridSpec grid;
    grid.values = get_field<std::vector<double>>(obj, where, "values", {});
    grid.min = get_field<double>(obj, where, "min", 0.0);
    grid.max = get_field<double>(obj, where, "max", 0.0);
    grid.count = get_field<int>(obj, where, "count", 0);
    grid.spacing = get_field<std::string>(obj, where, "spacing", "linear");
    return grid;
}

json grid_to_json(const GridSpec& grid) {
    json obj = json::object();
    if (!grid.values.empty()) {
        obj["values"] = grid.values;
    } else {
        obj["min"] = grid.min;
        obj["max"] = grid.max;
        obj["count"] = grid.count;
    }
    if (grid.spacing != "linear") obj["spacing"] = grid.spacing;
    return obj;
}

} // namespace

RunConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("config parse failed: ") + e.what());
    }
    if (!root.is_object()) throw ParseError("config root must be an object");
    check_keys(root, "config",
               {"preset", "system", "partitions", "temperatures", "parameters", "sizes", "limit",
                "solver", "output"});
    RunConfig config;
    config.preset = get_field<std::string>(root, "config", "preset", "custom");

    if (root.contains("system")) {
        const json& sys = root.at("system");
        check_keys(sys, "system", {"family", "potential", "model"});
        config.system.family = get_field<std::string>(sys, "system", "family", "");
        if (sys.contains("potential")) {
            const json& pot = sys.at("potential");
            check_keys(pot, "system.potential", {"kind", "n", "c", "mu", "first_row"});
            config.system.potential.kind =
                get_field<std::string>(pot, "system.potential", "kind", "nearest");
            config.system.potential.n = get_field<int>(pot, "system.potential", "n", 0);
            config.system.potential.c = get_field<double>(pot, "system.potential", "c", 0.0);
            config.system.potential.mu = get_field<double>(pot, "system.potential", "mu", 0.0);
            config.system.potential.first_row =
                get_field<std::vector<double>>(pot, "system.potential", "first_row", {});
            if (config.system.potential.kind == "custom" && config.system.potential.n == 0)
                config.system.potential.n =
                    static_cast<int>(config.system.potential.first_row.size());
        }
        if (sys.contains("model")) {
            const json& spin = sys.at("model");
            check_keys(spin, "system.model", {"kind", "n", "J", "B", "boundary"});
            config.system.spin.kind = get_field<std::string>(spin, "system.model", "kind", "xx");
            config.system.spin.n = get_field<int>(spin, "system.model", "n", 0);
            config.system.spin.J = get_field<double>(spin, "system.model", "J", 1.0);
            config.system.spin.B = get_field<double>(spin, "system.model", "B", 0.0);
            config.system.spin.boundary =
                get_field<std::string>(spin, "system.model", "boundary", "periodic");
        }
    }

    if (root.contains("partitions")) {
        if (!root.at("partitions").is_array())
            throw ParseError("'partitions' must be an array");
        for (const json& part : root.at("partitions")) {
            check_keys(part, "partitions[]", {"kind", "offset", "m", "site"});
            PartitionSpec spec;
            spec.kind = get_field<std::string>(part, "partitions[]", "kind", "even_odd");
            spec.param = get_field<int>(part, "partitions[]", "offset",
                                        get_field<int>(part, "partitions[]", "m",
                                                       get_field<int>(part, "partitions[]",
                                                                      "site", 0)));
            config.partitions.push_back(spec);
        }
    }

    if (root.contains("temperatures"))
        config.temperatures = parse_grid(root.at("temperatures"), "temperatures");
    if (root.contains("parameters"))
        config.parameters = parse_grid(root.at("parameters"), "parameters");
    config.sizes = get_field<std::vector<int>>(root, "config", "sizes", {});

    if (root.contains("limit")) {
        const json& limit = root.at("limit");
        check_keys(limit, "limit", {"m", "s"});
        config.limit_m = get_field<int>(limit, "limit", "m", 10);
        config.limit_s = get_field<int>(limit, "limit", "s", 3);
    }
    if (root.contains("solver")) {
        const json& solver = root.at("solver");
        check_keys(solver, "solver", {"threshold_tol", "t_max"});
        config.threshold_tol = get_field<double>(solver, "solver", "threshold_tol", 1e-4);
        config.t_max = get_field<double>(solver, "solver", "t_max", 2.0);
    }
    if (root.contains("output")) {
        const json& output = root.at("output");
        check_keys(output, "output", {"csv", "sidecar"});
        config.output_csv = get_field<std::string>(output, "output", "csv", "");
        config.sidecar = get_field<bool>(output, "output", "sidecar", false);
    }
    return config;
}

std::string emit_config(const RunConfig& config) {
    json root;
    root["preset"] = config.preset;
    json sys;
    sys["family"] = config.system.family;
    if (config.system.family == "harmonic") {
        json pot;
        pot["kind"] = config.system.potential.kind;
        pot["n"] = config.system.potential.n;
        if (config.system.potential.kind == "nearest") pot["c"] = config.system.potential.c;
        if (config.system.potential.kind == "next_nearest")
            pot["mu"] = config.system.potential.mu;
        if (config.system.potential.kind == "custom")
            pot["first_row"] = config.system.potential.first_row;
        sys["potential"] = pot;
    } else if (config.system.family == "spin") {
        json model;
        model["kind"] = config.system.spin.kind;
        model["n"] = config.system.spin.n;
        model["J"] = config.system.spin.J;
        model["B"] = config.system.spin.B;
        if (config.system.spin.boundary != "periodic")
            model["boundary"] = config.system.spin.boundary;
        sys["model"] = model;
    }
    root["system"] = sys;

    if (!config.partitions.empty()) {
        json parts = json::array();
        for (const PartitionSpec& spec : config.partitions) {
            json part;
            part["kind"] = spec.kind;
            if (spec.kind == "half_half" && spec.param != 0) part["offset"] = spec.param;
            if (spec.kind == "contiguous") part["m"] = spec.param;
            if (spec.kind == "one_vs_rest" && spec.param != 0) part["site"] = spec.param;
            parts.push_back(part);
        }
        root["partitions"] = parts;
    }
    if (!config.temperatures.empty()) root["temperatures"] = grid_to_json(config.temperatures);
    if (!config.parameters.empty()) root["parameters"] = grid_to_json(config.parameters);
    if (!config.sizes.empty()) root["sizes"] = config.sizes;
    root["limit"] = {{"m", config.limit_m}, {"s", config.limit_s}};
    root["solver"] = {{"threshold_tol", config.threshold_tol}, {"t_max", config.t_max}};
    if (!config.output_csv.empty() || config.sidecar) {
        json output;
        if (!config.output_csv.empty()) output["csv"] = config.output_csv;
        if (config.sidecar) output["sidecar"] = true;
        root["output"] = output;
    }
    return root.dump(2) + "\n";
}

void validate_config(const RunConfig& config) {
    if (config.system.family != "harmonic" && config.system.family != "spin")
        throw ValidationError("system.family must be 'harmonic' or 'spin'");
    if (config.system.family == "harmonic") {
        config.system.potential.build();  // range checks live in the constructors
        for (int n : config.sizes) config.system.potential.build(n);
    } else {
        const SpinSpec& spin = config.system.spin;
        spin.model();
        spin.boundary_kind();
        if (spin.n < 2 || spin.n > 14)
            throw ValidationError("too large: spin n must be in [2, 14]");
        for (int n : config.sizes)
            if (n < 2 || n > 14) throw ValidationError("too large: spin n must be in [2, 14]");
    }
    const int n = (config.system.family == "harmonic") ? config.system.potential.n
                                                       : config.system.spin.n;
    for (const PartitionSpec& spec : config.partitions) {
        spec.choice().realize(n);
        for (int size : config.sizes) spec.choice().realize(size);
    }
    if (!config.temperatures.empty())
        for (double T : config.temperatures.resolve())
            if (T < 0.0) throw ValidationError("temperatures must be >= 0");
    if (!config.parameters.empty()) config.parameters.resolve();
    if (config.limit_m < 1) throw ValidationError("limit m must be >= 1");
    if (config.limit_s < 2 || config.limit_s > 6)
        throw ValidationError("limit s must be in [2, 6]");
    if (config.threshold_tol <= 0.0) throw ValidationError("threshold_tol must be > 0");
    if (config.t_max <= 0.0) throw ValidationError("t_max must be > 0");
}

namespace {

GridSpec explicit_grid(std::vector<double> values) {
    GridSpec grid;
    grid.values = std::move(values);
    return grid;
}

GridSpec range_grid(double lo, double hi, int count, const std::string& spacing) {
    GridSpec grid;
    grid.min = lo;
    grid.max = hi;
    grid.count = count;
    grid.spacing = spacing;
    return grid;
}

} // namespace

RunConfig preset_config(const std::string& tag) {
    RunConfig config;
    config.preset = tag;
    if (tag == "fig1") {
        config.system.family = "harmonic";
        config.system.potential = {"nearest", 512, 0.4, 0.0, {}};
        config.partitions = {{"even_odd", 0}, {"half_half", 0}};
        config.temperatures = explicit_grid({0.35, 0.4, 0.45});
        config.sizes = {8, 16, 32, 64, 128, 256, 512};
        config.t_max = 2.0;
        config.output_csv = "fig1.csv";
    } else if (tag == "fig2") {
        config.system.family = "harmonic";
        config.system.potential = {"nearest", 800, 0.3, 0.0, {}};
        config.partitions = {{"even_odd", 0}, {"half_half", 0}, {"one_vs_rest", 0}};
        config.parameters =
            explicit_grid({0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45});
        config.t_max = 2.0;
        config.output_csv = "fig2.csv";
    } else if (tag == "fig3") {
        config.system.family = "harmonic";
        config.system.potential = {"next_nearest", 200, 0.0, 0.5, {}};
        config.partitions = {{"even_odd", 0}, {"half_half", 0}, {"one_vs_rest", 0}};
        config.parameters = explicit_grid({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9});
        config.t_max = 5.0;
        config.output_csv = "fig3.csv";
    } else if (tag == "fig4") {
        config.system.family = "harmonic";
        config.system.potential = {"nearest", 800, 0.3, 0.0, {}};
        config.parameters = range_grid(0.05, 0.45, 21, "linear");
        config.limit_m = 10;
        config.limit_s = 3;
        config.output_csv = "fig4.csv";
    } else if (tag == "fig5") {
        config.system.family = "spin";
        config.system.spin = {"xx", 12, 1.0, 1.9, "periodic"};
        config.partitions = {{"even_odd", 0}, {"half_half", 0}};
        config.temperatures = explicit_grid({2.0, 2.6});
        config.sizes = {4, 6, 8, 10, 12};
        config.t_max = 8.0;
        config.output_csv = "fig5.csv";
    } else if (tag == "fig6") {
        config.system.family = "spin";
        config.system.spin = {"xx", 10, 1.0, 1.9, "periodic"};
        config.partitions = {{"even_odd", 0}, {"half_half", 0}, {"one_vs_rest", 0}};
        config.parameters = explicit_grid({0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0});
        config.t_max = 8.0;
        config.output_csv = "fig6.csv";
    } else if (tag == "fig7") {
        config.system.family = "spin";
        config.system.spin = {"xx", 10, 1.0, 1.9, "periodic"};
        config.partitions = {{"even_odd", 0}, {"half_half", 0}};
        config.temperatures = explicit_grid({0.1});
        config.parameters = range_grid(0.0, 2.6, 53, "linear");
        config.t_max = 8.0;
        config.output_csv = "fig7.csv";
    } else if (tag == "fig8") {
        config.system.family = "spin";
        config.system.spin = {"xx", 10, 1.0, 2.3, "periodic"};
        config.partitions = {{"even_odd", 0}, {"half_half", 0}};
        config.temperatures = range_grid(0.2, 6.0, 121, "log");
        config.t_max = 6.0;
        config.output_csv = "fig8.csv";
    } else {
        throw ValidationError("unknown preset '" + tag + "'");
    }
    return config;
}

std::vector<std::string> preset_names() {
    return {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8"};
}

} // namespace negchain
