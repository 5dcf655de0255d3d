#ifndef NEGCHAIN_CONFIG_HPP
#define NEGCHAIN_CONFIG_HPP

#include <string>
#include <vector>

#include "negchain/potential.hpp"
#include "negchain/scan.hpp"
#include "negchain/spin.hpp"

namespace negchain {

// Temperature/coupling grid: either explicit values or a generated range.
struct GridSpec {
    std::vector<double> values;
    double min = 0.0, max = 0.0;
    int count = 0;
    std::string spacing = "linear";  // or "log"

    bool empty() const { return values.empty() && count == 0; }
    std::vector<double> resolve() const;
    bool operator==(const GridSpec&) const = default;
};

struct PotentialSpec {
    std::string kind = "nearest";  // nearest | next_nearest | custom
    int n = 0;
    double c = 0.0;
    double mu = 0.0;
    std::vector<double> first_row;  // custom kind

    Potential build() const;
    Potential build(int size) const;  // same couplings at another ring size
    bool operator==(const PotentialSpec&) const = default;
};

struct SpinSpec {
    std::string kind = "xx";  // xx | xxx
    int n = 0;
    double J = 1.0;
    double B = 0.0;
    std::string boundary = "periodic";  // or "open"

    SpinModel model() const;
    BoundaryKind boundary_kind() const;
    bool operator==(const SpinSpec&) const = default;
};

struct SystemSpec {
    std::string family;  // harmonic | spin
    PotentialSpec potential;
    SpinSpec spin;
    bool operator==(const SystemSpec&) const = default;
};

struct PartitionSpec {
    std::string kind = "even_odd";  // even_odd | half_half | contiguous | one_vs_rest
    int param = 0;                  // offset / m / site

    PartitionChoice choice() const;
    bool operator==(const PartitionSpec&) const = default;
};

struct RunConfig {
    std::string preset = "custom";
    SystemSpec system;
    std::vector<PartitionSpec> partitions;
    GridSpec temperatures;
    GridSpec parameters;  // coupling sweep (c, mu, J or B)
    std::vector<int> sizes;
    int limit_m = 10;
    int limit_s = 3;
    double threshold_tol = 1e-4;
    double t_max = 2.0;
    std::string output_csv;
    bool sidecar = false;

    bool operator==(const RunConfig&) const = default;
};

// Strict JSON parsing: unknown keys are rejected, malformed text raises
// ParseError. Value ranges are not checked here; see validate_config.
RunConfig parse_config(const std::string& text);

// Canonical JSON serialization; parse_config(emit_config(c)) == c.
std::string emit_config(const RunConfig& config);

// Checks every numeric range against the module preconditions (fail-fast,
// before any computation). Throws ValidationError naming the condition.
void validate_config(const RunConfig& config);

// Fully resolved figure-reproduction presets.
RunConfig preset_config(const std::string& tag);
std::vector<std::string> preset_names();

} // namespace negchain

#endif
