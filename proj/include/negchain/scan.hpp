#ifndef NEGCHAIN_SCAN_HPP
#define NEGCHAIN_SCAN_HPP

#include <atomic>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "negchain/negativity.hpp"
#include "negchain/partition.hpp"
#include "negchain/potential.hpp"
#include "negchain/spin.hpp"

namespace negchain {

// Work pool: runs f(0..count-1) on independent workers and collects results
// in index order, so output is deterministic regardless of scheduling.
template <typename F>
auto parallel_map(std::size_t count, F&& f) -> std::vector<decltype(f(std::size_t{0}))> {
    using R = decltype(f(std::size_t{0}));
    std::vector<R> results(count);
    const unsigned workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = f(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    results[i] = f(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return results;
}

std::vector<double> log_grid(double lo, double hi, int count);
std::vector<double> linear_grid(double lo, double hi, int count);

// Negativity of a system family as a function of temperature.
using NegativityFn = std::function<double(double)>;

NegativityFn harmonic_negativity_fn(Potential pot, Partition part);
NegativityFn spin_negativity_fn(std::shared_ptr<const SpinSystem> system, Partition part);

// Threshold temperature sup{T in (0, T_max] : negativity(T) > eps_neg},
// located by a 64-point log-spaced coarse scan and bisection on the last
// sign change (the last crossing handles non-monotone spin negativities).
// Returns 0 when the scan never detects entanglement.
double threshold_temperature(const NegativityFn& neg, double t_max, double tol);

// A named partition family that can be realized at any ring size.
struct PartitionChoice {
    PartitionKind kind = PartitionKind::even_odd;
    int param = 0;  // offset / m / site, per kind

    Partition realize(int n) const;
    std::string label() const;  // short CSV tag: eo, hh, 1vr, cont<m>
};

struct ThresholdSample {
    double parameter = 0.0;
    double t_th = 0.0;
};

struct ThresholdCurve {
    std::string family;     // harmonic-nearest | harmonic-next-nearest | spin-xx | spin-xxx
    std::string partition;  // PartitionChoice label
    std::vector<ThresholdSample> samples;
    double tolerance = 0.0;
    double t_max = 0.0;
};

// Phase-diagram sweep: one threshold curve per partition family over a
// shared parameter grid. `make` builds the negativity function of T for a
// given parameter value and partition choice.
struct SweepSpec {
    std::string family;
    std::vector<double> parameters;
    std::vector<PartitionChoice> partitions;
    double t_max = 2.0;
    double tol = 1e-4;
    std::function<NegativityFn(double parameter, const PartitionChoice&)> make;
};

std::vector<ThresholdCurve> phase_diagram(const SweepSpec& spec);

// Threshold curves over the system size at fixed couplings; `make` receives
// the size instead of a coupling. Sample.parameter carries n.
struct SizeScanSpec {
    std::string family;
    std::vector<int> sizes;
    std::vector<PartitionChoice> partitions;
    double t_max = 2.0;
    double tol = 1e-4;
    std::function<NegativityFn(int n, const PartitionChoice&)> make;
};

std::vector<ThresholdCurve> size_scan(const SizeScanSpec& spec);

// Bound-entanglement window certification. At each probe temperature the
// even-odd partition must be NPPT while every half-half cut is PPT; on a
// ring every site pair at distance <= n/2 is separated by some contiguous
// half cut, so all-offsets PPT certifies that no pair can distill under
// fully local (single-site) LOCC.
struct WindowEvidence {
    double T = 0.0;
    double even_odd = 0.0;       // E across the even-odd cut
    double half_half_max = 0.0;  // max E over the half-half offsets checked
    int offsets_checked = 0;
    bool all_offsets = false;  // true when every distinct offset was evaluated
    bool in_window = false;
};

struct BoundWindow {
    double t_low = 0.0;
    double t_high = 0.0;
    std::vector<WindowEvidence> evidence;
    bool pair_coverage = true;  // ring lemma: recorded explicitly
    std::string offset_mode;    // "sampled" or "all"
};

struct WindowProblem {
    int n = 0;  // ring size
    std::function<double(double T)> even_odd;
    std::function<double(int offset, double T)> half_half;
    // Translation-invariant systems may verify a 4-offset sample per probe
    // temperature instead of all offsets; promoted to all offsets if the
    // sampled values spread beyond 1e-10.
    bool translation_invariant = false;
};

std::optional<BoundWindow> certify_bound_window(const WindowProblem& problem,
                                                const std::vector<double>& t_grid,
                                                double refine_tol = 1e-4);

// Area-law probe: least-squares linear fit of value(n) for the even-odd
// family and the saturation statistic |value(last) - value(prev)| for the
// half-half family.
struct AreaLawReport {
    std::vector<int> sizes;
    std::vector<double> values;
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double max_abs_residual = 0.0;
    double saturation_value = 0.0;
    double saturation_delta = 0.0;
};

AreaLawReport area_law_probe(const std::vector<int>& sizes,
                             const std::function<double(int n)>& value);

} // namespace negchain

#endif
