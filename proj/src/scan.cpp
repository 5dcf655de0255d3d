#include "negchain/scan.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "negchain/numeric.hpp"

namespace negchain {

std::vector<double> log_grid(double lo, double hi, int count) {
    if (lo <= 0.0 || hi <= lo || count < 2)
        throw ValidationError("log grid needs 0 < lo < hi and count >= 2");
    std::vector<double> grid(count);
    const double span = std::log(hi / lo);
    for (int i = 0; i < count; ++i) grid[i] = lo * std::exp(span * i / (count - 1));
    return grid;
}

std::vector<double> linear_grid(double lo, double hi, int count) {
    if (hi <= lo || count < 2) throw ValidationError("linear grid needs lo < hi and count >= 2");
    std::vector<double> grid(count);
    for (int i = 0; i < count; ++i) grid[i] = lo + (hi - lo) * i / (count - 1);
    return grid;
}

NegativityFn harmonic_negativity_fn(Potential pot, Partition part) {
    auto shared_pot = std::make_shared<const Potential>(std::move(pot));
    return [shared_pot, part = std::move(part)](double T) {
        const GaussianThermalState state(*shared_pot, T);
        return log_negativity(state, part).value;
    };
}

NegativityFn spin_negativity_fn(std::shared_ptr<const SpinSystem> system, Partition part) {
    return [system = std::move(system), part = std::move(part)](double T) {
        return system->thermal_negativity(T, part);
    };
}

double threshold_temperature(const NegativityFn& neg, double t_max, double tol) {
    if (t_max <= 0.0 || tol <= 0.0)
        throw ValidationError("threshold search needs t_max > 0 and tol > 0");
    constexpr int points = 64;
    const std::vector<double> grid = log_grid(t_max * 1e-4, t_max, points);
    const std::vector<double> values =
        parallel_map(grid.size(), [&](std::size_t i) { return neg(grid[i]); });
    int last = -1;
    for (int i = 0; i < points; ++i)
        if (values[i] > eps_neg) last = i;
    if (last == -1) return 0.0;  // never entangled on the scan
    if (last == points - 1) return t_max;
    return bisect_predicate([&](double T) { return neg(T) > eps_neg; }, grid[last],
                            grid[last + 1], tol, true);
}

Partition PartitionChoice::realize(int n) const {
    switch (kind) {
        case PartitionKind::even_odd: return Partition::even_odd(n);
        case PartitionKind::half_half: return Partition::half_half(n, param);
        case PartitionKind::contiguous: return Partition::contiguous(n, param);
        case PartitionKind::one_vs_rest: return Partition::one_vs_rest(n, param);
        case PartitionKind::custom: break;
    }
    throw ValidationError("custom partitions cannot be realized from a choice tag");
}

std::string PartitionChoice::label() const {
    switch (kind) {
        case PartitionKind::even_odd: return "eo";
        case PartitionKind::half_half: return param == 0 ? "hh" : "hh" + std::to_string(param);
        case PartitionKind::contiguous: return "cont" + std::to_string(param);
        case PartitionKind::one_vs_rest: return "1vr";
        case PartitionKind::custom: break;
    }
    return "custom";
}

std::vector<ThresholdCurve> phase_diagram(const SweepSpec& spec) {
    if (spec.parameters.empty()) throw ValidationError("phase diagram needs a nonempty grid");
    if (spec.partitions.empty()) throw ValidationError("phase diagram needs partitions");
    const std::size_t per = spec.parameters.size();
    const std::size_t total = per * spec.partitions.size();
    const std::vector<double> thresholds = parallel_map(total, [&](std::size_t task) {
        const std::size_t p = task / per, i = task % per;
        const NegativityFn fn = spec.make(spec.parameters[i], spec.partitions[p]);
        return threshold_temperature(fn, spec.t_max, spec.tol);
    });
    std::vector<ThresholdCurve> curves;
    for (std::size_t p = 0; p < spec.partitions.size(); ++p) {
        ThresholdCurve curve;
        curve.family = spec.family;
        curve.partition = spec.partitions[p].label();
        curve.tolerance = spec.tol;
        curve.t_max = spec.t_max;
        for (std::size_t i = 0; i < per; ++i)
            curve.samples.push_back({spec.parameters[i], thresholds[p * per + i]});
        curves.push_back(std::move(curve));
    }
    return curves;
}

std::vector<ThresholdCurve> size_scan(const SizeScanSpec& spec) {
    if (spec.sizes.empty()) throw ValidationError("size scan needs a nonempty size list");
    if (spec.partitions.empty()) throw ValidationError("size scan needs partitions");
    const std::size_t per = spec.sizes.size();
    const std::size_t total = per * spec.partitions.size();
    const std::vector<double> thresholds = parallel_map(total, [&](std::size_t task) {
        const std::size_t p = task / per, i = task % per;
        const NegativityFn fn = spec.make(spec.sizes[i], spec.partitions[p]);
        return threshold_temperature(fn, spec.t_max, spec.tol);
    });
    std::vector<ThresholdCurve> curves;
    for (std::size_t p = 0; p < spec.partitions.size(); ++p) {
        ThresholdCurve curve;
        curve.family = spec.family;
        curve.partition = spec.partitions[p].label();
        curve.tolerance = spec.tol;
        curve.t_max = spec.t_max;
        for (std::size_t i = 0; i < per; ++i)
            curve.samples.push_back({static_cast<double>(spec.sizes[i]), thresholds[p * per + i]});
        curves.push_back(std::move(curve));
    }
    return curves;
}

namespace {

std::vector<int> sampled_offsets(int n, std::size_t probe_index) {
    // Fixed seed: deterministic output for identical inputs.
    std::mt19937 rng(0x5eed1234u + static_cast<unsigned>(probe_index));
    std::uniform_int_distribution<int> dist(1, n - 1);
    std::vector<int> offsets = {0};
    while (offsets.size() < 4 && static_cast<int>(offsets.size()) < n) {
        const int off = dist(rng);
        if (std::find(offsets.begin(), offsets.end(), off) == offsets.end())
            offsets.push_back(off);
    }
    return offsets;
}

} // namespace

std::optional<BoundWindow> certify_bound_window(const WindowProblem& problem,
                                                const std::vector<double>& t_grid,
                                                double refine_tol) {
    if (problem.n < 2 || problem.n % 2 != 0)
        throw ValidationError("window certification needs an even ring size");
    if (t_grid.size() < 2) throw ValidationError("window certification needs a probe grid");
    if (!std::is_sorted(t_grid.begin(), t_grid.end()))
        throw ValidationError("probe grid must be sorted");

    bool all_offsets = !problem.translation_invariant;

    auto probe = [&](double T, std::size_t index) {
        WindowEvidence ev;
        ev.T = T;
        ev.even_odd = problem.even_odd(T);
        std::vector<int> offsets;
        if (!all_offsets) {
            offsets = sampled_offsets(problem.n, index);
            std::vector<double> vals;
            vals.reserve(offsets.size());
            for (int off : offsets) vals.push_back(problem.half_half(off, T));
            const auto [lo, hi] = std::minmax_element(vals.begin(), vals.end());
            if (*hi - *lo > 1e-10) {
                all_offsets = true;  // translation invariance failed: promote
            } else {
                ev.half_half_max = *hi;
            }
        }
        if (all_offsets) {
            offsets.resize(problem.n);
            for (int off = 0; off < problem.n; ++off) offsets[off] = off;
            double hi = 0.0;
            for (int off : offsets) hi = std::max(hi, problem.half_half(off, T));
            ev.half_half_max = hi;
        }
        ev.offsets_checked = static_cast<int>(offsets.size());
        ev.all_offsets = all_offsets;
        ev.in_window = (ev.even_odd > eps_neg) && (ev.half_half_max <= eps_neg);
        return ev;
    };

    std::vector<WindowEvidence> evidence;
    evidence.reserve(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) evidence.push_back(probe(t_grid[i], i));

    // Longest contiguous run of in-window probes.
    int best_start = -1, best_len = 0;
    for (std::size_t i = 0; i < evidence.size();) {
        if (!evidence[i].in_window) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < evidence.size() && evidence[j].in_window) ++j;
        if (static_cast<int>(j - i) > best_len) {
            best_len = static_cast<int>(j - i);
            best_start = static_cast<int>(i);
        }
        i = j;
    }
    if (best_start < 0) return std::nullopt;

    const int first = best_start, last = best_start + best_len - 1;
    auto in_window_at = [&](double T) { return probe(T, t_grid.size()).in_window; };

    BoundWindow window;
    window.evidence = std::move(evidence);
    window.pair_coverage = true;
    window.offset_mode = all_offsets ? "all" : "sampled";
    window.t_low = (first == 0)
                       ? t_grid.front()
                       : bisect_predicate(in_window_at, t_grid[first - 1], t_grid[first],
                                          refine_tol, false);
    window.t_high = (last == static_cast<int>(t_grid.size()) - 1)
                        ? t_grid.back()
                        : bisect_predicate(in_window_at, t_grid[last], t_grid[last + 1],
                                           refine_tol, true);
    return window;
}

AreaLawReport area_law_probe(const std::vector<int>& sizes,
                             const std::function<double(int n)>& value) {
    if (sizes.size() < 4) throw ValidationError("area-law probe needs at least 4 sizes");
    AreaLawReport report;
    report.sizes = sizes;
    const std::vector<double> values =
        parallel_map(sizes.size(), [&](std::size_t i) { return value(sizes[i]); });
    report.values = values;

    const std::size_t count = sizes.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        sx += sizes[i];
        sy += values[i];
        sxx += static_cast<double>(sizes[i]) * sizes[i];
        sxy += sizes[i] * values[i];
    }
    const double denom = count * sxx - sx * sx;
    report.slope = (count * sxy - sx * sy) / denom;
    report.intercept = (sy - report.slope * sx) / count;
    const double mean = sy / count;
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double fit = report.intercept + report.slope * sizes[i];
        ss_res += (values[i] - fit) * (values[i] - fit);
        ss_tot += (values[i] - mean) * (values[i] - mean);
        report.max_abs_residual = std::max(report.max_abs_residual, std::abs(values[i] - fit));
    }
    report.r_squared = (ss_tot > 0.0) ? 1.0 - ss_res / ss_tot : 1.0;
    report.saturation_value = values.back();
    report.saturation_delta = std::abs(values[count - 1] - values[count - 2]);
    return report;
}

} // namespace negchain
