#pragma once

// Grid experiments over instance parameters. Every cell is solved
// independently with the exact solver; emission order is row-major in axis
// declaration order no matter how cells were scheduled.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/optimizer.hpp"
#include "core/types.hpp"

namespace aoisrp {

// Inclusive linear grid: value(0) = start, value(count-1) = stop.
struct GridSpec {
    std::string axis;
    double start = 0.0;
    double stop = 1.0;
    int count = 2;

    double value(int i) const;
    void validate() const;  // throws std::invalid_argument
};

struct SweepOptions {
    int threads = 0;              // 0 = one per hardware thread (capped)
    std::uint64_t sim_slots = 0;  // > 0 attaches per-cell simulation estimates
    std::uint64_t sim_seed = 1;
};

struct SweepCell {
    std::array<double, 3> axis_values{};  // first n_axes entries are meaningful
    SrpSolution solution;
    std::optional<double> lower_bound;
    std::optional<double> ratio;
    std::optional<double> sim_aoi;
    std::optional<double> sim_cae;
};

struct SweepTable {
    std::vector<std::string> axis_names;
    std::vector<SweepCell> cells;
    bool has_sim = false;

    // Header: <axes...>,status,p_ns,p_sr,p_sp,psi,aoi,cae,cost,ratio
    // (plus sim_aoi,sim_cae when attached). Non-feasible cells leave the
    // metric fields empty. Floats carry 9 significant digits.
    std::string to_csv() const;
};

SweepTable sweep_bounds(const SystemInstance& base, const GridSpec& c0_grid,
                        const GridSpec& d0_grid, const SweepOptions& options = {});

SweepTable sweep_costs(const SystemInstance& base, const GridSpec& csr_grid,
                       const GridSpec& csp_grid, const SweepOptions& options = {});

struct TradeoffTriple {
    double p01 = 0.0;
    double p10 = 0.0;
    double p_chnl = 0.0;
};

SweepTable tradeoff_scan(const SystemInstance& base, const std::vector<TradeoffTriple>& triples,
                         const SweepOptions& options = {});

}  // namespace aoisrp
