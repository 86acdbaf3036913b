#include "core/sweeps.hpp"

#include <atomic>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <thread>

#include "core/simulator.hpp"

namespace aoisrp {

double GridSpec::value(int i) const {
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
}

void GridSpec::validate() const {
    if (count < 2) throw std::invalid_argument("grid '" + axis + "': count must be >= 2");
    if (!(stop > start)) throw std::invalid_argument("grid '" + axis + "': stop must exceed start");
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    return derive_stream_seed(seed ^ (index * 0x9e3779b97f4a7c15ull), "sweep-cell");
}

SweepCell evaluate_cell(const SystemInstance& instance, const SweepOptions& options,
                        std::uint64_t index) {
    SweepCell cell;
    cell.solution = solve_srp(instance);
    if (cell.solution.status == FeasibilityStatus::Feasible) {
        const LowerBoundSolution lb = solve_lower_bound(instance);
        cell.lower_bound = lb.value;
        cell.ratio = *cell.solution.aoi / *lb.value;
        if (options.sim_slots > 0) {
            SimConfig cfg;
            cfg.slots = options.sim_slots;
            cfg.warmup_slots = options.sim_slots / 100;
            cfg.seed = mix_seed(options.sim_seed, index);
            cfg.collect_joint = false;
            cfg.aoi_hist_max = 0;
            const SimResult sim = run(instance, *cell.solution.policy, cfg);
            cell.sim_aoi = sim.avg_aoi;
            cell.sim_cae = sim.avg_cae;
        }
    }
    return cell;
}

// Evaluates `total` independent cells, possibly across threads; results land
// at their own index so output order never depends on scheduling.
void for_each_cell(std::size_t total, int threads,
                   const std::function<SweepCell(std::size_t)>& eval,
                   std::vector<SweepCell>& out) {
    out.resize(total);
    unsigned n = threads > 0 ? static_cast<unsigned>(threads)
                             : std::min(std::thread::hardware_concurrency(), 8u);
    if (n <= 1 || total < 2) {
        for (std::size_t i = 0; i < total; ++i) out[i] = eval(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= total) return;
            out[i] = eval(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
}

void append_double(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    out += buf;
}

void append_optional(std::string& out, const std::optional<double>& v) {
    out += ',';
    if (v) append_double(out, *v);
}

}  // namespace

std::string SweepTable::to_csv() const {
    std::string out;
    for (const std::string& name : axis_names) {
        out += name;
        out += ',';
    }
    out += "status,p_ns,p_sr,p_sp,psi,aoi,cae,cost,ratio";
    if (has_sim) out += ",sim_aoi,sim_cae";
    out += '\n';

    for (const SweepCell& cell : cells) {
        for (std::size_t a = 0; a < axis_names.size(); ++a) {
            append_double(out, cell.axis_values[a]);
            out += ',';
        }
        out += to_string(cell.solution.status);
        if (cell.solution.status == FeasibilityStatus::Feasible) {
            out += ',';
            append_double(out, cell.solution.policy->p_ns);
            out += ',';
            append_double(out, cell.solution.policy->p_sr);
            out += ',';
            append_double(out, cell.solution.policy->p_sp);
            append_optional(out, cell.solution.psi);
            append_optional(out, cell.solution.aoi);
            append_optional(out, cell.solution.cae);
            append_optional(out, cell.solution.cost);
            append_optional(out, cell.ratio);
        } else {
            out += ",,,,,,,,";
        }
        if (has_sim) {
            append_optional(out, cell.sim_aoi);
            append_optional(out, cell.sim_cae);
        }
        out += '\n';
    }
    return out;
}

SweepTable sweep_bounds(const SystemInstance& base, const GridSpec& c0_grid,
                        const GridSpec& d0_grid, const SweepOptions& options) {
    c0_grid.validate();
    d0_grid.validate();

    SweepTable table;
    table.axis_names = {c0_grid.axis.empty() ? "c0" : c0_grid.axis,
                        d0_grid.axis.empty() ? "d0" : d0_grid.axis};
    table.has_sim = options.sim_slots > 0;

    const std::size_t total = static_cast<std::size_t>(c0_grid.count) * d0_grid.count;
    for_each_cell(
        total, options.threads,
        [&](std::size_t idx) {
            const int i = static_cast<int>(idx) / d0_grid.count;
            const int j = static_cast<int>(idx) % d0_grid.count;
            SystemInstance inst = base;
            inst.bounds.c0 = c0_grid.value(i);
            inst.bounds.d0 = d0_grid.value(j);
            SweepCell cell = evaluate_cell(inst, options, idx);
            cell.axis_values = {inst.bounds.c0, inst.bounds.d0, 0.0};
            return cell;
        },
        table.cells);
    return table;
}

SweepTable sweep_costs(const SystemInstance& base, const GridSpec& csr_grid,
                       const GridSpec& csp_grid, const SweepOptions& options) {
    csr_grid.validate();
    csp_grid.validate();

    SweepTable table;
    table.axis_names = {csr_grid.axis.empty() ? "c_sr" : csr_grid.axis,
                        csp_grid.axis.empty() ? "c_sp" : csp_grid.axis};
    table.has_sim = options.sim_slots > 0;

    const std::size_t total = static_cast<std::size_t>(csr_grid.count) * csp_grid.count;
    for_each_cell(
        total, options.threads,
        [&](std::size_t idx) {
            const int i = static_cast<int>(idx) / csp_grid.count;
            const int j = static_cast<int>(idx) % csp_grid.count;
            SystemInstance inst = base;
            inst.costs.c_sr = csr_grid.value(i);
            inst.costs.c_sp = csp_grid.value(j);
            SweepCell cell = evaluate_cell(inst, options, idx);
            cell.axis_values = {inst.costs.c_sr, inst.costs.c_sp, 0.0};
            return cell;
        },
        table.cells);
    return table;
}

SweepTable tradeoff_scan(const SystemInstance& base, const std::vector<TradeoffTriple>& triples,
                         const SweepOptions& options) {
    SweepTable table;
    table.axis_names = {"p01", "p10", "p_chnl"};
    table.has_sim = options.sim_slots > 0;

    for_each_cell(
        triples.size(), options.threads,
        [&](std::size_t idx) {
            const TradeoffTriple& t = triples[idx];
            SystemInstance inst = base;
            inst.source.p01 = t.p01;
            inst.source.p10 = t.p10;
            inst.channel.p_chnl = t.p_chnl;
            SweepCell cell = evaluate_cell(inst, options, idx);
            cell.axis_values = {t.p01, t.p10, t.p_chnl};
            return cell;
        },
        table.cells);
    return table;
}

}  // namespace aoisrp
