#pragma once

// Slot-level Monte Carlo engine. Each slot: the source steps, an action is
// drawn from the policy, the channel and delivery are drawn, the estimate
// copies the fresh state on success, and the age resets to w0/w1 or grows by
// one. Three independent substreams (source, action, channel) are derived
// from the run seed so that changing the policy leaves the source path
// untouched.

#include <cstdint>
#include <string>
#include <vector>

#include "core/analysis.hpp"
#include "core/types.hpp"

namespace aoisrp {

enum class Action : int { NS = 0, SR = 1, SP = 2 };

const char* to_string(Action action);

struct SimConfig {
    std::uint64_t slots = 1'000'000;
    std::uint64_t seed = 1;
    std::uint64_t warmup_slots = 10'000;  // excluded from every average
    bool collect_joint = true;
    int aoi_hist_max = 256;               // ages above this land in the overflow bucket
    bool equal_start = false;             // start the estimate equal to the state
};

struct SimState {
    int x = 0;
    int x_hat = 0;
    std::uint64_t aoi = 1;
};

struct SlotRecord {
    std::uint64_t slot = 0;
    Action action = Action::NS;
    bool delivered = false;
    int x = 0;
    int x_hat = 0;
    std::uint64_t aoi = 0;  // age during this slot, before the update
    double cae = 0.0;
    double cost = 0.0;
};

struct SimResult {
    double avg_aoi = 0.0;
    double avg_cae = 0.0;
    double avg_cost = 0.0;
    double empirical_psi = 0.0;

    // Batch-means standard errors (100 batches); zero when too few slots.
    double se_aoi = 0.0;
    double se_cae = 0.0;
    double se_cost = 0.0;
    double se_psi = 0.0;

    JointDist joint;                       // empirical (X, Xhat) occupancy
    double joint_se[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    double source_pi1 = 0.0;               // empirical P(X = 1)
    double estimate_pi1 = 0.0;             // empirical P(Xhat = 1)
    double se_source_pi1 = 0.0;
    double se_estimate_pi1 = 0.0;

    std::vector<std::uint64_t> aoi_histogram;  // index = age, 0 .. aoi_hist_max
    std::uint64_t aoi_overflow = 0;
    std::uint64_t slots_counted = 0;
    std::uint64_t delivered_count = 0;
};

// Deterministic substream seed for a labeled component of a run.
std::uint64_t derive_stream_seed(std::uint64_t seed, const char* label);

// Advances one slot given the action and three uniform draws
// (source transition, channel state, delivery). Returns the slot record and
// leaves the post-slot state in `state`.
struct StepDraws {
    double u_source = 0.0;
    double u_channel = 0.0;
    double u_delivery = 0.0;
};

SlotRecord step(SimState& state, const SystemInstance& instance, Action action,
                const StepDraws& draws);

// Runs `config.slots` slots and averages everything after the warmup.
// Bit-identical output for identical inputs.
SimResult run(const SystemInstance& instance, const SrpPolicy& policy, const SimConfig& config);

// Same dynamics, returning the per-slot records. Throws when config.slots
// exceeds max_records.
std::vector<SlotRecord> run_trace(const SystemInstance& instance, const SrpPolicy& policy,
                                  const SimConfig& config, std::uint64_t max_records);

// CSV with header slot,action,delivered,x,x_hat,aoi,cae,cost.
std::string trace_to_csv(const std::vector<SlotRecord>& records);

}  // namespace aoisrp
