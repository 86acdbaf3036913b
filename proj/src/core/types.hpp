#pragma once

// Value types describing one monitored-source instance: the two-state source,
// the on/off wireless channel, per-action transmission costs, actuation-error
// penalties, AoI reset weights, and the two constraint bounds.

#include <cstdint>

namespace aoisrp {

// Transition probabilities of the two-state source chain.
struct SourceModel {
    double p01 = 0.0;  // P(state 0 -> 1)
    double p10 = 0.0;  // P(state 1 -> 0)
};

struct StationaryDist {
    double pi0 = 0.0;
    double pi1 = 0.0;
};

// Good/bad channel with per-action delivery probabilities. p_r* apply to raw
// transmissions, p_p* to processed ones; index 1 is the good channel state.
struct ChannelModel {
    double p_chnl = 0.0;
    double p_r1 = 0.0;
    double p_r0 = 0.0;
    double p_p1 = 0.0;
    double p_p0 = 0.0;
};

// Per-slot cost of each action (idle, sample+raw, sample+process).
struct CostModel {
    double c_ns = 0.0;
    double c_sr = 0.0;
    double c_sp = 0.0;
};

// Actuation-error penalty d_ij for true state i and estimate j. Off-diagonal
// entries are penalties (>= 0); diagonal entries may be negative (reward for
// acting on a correct estimate).
struct CaePenalty {
    double d00 = 0.0;
    double d01 = 0.0;
    double d10 = 0.0;
    double d11 = 0.0;
};

// Age reset values after a successful delivery of state 0 / state 1.
// Integers in slots, 1 <= w0 <= w1.
struct AoiWeights {
    int w0 = 1;
    int w1 = 1;
};

// Constraint bounds: c0 caps the average transmission cost, d0 the average
// actuation-error penalty (negative d0 is meaningful).
struct Bounds {
    double c0 = 0.0;
    double d0 = 0.0;
};

struct SystemInstance {
    SourceModel source;
    ChannelModel channel;
    CostModel costs;
    CaePenalty penalty;
    AoiWeights weights;
    Bounds bounds;
};

// Stationary randomized policy: i.i.d. per-slot action probabilities.
struct SrpPolicy {
    double p_ns = 1.0;
    double p_sr = 0.0;
    double p_sp = 0.0;
};

// Tolerances shared across modules.
inline constexpr double kProbTol = 1e-12;        // [0,1] range slack
inline constexpr double kSimplexTol = 1e-9;      // policy components must sum to 1
inline constexpr double kConstraintTol = 1e-9;   // constraint satisfaction slack
inline constexpr double kVertexDedupTol = 1e-10; // vertex deduplication radius

}  // namespace aoisrp
