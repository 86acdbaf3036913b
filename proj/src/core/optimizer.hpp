#pragma once

// Exact solution of the constrained policy problem. The objective is a
// strictly decreasing transform of psi = mu*p_sr + nu*p_sp, so minimizing the
// average age is the same as maximizing psi over a 2-D polytope in
// (p_sr, p_sp); the optimum sits at a polytope vertex, which we enumerate
// from pairwise intersections of the five bounding lines.

#include <optional>
#include <string>
#include <vector>

#include "core/analysis.hpp"
#include "core/types.hpp"

namespace aoisrp {

enum class FeasibilityStatus {
    Feasible,
    InfeasibleCost,   // no policy meets the cost budget
    InfeasibleCae,    // cost-feasible policies all violate the CAE bound
    UnboundedAoi,     // constraints admit only psi = 0 (age never resets)
};

const char* to_string(FeasibilityStatus status);

struct PolicyVertex {
    double p_sr = 0.0;
    double p_sp = 0.0;
};

// All vertices of {p_sr >= 0, p_sp >= 0, p_sr + p_sp <= 1, cost <= c0,
// cae <= d0}, deduplicated. Empty when the polytope is empty.
std::vector<PolicyVertex> feasible_vertices(const SystemInstance& instance);

struct SrpSolution {
    FeasibilityStatus status = FeasibilityStatus::InfeasibleCost;
    std::optional<SrpPolicy> policy;   // present iff Feasible
    std::optional<double> psi;
    std::optional<double> aoi;
    std::optional<double> cae;
    std::optional<double> cost;
    std::vector<std::string> binding;  // active constraints at the optimum
};

// Maximum-psi vertex with deterministic tie-breaking: lowest expected cost
// first, then the larger p_sp.
SrpSolution solve_srp(const SystemInstance& instance);

FeasibilityStatus classify_feasibility(const SystemInstance& instance);

struct LowerBoundSolution {
    FeasibilityStatus status = FeasibilityStatus::InfeasibleCost;
    std::optional<double> value;   // L_B
    std::optional<double> q_hat;   // optimal throughput, equals psi*
};

// The relaxed problem sharing the optimal throughput with solve_srp; its
// value lower-bounds the optimum over all admissible policies.
LowerBoundSolution solve_lower_bound(const SystemInstance& instance);

// Ratio of the solved objective to the lower bound; < 2 whenever w0 >= 1.
// Empty unless the instance is Feasible.
std::optional<double> optimality_ratio(const SystemInstance& instance);

}  // namespace aoisrp
