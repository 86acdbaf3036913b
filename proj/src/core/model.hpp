#pragma once

// Elementary derived quantities and instance validation.

#include <string>
#include <vector>

#include "core/types.hpp"

namespace aoisrp {

// Per-action delivery success probabilities, averaged over the channel state.
struct SuccessProbs {
    double mu = 0.0;  // raw transmission
    double nu = 0.0;  // processed transmission
};

// pi0 = p10/(p01+p10), pi1 = p01/(p01+p10). Throws std::domain_error when
// p01 + p10 = 0 (no unique stationary distribution).
StationaryDist stationary_distribution(const SourceModel& source);

SuccessProbs success_probabilities(const ChannelModel& channel);

// Per-slot probability of a successful update under a policy:
// psi = mu*p_sr + nu*p_sp.
double success_rate(const SrpPolicy& policy, double mu, double nu);

struct ValidationIssue {
    std::string field;    // dotted path, e.g. "source.p01"
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> errors;
    std::vector<ValidationIssue> warnings;

    bool ok() const { return errors.empty(); }
};

// Checks all instance invariants. Range violations, degenerate sources and
// negative off-diagonal penalties are errors; cost-ordering violations and
// positive diagonal penalties only warn (both are meaningful in sweeps).
ValidationReport validate_instance(const SystemInstance& instance);

bool is_valid_policy(const SrpPolicy& policy);

// Expected per-slot cost of a policy, c . p.
double policy_cost(const SrpPolicy& policy, const CostModel& costs);

}  // namespace aoisrp
