#include "core/model.hpp"

#include <cmath>
#include <stdexcept>

namespace aoisrp {

namespace {

bool in_unit_interval(double v) {
    return std::isfinite(v) && v >= -kProbTol && v <= 1.0 + kProbTol;
}

void check_probability(ValidationReport& report, const std::string& field, double v) {
    if (!in_unit_interval(v)) {
        report.errors.push_back({field, "probability out of range [0,1]"});
    }
}

void check_finite(ValidationReport& report, const std::string& field, double v) {
    if (!std::isfinite(v)) {
        report.errors.push_back({field, "value must be finite"});
    }
}

}  // namespace

StationaryDist stationary_distribution(const SourceModel& source) {
    const double denom = source.p01 + source.p10;
    if (denom <= 0.0) {
        throw std::domain_error("degenerate source: p01 + p10 = 0 has no unique stationary distribution");
    }
    return {source.p10 / denom, source.p01 / denom};
}

SuccessProbs success_probabilities(const ChannelModel& channel) {
    SuccessProbs sp;
    sp.mu = channel.p_r1 * channel.p_chnl + channel.p_r0 * (1.0 - channel.p_chnl);
    sp.nu = channel.p_p1 * channel.p_chnl + channel.p_p0 * (1.0 - channel.p_chnl);
    return sp;
}

double success_rate(const SrpPolicy& policy, double mu, double nu) {
    return mu * policy.p_sr + nu * policy.p_sp;
}

ValidationReport validate_instance(const SystemInstance& instance) {
    ValidationReport report;

    check_probability(report, "source.p01", instance.source.p01);
    check_probability(report, "source.p10", instance.source.p10);
    if (std::isfinite(instance.source.p01) && std::isfinite(instance.source.p10) &&
        instance.source.p01 + instance.source.p10 <= 0.0) {
        report.errors.push_back({"source", "p01 + p10 must be positive"});
    }

    check_probability(report, "channel.p_chnl", instance.channel.p_chnl);
    check_probability(report, "channel.p_r1", instance.channel.p_r1);
    check_probability(report, "channel.p_r0", instance.channel.p_r0);
    check_probability(report, "channel.p_p1", instance.channel.p_p1);
    check_probability(report, "channel.p_p0", instance.channel.p_p0);

    check_finite(report, "costs.c_ns", instance.costs.c_ns);
    check_finite(report, "costs.c_sr", instance.costs.c_sr);
    check_finite(report, "costs.c_sp", instance.costs.c_sp);
    if (instance.costs.c_ns < 0.0) {
        report.errors.push_back({"costs.c_ns", "cost must be nonnegative"});
    }
    if (instance.costs.c_sr < 0.0) {
        report.errors.push_back({"costs.c_sr", "cost must be nonnegative"});
    }
    if (instance.costs.c_sp < 0.0) {
        report.errors.push_back({"costs.c_sp", "cost must be nonnegative"});
    }
    if (instance.costs.c_sr < instance.costs.c_ns) {
        report.warnings.push_back({"costs.c_sr", "transmitting costs less than idling"});
    }
    if (instance.costs.c_sp < instance.costs.c_ns) {
        report.warnings.push_back({"costs.c_sp", "transmitting costs less than idling"});
    }

    check_finite(report, "penalty.d00", instance.penalty.d00);
    check_finite(report, "penalty.d01", instance.penalty.d01);
    check_finite(report, "penalty.d10", instance.penalty.d10);
    check_finite(report, "penalty.d11", instance.penalty.d11);
    if (instance.penalty.d01 < 0.0) {
        report.errors.push_back({"penalty.d01", "off-diagonal penalty must be nonnegative"});
    }
    if (instance.penalty.d10 < 0.0) {
        report.errors.push_back({"penalty.d10", "off-diagonal penalty must be nonnegative"});
    }
    if (instance.penalty.d00 > 0.0) {
        report.warnings.push_back({"penalty.d00", "positive diagonal penalty relaxes the usual sign convention"});
    }
    if (instance.penalty.d11 > 0.0) {
        report.warnings.push_back({"penalty.d11", "positive diagonal penalty relaxes the usual sign convention"});
    }

    if (instance.weights.w0 < 1) {
        report.errors.push_back({"weights.w0", "reset weight must be a positive integer"});
    }
    if (instance.weights.w1 < instance.weights.w0) {
        report.errors.push_back({"weights.w1", "w1 must be >= w0"});
    }

    check_finite(report, "bounds.c0", instance.bounds.c0);
    check_finite(report, "bounds.d0", instance.bounds.d0);

    return report;
}

bool is_valid_policy(const SrpPolicy& policy) {
    if (!in_unit_interval(policy.p_ns) || !in_unit_interval(policy.p_sr) ||
        !in_unit_interval(policy.p_sp)) {
        return false;
    }
    return std::fabs(policy.p_ns + policy.p_sr + policy.p_sp - 1.0) <= kSimplexTol;
}

double policy_cost(const SrpPolicy& policy, const CostModel& costs) {
    return costs.c_ns * policy.p_ns + costs.c_sr * policy.p_sr + costs.c_sp * policy.p_sp;
}

}  // namespace aoisrp
