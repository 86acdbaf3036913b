#include "core/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "core/model.hpp"

namespace aoisrp {

const char* to_string(FeasibilityStatus status) {
    switch (status) {
        case FeasibilityStatus::Feasible: return "Feasible";
        case FeasibilityStatus::InfeasibleCost: return "InfeasibleCost";
        case FeasibilityStatus::InfeasibleCae: return "InfeasibleCae";
        case FeasibilityStatus::UnboundedAoi: return "UnboundedAoi";
    }
    return "Unknown";
}

namespace {

// a*x + b*y <= rhs in (p_sr, p_sp) coordinates.
struct HalfPlane {
    double a, b, rhs;

    double slack(double x, double y) const { return rhs - (a * x + b * y); }
    bool direction_degenerate() const { return std::fabs(a) < 1e-15 && std::fabs(b) < 1e-15; }
};

struct Geometry {
    SuccessProbs sp;
    CaeCoefficients cae;
    std::vector<HalfPlane> planes;  // simplex, cost, cae (degenerate ones dropped)
    bool empty = false;             // a degenerate constraint was unsatisfiable
};

Geometry build_geometry(const SystemInstance& inst) {
    Geometry g;
    g.sp = success_probabilities(inst.channel);
    g.cae = cae_coefficients(inst.penalty, stationary_distribution(inst.source));

    const CostModel& c = inst.costs;
    const HalfPlane candidates[5] = {
        {-1.0, 0.0, 0.0},
        {0.0, -1.0, 0.0},
        {1.0, 1.0, 1.0},
        {c.c_sr - c.c_ns, c.c_sp - c.c_ns, inst.bounds.c0 - c.c_ns},
        {g.cae.xi * g.sp.mu, g.cae.xi * g.sp.nu, inst.bounds.d0 - g.cae.zeta},
    };
    for (const HalfPlane& hp : candidates) {
        if (hp.direction_degenerate()) {
            if (hp.rhs < -kConstraintTol) g.empty = true;
            continue;  // satisfied everywhere, contributes no boundary line
        }
        g.planes.push_back(hp);
    }
    return g;
}

std::vector<PolicyVertex> enumerate_vertices(const Geometry& g) {
    std::vector<PolicyVertex> verts;
    if (g.empty) return verts;

    const auto& planes = g.planes;
    for (std::size_t i = 0; i < planes.size(); ++i) {
        for (std::size_t j = i + 1; j < planes.size(); ++j) {
            const double det = planes[i].a * planes[j].b - planes[j].a * planes[i].b;
            if (std::fabs(det) < 1e-14) continue;  // parallel boundaries
            const double x = (planes[i].rhs * planes[j].b - planes[j].rhs * planes[i].b) / det;
            const double y = (planes[i].a * planes[j].rhs - planes[j].a * planes[i].rhs) / det;

            bool feasible = true;
            for (const HalfPlane& hp : planes) {
                if (hp.slack(x, y) < -kConstraintTol) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible) continue;

            bool duplicate = false;
            for (const PolicyVertex& v : verts) {
                if (std::fabs(v.p_sr - x) <= kVertexDedupTol &&
                    std::fabs(v.p_sp - y) <= kVertexDedupTol) {
                    duplicate = true;
                    break;
                }
            }
            if (!duplicate) verts.push_back({x, y});
        }
    }
    return verts;
}

SrpPolicy vertex_policy(const PolicyVertex& v) {
    SrpPolicy p;
    p.p_sr = std::clamp(v.p_sr, 0.0, 1.0);
    p.p_sp = std::clamp(v.p_sp, 0.0, 1.0);
    p.p_ns = std::max(0.0, 1.0 - p.p_sr - p.p_sp);
    return p;
}

double min_simplex_cost(const CostModel& c) {
    return std::min({c.c_ns, c.c_sr, c.c_sp});
}

void require_valid(const SystemInstance& inst) {
    ValidationReport report = validate_instance(inst);
    if (!report.ok()) {
        throw std::invalid_argument("invalid instance: " + report.errors.front().field + ": " +
                                    report.errors.front().message);
    }
}

}  // namespace

std::vector<PolicyVertex> feasible_vertices(const SystemInstance& instance) {
    require_valid(instance);
    return enumerate_vertices(build_geometry(instance));
}

SrpSolution solve_srp(const SystemInstance& instance) {
    require_valid(instance);

    const Geometry g = build_geometry(instance);
    const std::vector<PolicyVertex> verts = enumerate_vertices(g);

    SrpSolution sol;
    if (verts.empty()) {
        sol.status = min_simplex_cost(instance.costs) > instance.bounds.c0 + kConstraintTol
                         ? FeasibilityStatus::InfeasibleCost
                         : FeasibilityStatus::InfeasibleCae;
        return sol;
    }

    const PolicyVertex* best = &verts.front();
    double best_psi = g.sp.mu * best->p_sr + g.sp.nu * best->p_sp;
    double best_cost = policy_cost(vertex_policy(*best), instance.costs);
    for (const PolicyVertex& v : verts) {
        const double psi = g.sp.mu * v.p_sr + g.sp.nu * v.p_sp;
        const double tie = 1e-12 * (1.0 + std::fabs(best_psi));
        if (psi > best_psi + tie) {
            best = &v;
            best_psi = psi;
            best_cost = policy_cost(vertex_policy(v), instance.costs);
            continue;
        }
        if (psi < best_psi - tie) continue;
        const double cost = policy_cost(vertex_policy(v), instance.costs);
        if (cost < best_cost - 1e-12 ||
            (std::fabs(cost - best_cost) <= 1e-12 && v.p_sp > best->p_sp)) {
            best = &v;
            best_psi = psi;
            best_cost = cost;
        }
    }

    if (best_psi <= 0.0) {
        sol.status = FeasibilityStatus::UnboundedAoi;
        return sol;
    }

    const SrpPolicy policy = vertex_policy(*best);
    const StationaryDist pi = stationary_distribution(instance.source);
    sol.status = FeasibilityStatus::Feasible;
    sol.policy = policy;
    sol.psi = success_rate(policy, g.sp.mu, g.sp.nu);
    sol.aoi = average_aoi(*sol.psi, instance.weights, pi.pi1);
    sol.cae = expected_cae(g.cae, *sol.psi);
    sol.cost = policy_cost(policy, instance.costs);

    if (policy.p_sr <= kConstraintTol) sol.binding.push_back("p_sr=0");
    if (policy.p_sp <= kConstraintTol) sol.binding.push_back("p_sp=0");
    if (std::fabs(policy.p_sr + policy.p_sp - 1.0) <= kConstraintTol) sol.binding.push_back("p_ns=0");
    if (std::fabs(*sol.cost - instance.bounds.c0) <= kConstraintTol) sol.binding.push_back("cost");
    if (std::fabs(*sol.cae - instance.bounds.d0) <= kConstraintTol) sol.binding.push_back("cae");

    return sol;
}

FeasibilityStatus classify_feasibility(const SystemInstance& instance) {
    return solve_srp(instance).status;
}

LowerBoundSolution solve_lower_bound(const SystemInstance& instance) {
    const SrpSolution sol = solve_srp(instance);
    LowerBoundSolution lb;
    lb.status = sol.status;
    if (sol.status == FeasibilityStatus::Feasible) {
        const StationaryDist pi = stationary_distribution(instance.source);
        lb.q_hat = sol.psi;
        lb.value = lower_bound_value(*sol.psi, instance.weights, pi.pi1);
    }
    return lb;
}

std::optional<double> optimality_ratio(const SystemInstance& instance) {
    const SrpSolution sol = solve_srp(instance);
    if (sol.status != FeasibilityStatus::Feasible) return std::nullopt;
    const StationaryDist pi = stationary_distribution(instance.source);
    return *sol.aoi / lower_bound_value(*sol.psi, instance.weights, pi.pi1);
}

}  // namespace aoisrp
