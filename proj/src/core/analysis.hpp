#pragma once

// Closed-form expressions for the expected actuation-error penalty and the
// stationary age process, plus an exact joint-chain oracle used to cross-check
// the decoupled closed form.

#include <vector>

#include "core/types.hpp"

namespace aoisrp {

// Expected per-slot actuation-error penalty is zeta + xi * psi.
struct CaeCoefficients {
    double zeta = 0.0;
    double xi = 0.0;
};

// Joint distribution of (true state, estimate). p[i][j] = P(X = i, Xhat = j).
struct JointDist {
    double p[2][2] = {{0.0, 0.0}, {0.0, 0.0}};

    double match_probability() const { return p[0][0] + p[1][1]; }
    double marginal_x1() const { return p[1][0] + p[1][1]; }
    double marginal_xhat1() const { return p[0][1] + p[1][1]; }
};

// zeta = sum_ij d_ij pi_i pi_j,  xi = pi0 pi1 (d00 - d01 - d10 + d11).
CaeCoefficients cae_coefficients(const CaePenalty& penalty, const StationaryDist& dist);

double expected_cae(const CaeCoefficients& coeffs, double psi);

// Joint table implied by the decoupled closed form:
//   p(i,i) = pi_i^2 + pi0 pi1 psi,  p(i,j) = pi0 pi1 (1 - psi) for i != j.
JointDist decoupled_joint(const StationaryDist& dist, double psi);

// Long-run average age under success rate psi:
//   (1/psi - 1) + w0 + pi1 (w1 - w0).
// Throws std::domain_error for psi <= 0 (age grows without bound).
double average_aoi(double psi, const AoiWeights& weights, double pi1);

// Lower-bound objective at throughput q_hat:
//   (1/2)(1/q_hat - 1) + w0 + pi1 (w1 - w0).
double lower_bound_value(double q_hat, const AoiWeights& weights, double pi1);

// Stationary age distribution truncated at k_max. probs[k - w0] holds
// P(A = k); the geometric mass and mean beyond k_max are kept in closed form
// so normalization and mean checks stay exact.
struct AoiDistribution {
    int k_min = 1;                // equals w0
    std::vector<double> probs;    // k = k_min .. k_max
    double tail_mass = 0.0;       // P(A > k_max)
    double tail_mean = 0.0;       // sum_{k > k_max} k P(A = k)

    double total_mass() const;
    double mean() const;          // includes the analytic tail
};

// P(A = k) = pi0 psi (1-psi)^(k-w0) for w0 <= k < w1, plus
// pi1 psi (1-psi)^(k-w1) once k >= w1. Requires psi in (0,1], k_max >= w1.
AoiDistribution aoi_stationary_distribution(double psi, const AoiWeights& weights,
                                            const StationaryDist& dist, int k_max);

// Exact stationary distribution of the coupled chain on (X, Xhat): each slot
// X steps by the source matrix, then Xhat copies the new X with probability
// psi and holds otherwise. Solved from the 4-state balance equations; throws
// std::domain_error when the chain has no unique stationary distribution
// (e.g. psi = 0).
JointDist exact_joint_stationary(const SourceModel& source, double psi);

}  // namespace aoisrp
