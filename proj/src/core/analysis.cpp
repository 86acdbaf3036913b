#include "core/analysis.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "core/model.hpp"

namespace aoisrp {

CaeCoefficients cae_coefficients(const CaePenalty& penalty, const StationaryDist& dist) {
    const double pi0 = dist.pi0;
    const double pi1 = dist.pi1;
    CaeCoefficients c;
    c.zeta = penalty.d00 * pi0 * pi0 + penalty.d01 * pi0 * pi1 +
             penalty.d10 * pi1 * pi0 + penalty.d11 * pi1 * pi1;
    c.xi = pi0 * pi1 * (penalty.d00 - penalty.d01 - penalty.d10 + penalty.d11);
    return c;
}

double expected_cae(const CaeCoefficients& coeffs, double psi) {
    return coeffs.zeta + coeffs.xi * psi;
}

JointDist decoupled_joint(const StationaryDist& dist, double psi) {
    const double cross = dist.pi0 * dist.pi1;
    JointDist j;
    j.p[0][0] = dist.pi0 * dist.pi0 + cross * psi;
    j.p[1][1] = dist.pi1 * dist.pi1 + cross * psi;
    j.p[0][1] = cross * (1.0 - psi);
    j.p[1][0] = cross * (1.0 - psi);
    return j;
}

double average_aoi(double psi, const AoiWeights& weights, double pi1) {
    if (psi <= 0.0) {
        throw std::domain_error("psi = 0: age grows without bound");
    }
    return (1.0 / psi - 1.0) + weights.w0 + pi1 * (weights.w1 - weights.w0);
}

double lower_bound_value(double q_hat, const AoiWeights& weights, double pi1) {
    if (q_hat <= 0.0) {
        throw std::domain_error("q_hat = 0: lower bound is unbounded");
    }
    return 0.5 * (1.0 / q_hat - 1.0) + weights.w0 + pi1 * (weights.w1 - weights.w0);
}

double AoiDistribution::total_mass() const {
    double s = 0.0;
    for (double p : probs) s += p;
    return s + tail_mass;
}

double AoiDistribution::mean() const {
    double s = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        s += static_cast<double>(k_min + static_cast<int>(i)) * probs[i];
    }
    return s + tail_mean;
}

AoiDistribution aoi_stationary_distribution(double psi, const AoiWeights& weights,
                                            const StationaryDist& dist, int k_max) {
    if (psi <= 0.0 || psi > 1.0) {
        throw std::domain_error("psi must lie in (0, 1]");
    }
    if (k_max < weights.w1) {
        throw std::invalid_argument("k_max must be >= w1");
    }

    const double theta = 1.0 - psi;
    AoiDistribution out;
    out.k_min = weights.w0;
    out.probs.resize(static_cast<std::size_t>(k_max - weights.w0 + 1), 0.0);

    for (int k = weights.w0; k <= k_max; ++k) {
        double p = dist.pi0 * psi * std::pow(theta, k - weights.w0);
        if (k >= weights.w1) {
            p += dist.pi1 * psi * std::pow(theta, k - weights.w1);
        }
        out.probs[static_cast<std::size_t>(k - weights.w0)] = p;
    }

    // Geometric tail beyond k_max: each component contributes
    // pi_i theta^(k_max+1-w_i) mass and pi_i theta^(k_max+1-w_i) *
    // (theta/psi + k_max + 1) to the mean.
    const double t0 = dist.pi0 * std::pow(theta, k_max + 1 - weights.w0);
    const double t1 = dist.pi1 * std::pow(theta, k_max + 1 - weights.w1);
    out.tail_mass = t0 + t1;
    out.tail_mean = (t0 + t1) * (theta / psi + k_max + 1.0);
    return out;
}

namespace {

// Solves a 4x4 linear system in place by Gaussian elimination with partial
// pivoting. Returns false when a pivot falls below tolerance.
bool solve4(std::array<std::array<double, 4>, 4>& a, std::array<double, 4>& b) {
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 4; ++r) {
            if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
        }
        if (std::fabs(a[pivot][col]) < 1e-12) return false;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (int r = col + 1; r < 4; ++r) {
            const double f = a[r][col] / a[col][col];
            for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    for (int r = 3; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < 4; ++c) s -= a[r][c] * b[c];
        b[r] = s / a[r][r];
    }
    return true;
}

}  // namespace

JointDist exact_joint_stationary(const SourceModel& source, double psi) {
    if (psi < 0.0 || psi > 1.0) {
        throw std::domain_error("psi must lie in [0, 1]");
    }
    stationary_distribution(source);  // rejects degenerate sources

    const double src[2][2] = {{1.0 - source.p01, source.p01},
                              {source.p10, 1.0 - source.p10}};

    // State index 2*x + xhat, ordered (0,0), (0,1), (1,0), (1,1).
    double trans[4][4];
    for (int x = 0; x < 2; ++x) {
        for (int xh = 0; xh < 2; ++xh) {
            for (int xn = 0; xn < 2; ++xn) {
                for (int xhn = 0; xhn < 2; ++xhn) {
                    double copy = (xhn == xn) ? psi : 0.0;
                    double hold = (xhn == xh) ? 1.0 - psi : 0.0;
                    trans[2 * x + xh][2 * xn + xhn] = src[x][xn] * (copy + hold);
                }
            }
        }
    }

    // Balance equations pi (P - I) = 0 with the last equation replaced by the
    // normalization sum(pi) = 1.
    std::array<std::array<double, 4>, 4> a{};
    std::array<double, 4> b{0.0, 0.0, 0.0, 1.0};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 4; ++j) {
            a[i][j] = trans[j][i] - (i == j ? 1.0 : 0.0);
        }
    }
    for (int j = 0; j < 4; ++j) a[3][j] = 1.0;

    if (!solve4(a, b)) {
        throw std::domain_error("joint chain has no unique stationary distribution");
    }

    JointDist out;
    for (int s = 0; s < 4; ++s) {
        out.p[s / 2][s % 2] = b[static_cast<std::size_t>(s)] < 0.0 && b[static_cast<std::size_t>(s)] > -1e-12
                                  ? 0.0
                                  : b[static_cast<std::size_t>(s)];
    }
    return out;
}

}  // namespace aoisrp
