#include "core/simulator.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "core/model.hpp"

namespace aoisrp {

const char* to_string(Action action) {
    switch (action) {
        case Action::NS: return "NS";
        case Action::SR: return "SR";
        case Action::SP: return "SP";
    }
    return "??";
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// One uniform stream; doubles are built from the top 53 bits so results do
// not depend on the standard library's distribution implementation.
class UniformStream {
public:
    explicit UniformStream(std::uint64_t seed) : engine_(seed) {}

    double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

struct BatchAccumulator {
    double aoi = 0.0;
    double cae = 0.0;
    double cost = 0.0;
    double delivered = 0.0;
    double joint[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    double x1 = 0.0;
    double xhat1 = 0.0;
};

double batch_se(const std::vector<double>& means) {
    const std::size_t n = means.size();
    if (n < 2) return 0.0;
    double mean = 0.0;
    for (double m : means) mean += m;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double m : means) ss += (m - mean) * (m - mean);
    return std::sqrt(ss / (static_cast<double>(n) * static_cast<double>(n - 1)));
}

Action sample_action(const SrpPolicy& policy, double u) {
    if (u < policy.p_ns) return Action::NS;
    if (u < policy.p_ns + policy.p_sr) return Action::SR;
    return Action::SP;
}

void check_run_inputs(const SystemInstance& instance, const SrpPolicy& policy,
                      const SimConfig& config) {
    if (!validate_instance(instance).ok()) {
        throw std::invalid_argument("invalid instance");
    }
    if (!is_valid_policy(policy)) {
        throw std::invalid_argument("policy is not a probability vector");
    }
    if (config.slots == 0 || config.warmup_slots >= config.slots) {
        throw std::invalid_argument("warmup_slots must be smaller than slots");
    }
    if (config.aoi_hist_max < 0) {
        throw std::invalid_argument("aoi_hist_max must be nonnegative");
    }
}

}  // namespace

std::uint64_t derive_stream_seed(std::uint64_t seed, const char* label) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a over the label
    for (const char* c = label; *c; ++c) {
        h ^= static_cast<unsigned char>(*c);
        h *= 1099511628211ull;
    }
    return splitmix64(seed ^ h);
}

SlotRecord step(SimState& state, const SystemInstance& instance, Action action,
                const StepDraws& draws) {
    // Source steps first; a success reveals the current-slot state.
    const double p_change = state.x == 0 ? instance.source.p01 : instance.source.p10;
    if (draws.u_source < p_change) state.x = 1 - state.x;

    bool delivered = false;
    double cost = instance.costs.c_ns;
    if (action != Action::NS) {
        const bool good = draws.u_channel < instance.channel.p_chnl;
        double p_success;
        if (action == Action::SR) {
            p_success = good ? instance.channel.p_r1 : instance.channel.p_r0;
            cost = instance.costs.c_sr;
        } else {
            p_success = good ? instance.channel.p_p1 : instance.channel.p_p0;
            cost = instance.costs.c_sp;
        }
        delivered = draws.u_delivery < p_success;
    }

    if (delivered) state.x_hat = state.x;

    const double pen[2][2] = {{instance.penalty.d00, instance.penalty.d01},
                              {instance.penalty.d10, instance.penalty.d11}};

    SlotRecord rec;
    rec.action = action;
    rec.delivered = delivered;
    rec.x = state.x;
    rec.x_hat = state.x_hat;
    rec.aoi = state.aoi;
    rec.cae = pen[state.x][state.x_hat];
    rec.cost = cost;

    if (delivered) {
        state.aoi = state.x_hat == 0 ? static_cast<std::uint64_t>(instance.weights.w0)
                                     : static_cast<std::uint64_t>(instance.weights.w1);
    } else {
        state.aoi += 1;
    }
    return rec;
}

namespace {

// Shared driver for run() and run_trace(); `sink` sees every slot record.
template <typename Sink>
void drive(const SystemInstance& instance, const SrpPolicy& policy, const SimConfig& config,
           Sink&& sink) {
    UniformStream source_stream(derive_stream_seed(config.seed, "source"));
    UniformStream action_stream(derive_stream_seed(config.seed, "action"));
    UniformStream channel_stream(derive_stream_seed(config.seed, "channel"));

    const StationaryDist pi = stationary_distribution(instance.source);

    SimState state;
    state.x = source_stream.next() < pi.pi1 ? 1 : 0;
    const double u_est = source_stream.next();  // drawn either way to keep streams aligned
    state.x_hat = config.equal_start ? state.x : (u_est < pi.pi1 ? 1 : 0);
    state.aoi = static_cast<std::uint64_t>(instance.weights.w0);

    for (std::uint64_t n = 1; n <= config.slots; ++n) {
        const Action action = sample_action(policy, action_stream.next());
        StepDraws draws;
        draws.u_source = source_stream.next();
        draws.u_channel = channel_stream.next();
        draws.u_delivery = channel_stream.next();
        SlotRecord rec = step(state, instance, action, draws);
        rec.slot = n;
        sink(rec);
    }
}

}  // namespace

SimResult run(const SystemInstance& instance, const SrpPolicy& policy, const SimConfig& config) {
    check_run_inputs(instance, policy, config);

    const std::uint64_t counted = config.slots - config.warmup_slots;
    const std::uint64_t n_batches = std::min<std::uint64_t>(100, counted >= 2 ? counted / 2 : 1);
    const std::uint64_t batch_size = counted / std::max<std::uint64_t>(n_batches, 1);

    SimResult res;
    res.aoi_histogram.assign(static_cast<std::size_t>(config.aoi_hist_max) + 1, 0);
    res.slots_counted = counted;

    double sum_aoi = 0.0, sum_cae = 0.0, sum_cost = 0.0;
    std::uint64_t delivered = 0, x1 = 0, xhat1 = 0;
    std::uint64_t joint_counts[2][2] = {{0, 0}, {0, 0}};
    std::vector<BatchAccumulator> batches(static_cast<std::size_t>(n_batches));

    drive(instance, policy, config, [&](const SlotRecord& rec) {
        if (rec.slot <= config.warmup_slots) return;
        sum_aoi += static_cast<double>(rec.aoi);
        sum_cae += rec.cae;
        sum_cost += rec.cost;
        if (rec.delivered) ++delivered;
        x1 += static_cast<std::uint64_t>(rec.x);
        xhat1 += static_cast<std::uint64_t>(rec.x_hat);
        if (config.collect_joint) ++joint_counts[rec.x][rec.x_hat];
        if (rec.aoi <= static_cast<std::uint64_t>(config.aoi_hist_max)) {
            ++res.aoi_histogram[static_cast<std::size_t>(rec.aoi)];
        } else {
            ++res.aoi_overflow;
        }

        const std::uint64_t idx = (rec.slot - config.warmup_slots - 1) / batch_size;
        if (idx < n_batches) {
            BatchAccumulator& b = batches[static_cast<std::size_t>(idx)];
            b.aoi += static_cast<double>(rec.aoi);
            b.cae += rec.cae;
            b.cost += rec.cost;
            b.delivered += rec.delivered ? 1.0 : 0.0;
            b.joint[rec.x][rec.x_hat] += 1.0;
            b.x1 += rec.x;
            b.xhat1 += rec.x_hat;
        }
    });

    const double denom = static_cast<double>(counted);
    res.avg_aoi = sum_aoi / denom;
    res.avg_cae = sum_cae / denom;
    res.avg_cost = sum_cost / denom;
    res.empirical_psi = static_cast<double>(delivered) / denom;
    res.delivered_count = delivered;
    res.source_pi1 = static_cast<double>(x1) / denom;
    res.estimate_pi1 = static_cast<double>(xhat1) / denom;
    if (config.collect_joint) {
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                res.joint.p[i][j] = static_cast<double>(joint_counts[i][j]) / denom;
            }
        }
    }

    if (n_batches >= 2) {
        const double bs = static_cast<double>(batch_size);
        std::vector<double> means(batches.size());
        auto se_of = [&](auto field) {
            for (std::size_t i = 0; i < batches.size(); ++i) means[i] = field(batches[i]) / bs;
            return batch_se(means);
        };
        res.se_aoi = se_of([](const BatchAccumulator& b) { return b.aoi; });
        res.se_cae = se_of([](const BatchAccumulator& b) { return b.cae; });
        res.se_cost = se_of([](const BatchAccumulator& b) { return b.cost; });
        res.se_psi = se_of([](const BatchAccumulator& b) { return b.delivered; });
        res.se_source_pi1 = se_of([](const BatchAccumulator& b) { return b.x1; });
        res.se_estimate_pi1 = se_of([](const BatchAccumulator& b) { return b.xhat1; });
        if (config.collect_joint) {
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    res.joint_se[i][j] =
                        se_of([i, j](const BatchAccumulator& b) { return b.joint[i][j]; });
                }
            }
        }
    }
    return res;
}

std::vector<SlotRecord> run_trace(const SystemInstance& instance, const SrpPolicy& policy,
                                  const SimConfig& config, std::uint64_t max_records) {
    check_run_inputs(instance, policy, config);
    if (config.slots > max_records) {
        throw std::invalid_argument("trace would exceed the record cap");
    }
    std::vector<SlotRecord> records;
    records.reserve(static_cast<std::size_t>(config.slots));
    drive(instance, policy, config, [&](const SlotRecord& rec) { records.push_back(rec); });
    return records;
}

std::string trace_to_csv(const std::vector<SlotRecord>& records) {
    std::string out = "slot,action,delivered,x,x_hat,aoi,cae,cost\n";
    char line[160];
    for (const SlotRecord& rec : records) {
        std::snprintf(line, sizeof(line), "%llu,%s,%d,%d,%d,%llu,%.9g,%.9g\n",
                      static_cast<unsigned long long>(rec.slot), to_string(rec.action),
                      rec.delivered ? 1 : 0, rec.x, rec.x_hat,
                      static_cast<unsigned long long>(rec.aoi), rec.cae, rec.cost);
        out += line;
    }
    return out;
}

}  // namespace aoisrp
