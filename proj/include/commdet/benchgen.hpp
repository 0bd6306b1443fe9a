#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "commdet/graph.hpp"
#include "commdet/rng.hpp"

namespace commdet {

// The classic 128-node "four groups" benchmark: four planted communities of
// 32 nodes; a node expects z_in neighbors inside its community and z_out
// outside, so z_in + z_out = 16 is the usual regime.
struct GnParams {
    double z_in = 6.0;
    double z_out = 10.0;

    static constexpr int n = 128;
    static constexpr int communities = 4;
    static constexpr int community_size = 32;
};

// Each intra-community pair is linked with probability z_in/31 and each
// inter-community pair with z_out/96, matching the expected degrees.
std::pair<Graph, GroundTruth> generate_gn(const GnParams& p, std::uint64_t seed);

// LFR-style benchmark: power-law degrees (exponent gamma, mean avg_deg,
// hard cap max_deg) and power-law community sizes (exponent beta, bounds
// [min_comm, max_comm]); each node keeps a fraction 1-mu of its edges inside
// its own community. Communities do not overlap.
struct LfrParams {
    int n = 1000;
    double avg_deg = 20.0;
    int max_deg = 50;
    double gamma = 2.0;
    double beta = 1.0;
    double mu = 0.1;
    int min_comm = 0;  // 0 = max(10, ceil((1-mu)*avg_deg)+1)
    int max_comm = 0;  // 0 = 100
    int rewire_sweeps = 100;

    int effective_min_comm() const;
    int effective_max_comm() const;
};

std::pair<Graph, GroundTruth> generate_lfr(const LfrParams& p, std::uint64_t seed);

// Discrete truncated power law over integers [lo, hi] with weight
// proportional to the integral of t^-exponent over [k-1/2, k+1/2] clipped at
// the (possibly fractional) lower cutoff. The fractional cutoff is what the
// mean calibration bisects on.
class PowerLawSampler {
public:
    PowerLawSampler(double exponent, double cutoff, int hi);

    int sample(Rng& rng) const;
    double mean() const { return mean_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }

private:
    std::vector<double> cdf_;
    int lo_ = 1, hi_ = 1;
    double mean_ = 0.0;
};

// Finds the fractional lower cutoff for which the truncated power law over
// [cutoff, hi] has the requested mean. Throws data_error when the target is
// out of range.
double calibrate_power_law_cutoff(double exponent, int hi, double target_mean);

// Community sizes from the [min_comm, max_comm] power law, resampled and
// trimmed until they sum to exactly n.
std::vector<int> sample_community_sizes(int n, double beta, int min_comm, int max_comm, Rng& rng);

// Mean over nodes of the fraction of incident edges leaving the node's own
// community. Isolated nodes are skipped.
double realized_mixing(const Graph& g, const GroundTruth& gt);

}  // namespace commdet
