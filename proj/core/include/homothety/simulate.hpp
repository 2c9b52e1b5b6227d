#pragma once

#include "homothety/classifier.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace homothety {

struct SampleConfig {
    std::vector<double> point;
    int num_words = 200000;
    int max_word_len = 40;
    double window = 3.0;  // sup-norm half-width around the origin
    std::uint64_t seed = 1;
    int streams = 1;  // independent RNG streams; result depends on (seed, streams) only
};

struct SampleResult {
    std::vector<std::vector<double>> points;
    std::size_t discarded = 0;

    std::size_t retained() const { return points.size(); }
};

// Random words: uniform length in [1, max_word_len], uniform steps over the
// generators and their inverses, applied to the base point in binary64.
// Points outside the window (or overflowing) are discarded and counted.
SampleResult sample_orbit(const GroupSpec& spec, const SampleConfig& cfg);

// Largest Euclidean distance from a sample to the predicted closure.
double deviation_from_prediction(const std::vector<std::vector<double>>& samples,
                                 const OrbitClosureDescription& desc);

struct CoverageResult {
    double coverage = 1.0;
    std::size_t probes = 0;
};

// Discretizes the predicted set inside the window at the given step and
// reports the fraction of probes with a sample within eps.
CoverageResult coverage_of_prediction(const std::vector<std::vector<double>>& samples,
                                      const OrbitClosureDescription& desc, double window,
                                      double step, double eps);

struct DensityReport {
    double max_deviation = 0.0;
    double coverage = 1.0;
    std::size_t retained = 0;
    std::size_t discarded = 0;
    std::size_t probes = 0;
};

// Density oracle for the family {q * lambda^p (1 - lambda^p)}: enumerates the
// family over p in [p_min, p_max] and |q| <= min(q_cap, adaptive bound) and
// checks eps-density on the interval grid.  Returns false when the budget is
// insufficient rather than erroring.
bool power_residue_dense(double lambda, int p_min, int p_max, long long q_cap, double lo,
                         double hi, double eps);

// Header x1,...,xn then one point per row; locale-independent formatting.
void write_csv(std::ostream& os, const std::vector<std::vector<double>>& points, int dimension);

int env_stream_count();  // HOMOTHETY_THREADS, clamped to [1, 64]; default 1

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next();
    std::uint64_t bounded(std::uint64_t n);  // uniform in [0, n)
};

}  // namespace homothety
