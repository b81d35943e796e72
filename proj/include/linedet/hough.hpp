#ifndef LINEDET_HOUGH_HPP
#define LINEDET_HOUGH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "linedet/image.hpp"
#include "linedet/region.hpp"

namespace linedet {

struct PointD {
    double x = 0;
    double y = 0;
};

/**
 * Line in normal (polar) form: the set of points with
 * x*cos(theta) + y*sin(theta) == rho, theta in [0, pi), rho signed.
 * `votes` is the accumulator support the line was detected with.
 */
struct PolarLine {
    double theta = 0;
    double rho = 0;
    long votes = 0;
};

/// (theta, rho) representations are 2-fold ambiguous; fold `theta` into
/// [0, pi), negating `rho` when the angle flips by pi.
void normalize_polar(double& theta, double& rho);

/// Circular angular gap between two normals, in [0, pi/2].
double theta_gap(double a, double b);

/// epsilon-equality on (theta, rho) with the wrap at theta ~ 0/pi handled,
/// where (theta, rho) ~ (theta - pi, -rho).
bool polar_close(const PolarLine& a, const PolarLine& b, double eps_theta,
                 double eps_rho);

/**
 * Dense (theta, rho) vote grid. theta bins cover [0, pi) with bin centers at
 * k * pi/theta_bins; rho bins cover [-rho_max, rho_max] at `rho_res` pixel
 * resolution with the bin center at index rho_center mapping to rho = 0.
 */
struct Accumulator {
    int theta_bins = 180;
    int rho_bins = 0;
    int rho_center = 0;
    double rho_res = 1.0;
    double rho_max = 0;
    std::vector<std::uint32_t> cells;

    Accumulator(int width, int height, int theta_bins_ = 180, double rho_res_ = 1.0);

    double theta_step() const { return 3.14159265358979323846 / theta_bins; }
    std::uint32_t at(int tb, int rb) const {
        return cells[static_cast<std::size_t>(tb) * rho_bins + rb];
    }
    std::uint32_t& at(int tb, int rb) {
        return cells[static_cast<std::size_t>(tb) * rho_bins + rb];
    }
    double theta_of(int tb) const { return tb * theta_step(); }
    double rho_of(int rb) const { return (rb - rho_center) * rho_res; }
};

/// Nearest-bin quantization into `acc`; theta within half a bin of pi wraps
/// to bin 0 with rho negated. Out-of-range rho is rejected.
std::pair<int, int> bin_of(const PolarLine& line, const Accumulator& acc);

/// Parameters for the randomized (two-point) transform.
struct SamplingParams {
    long max_samples = 20000;
    double epsilon_theta = 0.017453292519943295;  // 1 degree
    double epsilon_rho = 2.0;
    long vote_threshold = 2;
    std::uint64_t rng_seed = 0;
};

/// Normal-form line through two distinct points. The returned line satisfies
/// both point equations to 1e-9; votes = 0.
PolarLine polar_from_two_points(PointD p1, PointD p2);

/// One vote per theta bin for every edge pixel inside `mask` (whole image
/// when mask is null).
Accumulator accumulate_standard(const BinaryImage& edges, const RegionModel* mask,
                                int theta_bins);

/// Cells >= vote_threshold surviving 3x3 non-maximum suppression; sorted by
/// votes descending, then theta, then rho ascending.
std::vector<PolarLine> extract_peaks(const Accumulator& acc, long vote_threshold);

std::pair<Accumulator, std::vector<PolarLine>> standard_hough(
    const BinaryImage& edges, const RegionModel* mask, int theta_bins,
    long vote_threshold);

/**
 * Sparse parameter-space entry of the randomized transform. `theta`/`rho`
 * are the running means of all matched samples.
 */
struct SparseEntry {
    double theta = 0;
    double rho = 0;
    long votes = 0;
};

struct SparseAccumulator {
    std::vector<SparseEntry> entries;      // insertion order
    bool degenerate = false;               // fewer than 2 edge pixels in mask
    long samples_drawn = 0;
    long population = 0;                   // edge pixels inside the mask
};

/**
 * Draws `max_samples` unordered pairs of distinct edge pixels (uniform,
 * seeded), maps each pair to a line and merges it into the sparse list under
 * epsilon-equality: a matching entry gains a vote and its parameters move to
 * the running mean; otherwise a new entry is appended. Single-threaded and
 * deterministic for a fixed seed.
 */
SparseAccumulator randomized_accumulate(const BinaryImage& edges,
                                        const RegionModel* mask,
                                        const SamplingParams& params);

/// Entries with votes >= vote_threshold, same sort order as standard_hough.
std::vector<PolarLine> extract_sparse_peaks(const SparseAccumulator& acc,
                                            long vote_threshold);

struct RandomizedResult {
    std::vector<PolarLine> lines;
    bool degenerate = false;
    long samples_drawn = 0;
    long population = 0;
};

RandomizedResult randomized_hough(const BinaryImage& edges, const RegionModel* mask,
                                  const SamplingParams& params);

}  // namespace linedet

#endif  // LINEDET_HOUGH_HPP
