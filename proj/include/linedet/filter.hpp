#ifndef LINEDET_FILTER_HPP
#define LINEDET_FILTER_HPP

#include <optional>
#include <vector>

#include "linedet/hough.hpp"

namespace linedet {

enum class SpacingNormalization { None, ByMean };

struct FilterParams {
    double angle_bin_deg = 1.0;
    double spacing_variance_threshold = 0.01;
    SpacingNormalization spacing_normalization = SpacingNormalization::ByMean;
};

/// Slope through two distinct points; nullopt is the vertical sentinel.
/// Consistent with a line's theta via k = -cot(theta) for theta != 0.
std::optional<double> slope_of(PointD p1, PointD p2);

/**
 * Distance between two parallel lines. For normal-form lines A = cos(theta),
 * B = sin(theta), C = -rho, so |C1 - C2| / sqrt(A^2 + B^2) reduces to
 * |rho1 - rho2| after wrap normalization. Throws NotParallelError when the
 * angular gap exceeds angle_tol.
 */
double parallel_distance(const PolarLine& l1, const PolarLine& l2, double angle_tol);

/**
 * Keep the candidates whose angle falls in the modal angle-histogram bin or
 * one of its two circular neighbors. Ties between bins break toward the bin
 * with the larger vote total, then the smaller bin index.
 */
std::vector<PolarLine> slope_mode_filter(const std::vector<PolarLine>& candidates,
                                         const FilterParams& params);

/**
 * Spacing coherence filter over a near-parallel line set. Lines are sorted
 * by rho; while the variance of (optionally mean-normalized) consecutive
 * gaps reaches spacing_variance_threshold and more than 2 lines remain, the
 * line whose removal lowers the variance the most is dropped. Returned in
 * rho order.
 */
std::vector<PolarLine> spacing_variance_filter(const std::vector<PolarLine>& parallel,
                                               const FilterParams& params);

/// Gap variance of a rho-sorted line set under the given normalization;
/// 0 when fewer than 2 gaps exist.
double spacing_variance(const std::vector<PolarLine>& lines,
                        SpacingNormalization normalization);

}  // namespace linedet

#endif  // LINEDET_FILTER_HPP
