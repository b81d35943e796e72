#ifndef LINEDET_REGION_HPP
#define LINEDET_REGION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linedet/image.hpp"

namespace linedet {

/// One of n equal-width vertical slices of the image; columns [x_start, x_end).
struct Strip {
    int index = 0;
    int x_start = 0;
    int x_end = 0;
};

/// A horizontal line fragment found inside a strip: the representative row
/// and the longest edge run of that row.
struct StripSegment {
    int strip = 0;
    int y = 0;
    int run_start = 0;
    int run_length = 0;
};

/// Per-strip row range that is part of the line region.
struct StripBand {
    int x_start = 0;
    int x_end = 0;
    int upper_y = 0;
    int lower_y = 0;
};

/**
 * Piecewise-rectangular line region: per strip the rows
 * [upper_y, lower_y] belong to the region. d1/d2 are the minimum/maximum
 * inter-line spacings, i_c the ratio of region pixels to image pixels.
 */
struct RegionModel {
    std::vector<StripBand> strips;
    double d1 = 0;
    double d2 = 0;
    double i_c = 1.0;
    int width = 0;
    int height = 0;

    bool contains(int x, int y) const;
    /// Recompute i_c from the stored boundaries.
    double recompute_ic() const;
    /// True when every strip spans the full image height.
    bool full_image() const;

    /// Full-image region with i_c = 1 (the no-structure sentinel).
    static RegionModel sentinel(int width, int height, int n_strips, double d1,
                                double d2);
};

struct RegionConfig {
    int n_strips = 8;
    int min_run = 5;
    std::optional<double> d1;
    std::optional<double> d2;
};

/// Contiguous partition of [0, width) into n strips; the first (width mod n)
/// strips are one pixel wider.
std::vector<Strip> split_strips(int width, int n = 8);

/**
 * Scan rows top to bottom within the strip. A row qualifies when its longest
 * horizontal edge run is >= min_run; qualifying rows closer than d1/2 merge
 * into one segment (the row with the longest run represents the group, ties
 * to the smaller y). Returned in ascending y.
 */
std::vector<StripSegment> find_segments(const BinaryImage& edges, const Strip& strip,
                                        int min_run, double d1, double d2);

/**
 * Boundary rows from the segment list of one strip: the region extends d2
 * beyond the first and last segments (clamped to the image); with no
 * segments the full-height sentinel (0, height-1) is returned.
 */
std::pair<int, int> strip_boundaries(const std::vector<StripSegment>& segments,
                                     double d2, int image_height);

/**
 * (d1, d2) = (min, max) consecutive segment gap in the first strip holding
 * at least 2 segments. Throws EstimationError when no strip qualifies.
 */
std::pair<double, double> estimate_spacings(const std::vector<StripSegment>& segments);

/// Full region construction: strips, per-strip segments and boundaries,
/// spliced region and i_c. d1/d2 come from config or are estimated.
RegionModel build_region(const BinaryImage& edges, const RegionConfig& config);

/// Keep exactly the edge pixels inside the region.
BinaryImage mask_edges(const BinaryImage& edges, const RegionModel& region);

std::string region_to_json(const RegionModel& region);
RegionModel region_from_json(const std::string& text);

}  // namespace linedet

#endif  // LINEDET_REGION_HPP
