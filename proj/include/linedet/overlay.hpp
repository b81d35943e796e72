#ifndef LINEDET_OVERLAY_HPP
#define LINEDET_OVERLAY_HPP

#include <vector>

#include "linedet/hough.hpp"
#include "linedet/image.hpp"

namespace linedet {

/**
 * Integer rasterization of a polar line clipped to a width x height
 * rectangle: midpoint traversal along the major axis, one pixel per
 * major-axis coordinate. Empty when the line misses the rectangle.
 */
std::vector<std::pair<int, int>> rasterize_polar_line(double theta, double rho,
                                                      int width, int height);

/// Copy of `img` with each line drawn at intensity 255, 1 px wide.
GrayImage render_overlay(const GrayImage& img, const std::vector<PolarLine>& lines);

}  // namespace linedet

#endif  // LINEDET_OVERLAY_HPP
