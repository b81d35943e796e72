#ifndef LINEDET_CANNY_HPP
#define LINEDET_CANNY_HPP

#include "linedet/image.hpp"

namespace linedet {

/**
 * Classic Canny edge baseline: Gaussian smoothing at fixed sigma 1.4, Sobel
 * gradients, non-maximum suppression along the gradient direction, then
 * hysteresis linking from strong (>= high) through weak (>= low) pixels.
 * Requires 0 <= low <= high (gradient-magnitude units).
 */
BinaryImage canny_baseline(const GrayImage& img, double low, double high);

}  // namespace linedet

#endif  // LINEDET_CANNY_HPP
