#ifndef LINEDET_HESSIAN_HPP
#define LINEDET_HESSIAN_HPP

#include <utility>
#include <vector>

#include "linedet/image.hpp"

namespace linedet {

/// Per-pixel second derivatives of the Gaussian-smoothed image.
struct HessianField {
    int width = 0;
    int height = 0;
    double sigma = 0;
    std::vector<double> fxx;
    std::vector<double> fxy;
    std::vector<double> fyy;

    std::size_t idx(int x, int y) const {
        return static_cast<std::size_t>(y) * width + x;
    }
};

enum class RidgePolarity { BrightLine, DarkLine, Both };

struct RidgeParams {
    double sigma = 1.0;
    double response_threshold = 0.3;  // fraction of the max ridge response
    RidgePolarity polarity = RidgePolarity::BrightLine;
};

/// Gaussian kernel sampled at integer offsets -r..r, r = ceil(3*sigma),
/// normalized to sum 1.
std::vector<double> gaussian_kernel(double sigma);

/// Separable Gaussian smoothing with replicate padding; returns doubles.
std::vector<double> gaussian_smooth(const GrayImage& img, double sigma);

/**
 * Hessian of the smoothed image: central second differences along x and y
 * and the mixed central difference, with replicate padding. The composite is
 * a discrete second-derivative-of-Gaussian kernel of radius ceil(3*sigma)+1,
 * and matches finite differences of the smoothed image exactly.
 */
HessianField hessian_field(const GrayImage& img, double sigma);

/// Eigenvalues of [[fxx, fxy], [fxy, fyy]], ordered |l1| <= |l2|
/// (ties ordered by value).
std::pair<double, double> eigenvalues(double fxx, double fxy, double fyy);

/**
 * Ridge map: a pixel is marked iff the dominant eigenvalue l2 has the
 * polarity-required sign (l2 < 0 for bright lines), |l2| reaches
 * response_threshold times the image maximum of |l2|, and |l2| is a local
 * maximum along the eigenvector of l2 (across the ridge).
 */
BinaryImage ridge_map(const GrayImage& img, const RidgeParams& params);

}  // namespace linedet

#endif  // LINEDET_HESSIAN_HPP
