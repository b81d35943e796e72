#include "linedet/overlay.hpp"

#include <cmath>

namespace linedet {

std::vector<std::pair<int, int>> rasterize_polar_line(double theta, double rho,
                                                      int width, int height) {
    normalize_polar(theta, rho);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    std::vector<std::pair<int, int>> pixels;
    if (std::fabs(s) >= std::fabs(c)) {
        // More horizontal than vertical: one pixel per column.
        for (int x = 0; x < width; ++x) {
            const long y = std::lround((rho - x * c) / s);
            if (y >= 0 && y < height) pixels.emplace_back(x, static_cast<int>(y));
        }
    } else {
        for (int y = 0; y < height; ++y) {
            const long x = std::lround((rho - y * s) / c);
            if (x >= 0 && x < width) pixels.emplace_back(static_cast<int>(x), y);
        }
    }
    return pixels;
}

GrayImage render_overlay(const GrayImage& img, const std::vector<PolarLine>& lines) {
    GrayImage out = img;
    for (const PolarLine& line : lines)
        for (const auto& [x, y] : rasterize_polar_line(line.theta, line.rho,
                                                       img.width(), img.height()))
            out.set(x, y, 255);
    return out;
}

}  // namespace linedet
