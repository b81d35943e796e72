#include "linedet/canny.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "linedet/hessian.hpp"

namespace linedet {

namespace {

constexpr double kSmoothingSigma = 1.4;

inline int clamp_i(int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); }

}  // namespace

BinaryImage canny_baseline(const GrayImage& img, double low, double high) {
    if (!(0 <= low && low <= high))
        throw std::invalid_argument("canny_baseline: need 0 <= low <= high");
    const int w = img.width();
    const int h = img.height();
    const std::vector<double> s = gaussian_smooth(img, kSmoothingSigma);

    auto at = [&](int x, int y) {
        return s[static_cast<std::size_t>(clamp_i(y, 0, h - 1)) * w +
                 clamp_i(x, 0, w - 1)];
    };

    std::vector<double> mag(s.size());
    std::vector<int> sector(s.size());  // gradient direction quantized to 4 axes
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double gx = (at(x + 1, y - 1) + 2 * at(x + 1, y) + at(x + 1, y + 1)) -
                              (at(x - 1, y - 1) + 2 * at(x - 1, y) + at(x - 1, y + 1));
            const double gy = (at(x - 1, y + 1) + 2 * at(x, y + 1) + at(x + 1, y + 1)) -
                              (at(x - 1, y - 1) + 2 * at(x, y - 1) + at(x + 1, y - 1));
            const std::size_t i = static_cast<std::size_t>(y) * w + x;
            mag[i] = std::hypot(gx, gy);
            double ang = std::atan2(gy, gx);
            if (ang < 0) ang += 3.14159265358979323846;
            sector[i] =
                static_cast<int>(std::floor(ang / (3.14159265358979323846 / 4.0) + 0.5)) % 4;
        }
    }

    static constexpr int kDx[4] = {1, 1, 0, -1};
    static constexpr int kDy[4] = {0, 1, 1, 1};

    auto mag_at = [&](int x, int y) {
        if (x < 0 || x >= w || y < 0 || y >= h) return 0.0;
        return mag[static_cast<std::size_t>(y) * w + x];
    };

    // 2 = strong, 1 = weak candidate after NMS. Of two equal neighbors along
    // the gradient the earlier one survives.
    std::vector<std::uint8_t> cls(s.size(), 0);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * w + x;
            if (mag[i] < low || mag[i] == 0) continue;
            const int dx = kDx[sector[i]];
            const int dy = kDy[sector[i]];
            if (mag[i] >= mag_at(x + dx, y + dy) && mag[i] > mag_at(x - dx, y - dy))
                cls[i] = mag[i] >= high ? 2 : 1;
        }
    }

    BinaryImage out(w, h);
    std::vector<std::pair<int, int>> stack;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (cls[static_cast<std::size_t>(y) * w + x] == 2) {
                out.set(x, y, true);
                stack.emplace_back(x, y);
            }
    while (!stack.empty()) {
        const auto [x, y] = stack.back();
        stack.pop_back();
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) {
                const int nx = x + dx;
                const int ny = y + dy;
                if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                const std::size_t ni = static_cast<std::size_t>(ny) * w + nx;
                if (cls[ni] == 1 && !out.at(nx, ny)) {
                    out.set(nx, ny, true);
                    stack.emplace_back(nx, ny);
                }
            }
    }
    return out;
}

}  // namespace linedet
