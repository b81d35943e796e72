#include "linedet/hessian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace linedet {

namespace {

inline int clamp_i(int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); }

// Separable convolution pass with replicate padding.
void convolve_rows(const std::vector<double>& in, std::vector<double>& out, int w,
                   int h, const std::vector<double>& kernel) {
    const int r = static_cast<int>(kernel.size() / 2);
    for (int y = 0; y < h; ++y) {
        const double* row = in.data() + static_cast<std::size_t>(y) * w;
        double* orow = out.data() + static_cast<std::size_t>(y) * w;
        for (int x = 0; x < w; ++x) {
            double acc = 0;
            for (int k = -r; k <= r; ++k)
                acc += kernel[k + r] * row[clamp_i(x + k, 0, w - 1)];
            orow[x] = acc;
        }
    }
}

void convolve_cols(const std::vector<double>& in, std::vector<double>& out, int w,
                   int h, const std::vector<double>& kernel) {
    const int r = static_cast<int>(kernel.size() / 2);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0;
            for (int k = -r; k <= r; ++k)
                acc += kernel[k + r] *
                       in[static_cast<std::size_t>(clamp_i(y + k, 0, h - 1)) * w + x];
            out[static_cast<std::size_t>(y) * w + x] = acc;
        }
    }
}

}  // namespace

std::vector<double> gaussian_kernel(double sigma) {
    if (sigma <= 0) throw std::invalid_argument("gaussian_kernel: sigma must be > 0");
    const int r = static_cast<int>(std::ceil(3.0 * sigma));
    std::vector<double> kernel(static_cast<std::size_t>(2 * r + 1));
    double sum = 0;
    for (int t = -r; t <= r; ++t) {
        const double v = std::exp(-0.5 * t * t / (sigma * sigma));
        kernel[t + r] = v;
        sum += v;
    }
    for (double& v : kernel) v /= sum;
    return kernel;
}

std::vector<double> gaussian_smooth(const GrayImage& img, double sigma) {
    const int w = img.width();
    const int h = img.height();
    std::vector<double> data(img.pixels().begin(), img.pixels().end());
    std::vector<double> tmp(data.size());
    const std::vector<double> kernel = gaussian_kernel(sigma);
    convolve_rows(data, tmp, w, h, kernel);
    convolve_cols(tmp, data, w, h, kernel);
    return data;
}

HessianField hessian_field(const GrayImage& img, double sigma) {
    if (sigma <= 0) throw std::invalid_argument("hessian_field: sigma must be > 0");
    const int w = img.width();
    const int h = img.height();
    const std::vector<double> s = gaussian_smooth(img, sigma);

    HessianField field;
    field.width = w;
    field.height = h;
    field.sigma = sigma;
    field.fxx.resize(s.size());
    field.fxy.resize(s.size());
    field.fyy.resize(s.size());

    auto at = [&](int x, int y) {
        return s[static_cast<std::size_t>(clamp_i(y, 0, h - 1)) * w +
                 clamp_i(x, 0, w - 1)];
    };
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t i = field.idx(x, y);
            const double c = at(x, y);
            field.fxx[i] = at(x + 1, y) - 2 * c + at(x - 1, y);
            field.fyy[i] = at(x, y + 1) - 2 * c + at(x, y - 1);
            field.fxy[i] = (at(x + 1, y + 1) - at(x - 1, y + 1) -
                            at(x + 1, y - 1) + at(x - 1, y - 1)) / 4.0;
        }
    }
    return field;
}

std::pair<double, double> eigenvalues(double fxx, double fxy, double fyy) {
    const double half_trace = 0.5 * (fxx + fyy);
    const double q = std::sqrt(0.25 * (fxx - fyy) * (fxx - fyy) + fxy * fxy);
    const double hi = half_trace + q;
    const double lo = half_trace - q;
    if (std::fabs(hi) < std::fabs(lo)) return {hi, lo};
    if (std::fabs(lo) < std::fabs(hi)) return {lo, hi};
    return {std::min(lo, hi), std::max(lo, hi)};
}

BinaryImage ridge_map(const GrayImage& img, const RidgeParams& params) {
    if (!(params.response_threshold > 0 && params.response_threshold <= 1))
        throw std::invalid_argument("ridge_map: response_threshold must be in (0, 1]");
    const int w = img.width();
    const int h = img.height();
    const HessianField field = hessian_field(img, params.sigma);

    std::vector<double> l2(field.fxx.size());
    std::vector<double> mag(field.fxx.size());
    double max_mag = 0;
    for (std::size_t i = 0; i < l2.size(); ++i) {
        l2[i] = eigenvalues(field.fxx[i], field.fxy[i], field.fyy[i]).second;
        mag[i] = std::fabs(l2[i]);
        max_mag = std::max(max_mag, mag[i]);
    }

    BinaryImage out(w, h);
    if (max_mag == 0) return out;
    const double cut = params.response_threshold * max_mag;

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t i = field.idx(x, y);
            const double v = l2[i];
            if (mag[i] < cut || mag[i] == 0) continue;
            if (params.polarity == RidgePolarity::BrightLine && !(v < 0)) continue;
            if (params.polarity == RidgePolarity::DarkLine && !(v > 0)) continue;

            // Eigenvector of l2 points across the ridge; suppress non-maxima
            // along it. Quantized to the nearest of 4 neighbor axes.
            double ex = field.fxy[i];
            double ey = v - field.fxx[i];
            if (ex * ex + ey * ey < 1e-24) {
                ex = v - field.fyy[i];
                ey = field.fxy[i];
            }
            int dx = 1, dy = 0;
            if (ex != 0 || ey != 0) {
                double ang = std::atan2(ey, ex);
                if (ang < 0) ang += 3.14159265358979323846;
                const int sector =
                    static_cast<int>(std::floor(ang / (3.14159265358979323846 / 4.0) + 0.5)) % 4;
                switch (sector) {
                    case 0: dx = 1; dy = 0; break;
                    case 1: dx = 1; dy = 1; break;
                    case 2: dx = 0; dy = 1; break;
                    default: dx = -1; dy = 1; break;
                }
            }
            auto mag_at = [&](int px, int py) {
                if (px < 0 || px >= w || py < 0 || py >= h) return 0.0;
                return mag[field.idx(px, py)];
            };
            if (mag[i] >= mag_at(x + dx, y + dy) && mag[i] >= mag_at(x - dx, y - dy))
                out.set(x, y, true);
        }
    }
    return out;
}

}  // namespace linedet
