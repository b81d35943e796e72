#include "linedet/filter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "linedet/error.hpp"

namespace linedet {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Fold every line into the polar representation nearest the reference angle
// so rho values of a near-parallel set are directly comparable.
std::vector<PolarLine> align_to_reference(const std::vector<PolarLine>& lines) {
    std::vector<PolarLine> out = lines;
    if (out.empty()) return out;
    const double ref = out.front().theta;
    for (PolarLine& l : out) {
        const double dt = l.theta - ref;
        if (dt > kPi / 2) {
            l.theta -= kPi;
            l.rho = -l.rho;
        } else if (dt < -kPi / 2) {
            l.theta += kPi;
            l.rho = -l.rho;
        }
    }
    return out;
}

std::vector<double> gaps_of(const std::vector<PolarLine>& sorted) {
    std::vector<double> gaps;
    for (std::size_t i = 1; i < sorted.size(); ++i)
        gaps.push_back(sorted[i].rho - sorted[i - 1].rho);
    return gaps;
}

double gap_variance(const std::vector<double>& gaps, SpacingNormalization norm) {
    if (gaps.size() < 1) return 0;
    double mean = 0;
    for (double g : gaps) mean += g;
    mean /= static_cast<double>(gaps.size());
    if (norm == SpacingNormalization::ByMean) {
        if (mean == 0) return 0;  // all gaps zero: perfectly uniform
        double var = 0;
        for (double g : gaps) {
            const double d = g / mean - 1.0;
            var += d * d;
        }
        return var / static_cast<double>(gaps.size());
    }
    double var = 0;
    for (double g : gaps) var += (g - mean) * (g - mean);
    return var / static_cast<double>(gaps.size());
}

}  // namespace

std::optional<double> slope_of(PointD p1, PointD p2) {
    if (p1.x == p2.x && p1.y == p2.y)
        throw std::invalid_argument("slope_of: identical points");
    if (p1.x == p2.x) return std::nullopt;
    return (p1.y - p2.y) / (p1.x - p2.x);
}

double parallel_distance(const PolarLine& l1, const PolarLine& l2, double angle_tol) {
    double dt = l1.theta - l2.theta;
    double rho2 = l2.rho;
    if (dt > kPi / 2) {
        dt -= kPi;
        rho2 = -rho2;
    } else if (dt < -kPi / 2) {
        dt += kPi;
        rho2 = -rho2;
    }
    if (std::fabs(dt) > angle_tol)
        throw NotParallelError("parallel_distance: angle gap " +
                               std::to_string(std::fabs(dt)) + " rad exceeds tolerance");
    return std::fabs(l1.rho - rho2);
}

std::vector<PolarLine> slope_mode_filter(const std::vector<PolarLine>& candidates,
                                         const FilterParams& params) {
    if (params.angle_bin_deg <= 0)
        throw std::invalid_argument("slope_mode_filter: angle_bin must be > 0");
    if (candidates.empty()) return {};

    const double bin_width = params.angle_bin_deg * kPi / 180.0;
    const int n_bins = std::max(1, static_cast<int>(std::lround(kPi / bin_width)));
    std::vector<long> count(static_cast<std::size_t>(n_bins), 0);
    std::vector<long> vote_sum(static_cast<std::size_t>(n_bins), 0);

    auto bin_index = [&](double theta) {
        double t = theta;
        double r = 0;
        normalize_polar(t, r);
        const int b = static_cast<int>(t / (kPi / n_bins));
        return std::clamp(b, 0, n_bins - 1);
    };

    for (const PolarLine& l : candidates) {
        const int b = bin_index(l.theta);
        count[b]++;
        vote_sum[b] += l.votes;
    }
    int mode = 0;
    for (int b = 1; b < n_bins; ++b) {
        if (count[b] > count[mode] ||
            (count[b] == count[mode] && vote_sum[b] > vote_sum[mode]))
            mode = b;
    }

    std::vector<PolarLine> kept;
    for (const PolarLine& l : candidates) {
        const int b = bin_index(l.theta);
        const int dist = std::abs(b - mode);
        if (std::min(dist, n_bins - dist) <= 1) kept.push_back(l);
    }
    return kept;
}

double spacing_variance(const std::vector<PolarLine>& lines,
                        SpacingNormalization normalization) {
    std::vector<PolarLine> sorted = align_to_reference(lines);
    std::sort(sorted.begin(), sorted.end(), [](const PolarLine& a, const PolarLine& b) {
        return a.rho < b.rho;
    });
    return gap_variance(gaps_of(sorted), normalization);
}

std::vector<PolarLine> spacing_variance_filter(const std::vector<PolarLine>& parallel,
                                               const FilterParams& params) {
    if (params.spacing_variance_threshold <= 0)
        throw std::invalid_argument(
            "spacing_variance_filter: threshold must be > 0");
    if (parallel.size() < 2) return parallel;

    std::vector<PolarLine> sorted = align_to_reference(parallel);
    // Keep the original representation alongside the aligned sort key.
    std::vector<std::size_t> order(sorted.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return sorted[a].rho < sorted[b].rho;
    });

    std::vector<PolarLine> aligned;
    std::vector<PolarLine> original;
    for (std::size_t i : order) {
        aligned.push_back(sorted[i]);
        original.push_back(parallel[i]);
    }

    while (aligned.size() > 2) {
        const double current = gap_variance(gaps_of(aligned), params.spacing_normalization);
        if (current < params.spacing_variance_threshold) break;
        std::size_t best = 0;
        double best_var = std::numeric_limits<double>::infinity();
        for (std::size_t drop = 0; drop < aligned.size(); ++drop) {
            std::vector<PolarLine> trial;
            for (std::size_t i = 0; i < aligned.size(); ++i)
                if (i != drop) trial.push_back(aligned[i]);
            const double v = gap_variance(gaps_of(trial), params.spacing_normalization);
            if (v < best_var) {
                best_var = v;
                best = drop;
            }
        }
        aligned.erase(aligned.begin() + static_cast<std::ptrdiff_t>(best));
        original.erase(original.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return original;
}

}  // namespace linedet
