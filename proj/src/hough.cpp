#include "linedet/hough.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "linedet/rng.hpp"

namespace linedet {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Edge pixels inside the mask, row-major scan order.
std::vector<std::pair<int, int>> masked_pixels(const BinaryImage& edges,
                                               const RegionModel* mask) {
    if (!mask) return edges.pixel_list();
    std::vector<std::pair<int, int>> out;
    for (int y = 0; y < edges.height(); ++y) {
        for (const StripBand& band : mask->strips) {
            if (y < band.upper_y || y > band.lower_y) continue;
            for (int x = band.x_start; x < band.x_end; ++x)
                if (edges.at(x, y)) out.emplace_back(x, y);
        }
    }
    return out;
}

struct LineOrder {
    bool operator()(const PolarLine& a, const PolarLine& b) const {
        if (a.votes != b.votes) return a.votes > b.votes;
        if (a.theta != b.theta) return a.theta < b.theta;
        return a.rho < b.rho;
    }
};

}  // namespace

void normalize_polar(double& theta, double& rho) {
    while (theta < 0) {
        theta += kPi;
        rho = -rho;
    }
    while (theta >= kPi) {
        theta -= kPi;
        rho = -rho;
    }
}

double theta_gap(double a, double b) {
    double g = std::fabs(a - b);
    g = std::fmod(g, kPi);
    return std::min(g, kPi - g);
}

bool polar_close(const PolarLine& a, const PolarLine& b, double eps_theta,
                 double eps_rho) {
    double dt = a.theta - b.theta;
    double rb = b.rho;
    if (dt > kPi / 2) {
        dt -= kPi;
        rb = -rb;
    } else if (dt < -kPi / 2) {
        dt += kPi;
        rb = -rb;
    }
    return std::fabs(dt) <= eps_theta && std::fabs(a.rho - rb) <= eps_rho;
}

PolarLine polar_from_two_points(PointD p1, PointD p2) {
    const double dx = p2.x - p1.x;
    const double dy = p2.y - p1.y;
    if (dx == 0 && dy == 0)
        throw std::invalid_argument("polar_from_two_points: identical points");
    // Normal is the direction (dx, dy) rotated by +90 degrees.
    double theta = std::atan2(dx, -dy);
    double rho = 0;
    normalize_polar(theta, rho);
    PolarLine line;
    line.theta = theta;
    line.rho = p1.x * std::cos(theta) + p1.y * std::sin(theta);
    return line;
}

Accumulator::Accumulator(int width, int height, int theta_bins_, double rho_res_) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("Accumulator: bad image dimensions");
    if (theta_bins_ < 1 || rho_res_ <= 0)
        throw std::invalid_argument("Accumulator: bad discretization");
    theta_bins = theta_bins_;
    rho_res = rho_res_;
    rho_max = std::ceil(std::hypot(static_cast<double>(width),
                                   static_cast<double>(height)));
    rho_center = static_cast<int>(std::ceil(rho_max / rho_res));
    rho_bins = 2 * rho_center + 1;
    cells.assign(static_cast<std::size_t>(theta_bins) * rho_bins, 0);
}

std::pair<int, int> bin_of(const PolarLine& line, const Accumulator& acc) {
    double theta = line.theta;
    double rho = line.rho;
    normalize_polar(theta, rho);
    int tb = static_cast<int>(std::lround(theta / acc.theta_step()));
    if (tb >= acc.theta_bins) {  // theta within half a bin of pi wraps to bin 0
        tb = 0;
        rho = -rho;
    }
    const long rb = std::lround(rho / acc.rho_res) + acc.rho_center;
    if (rb < 0 || rb >= acc.rho_bins)
        throw std::invalid_argument("bin_of: rho out of accumulator range");
    return {tb, static_cast<int>(rb)};
}

Accumulator accumulate_standard(const BinaryImage& edges, const RegionModel* mask,
                                int theta_bins) {
    Accumulator acc(edges.width(), edges.height(), theta_bins);
    std::vector<double> cos_tab(theta_bins), sin_tab(theta_bins);
    for (int t = 0; t < theta_bins; ++t) {
        cos_tab[t] = std::cos(t * acc.theta_step());
        sin_tab[t] = std::sin(t * acc.theta_step());
    }
    for (const auto& [x, y] : masked_pixels(edges, mask)) {
        for (int t = 0; t < theta_bins; ++t) {
            const double rho = x * cos_tab[t] + y * sin_tab[t];
            const long rb = std::lround(rho / acc.rho_res) + acc.rho_center;
            acc.at(t, static_cast<int>(rb))++;
        }
    }
    return acc;
}

std::vector<PolarLine> extract_peaks(const Accumulator& acc, long vote_threshold) {
    if (vote_threshold < 1)
        throw std::invalid_argument("extract_peaks: vote_threshold must be >= 1");
    std::vector<PolarLine> lines;
    for (int tb = 0; tb < acc.theta_bins; ++tb) {
        for (int rb = 0; rb < acc.rho_bins; ++rb) {
            const std::uint32_t v = acc.at(tb, rb);
            if (v < static_cast<std::uint32_t>(vote_threshold)) continue;
            // 3x3 non-maximum suppression; among equal neighbors the first
            // cell in scan order survives.
            bool is_peak = true;
            for (int dt = -1; dt <= 1 && is_peak; ++dt) {
                for (int dr = -1; dr <= 1 && is_peak; ++dr) {
                    if (dt == 0 && dr == 0) continue;
                    const int nt = tb + dt;
                    const int nr = rb + dr;
                    if (nt < 0 || nt >= acc.theta_bins || nr < 0 || nr >= acc.rho_bins)
                        continue;
                    const std::uint32_t nv = acc.at(nt, nr);
                    const bool earlier = dt < 0 || (dt == 0 && dr < 0);
                    if (earlier ? nv >= v : nv > v) is_peak = false;
                }
            }
            if (is_peak)
                lines.push_back({acc.theta_of(tb), acc.rho_of(rb), static_cast<long>(v)});
        }
    }
    std::sort(lines.begin(), lines.end(), LineOrder{});
    return lines;
}

std::pair<Accumulator, std::vector<PolarLine>> standard_hough(
    const BinaryImage& edges, const RegionModel* mask, int theta_bins,
    long vote_threshold) {
    Accumulator acc = accumulate_standard(edges, mask, theta_bins);
    std::vector<PolarLine> lines = extract_peaks(acc, vote_threshold);
    return {std::move(acc), std::move(lines)};
}

namespace {

// Sparse list with entries bucketed by the theta of first observation, so a
// lookup scans only entries near the candidate angle. The running mean stays
// within epsilon of the anchor, which the lookup window covers with slack.
class SparseGrid {
public:
    SparseGrid(double eps_theta, double eps_rho)
        : eps_theta_(eps_theta), eps_rho_(eps_rho) {
        bucket_width_ = std::max(eps_theta, kPi / 180.0);
        n_buckets_ = std::max(1, static_cast<int>(std::ceil(kPi / bucket_width_)));
        buckets_.resize(static_cast<std::size_t>(n_buckets_));
        span_ = static_cast<int>(std::ceil(eps_theta_ / bucket_width_)) + 2;
    }

    void add(std::vector<SparseEntry>& entries, const PolarLine& cand) {
        const int center = bucket_index(cand.theta);
        const int lo = center - span_;
        const int hi = center + span_;
        if (hi - lo + 1 >= n_buckets_) {
            for (int b = 0; b < n_buckets_; ++b)
                if (try_match(entries, buckets_[b], cand)) return;
        } else {
            for (int k = lo; k <= hi; ++k) {
                const int b = ((k % n_buckets_) + n_buckets_) % n_buckets_;
                if (try_match(entries, buckets_[b], cand)) return;
            }
        }
        entries.push_back({cand.theta, cand.rho, 1});
        buckets_[static_cast<std::size_t>(center)].push_back(entries.size() - 1);
    }

private:
    int bucket_index(double theta) const {
        int b = static_cast<int>(theta / bucket_width_);
        return std::clamp(b, 0, n_buckets_ - 1);
    }

    bool try_match(std::vector<SparseEntry>& entries, const std::vector<std::size_t>& bucket,
                   const PolarLine& cand) const {
        for (std::size_t idx : bucket) {
            SparseEntry& e = entries[idx];
            // Bring the candidate into the representation closest to the entry.
            double ct = cand.theta;
            double cr = cand.rho;
            double dt = ct - e.theta;
            if (dt > kPi / 2) {
                ct -= kPi;
                cr = -cr;
            } else if (dt < -kPi / 2) {
                ct += kPi;
                cr = -cr;
            }
            if (std::fabs(ct - e.theta) > eps_theta_ || std::fabs(cr - e.rho) > eps_rho_)
                continue;
            e.votes++;
            e.theta += (ct - e.theta) / static_cast<double>(e.votes);
            e.rho += (cr - e.rho) / static_cast<double>(e.votes);
            normalize_polar(e.theta, e.rho);
            return true;
        }
        return false;
    }

    double eps_theta_;
    double eps_rho_;
    double bucket_width_;
    int n_buckets_;
    int span_;
    std::vector<std::vector<std::size_t>> buckets_;
};

}  // namespace

SparseAccumulator randomized_accumulate(const BinaryImage& edges,
                                        const RegionModel* mask,
                                        const SamplingParams& params) {
    if (params.max_samples < 1)
        throw std::invalid_argument("randomized_accumulate: max_samples must be >= 1");
    if (params.epsilon_theta < 0 || params.epsilon_rho < 0)
        throw std::invalid_argument("randomized_accumulate: epsilons must be >= 0");

    SparseAccumulator acc;
    const std::vector<std::pair<int, int>> pixels = masked_pixels(edges, mask);
    acc.population = static_cast<long>(pixels.size());
    if (pixels.size() < 2) {
        acc.degenerate = true;
        return acc;
    }

    SplitMix64 rng(params.rng_seed);
    SparseGrid grid(params.epsilon_theta, params.epsilon_rho);
    const std::uint64_t n = pixels.size();
    for (long s = 0; s < params.max_samples; ++s) {
        const std::uint64_t i = rng.bounded(n);
        std::uint64_t j = rng.bounded(n - 1);
        if (j >= i) ++j;
        const auto& [x1, y1] = pixels[i];
        const auto& [x2, y2] = pixels[j];
        const PolarLine cand = polar_from_two_points(
            {static_cast<double>(x1), static_cast<double>(y1)},
            {static_cast<double>(x2), static_cast<double>(y2)});
        grid.add(acc.entries, cand);
    }
    acc.samples_drawn = params.max_samples;
    return acc;
}

std::vector<PolarLine> extract_sparse_peaks(const SparseAccumulator& acc,
                                            long vote_threshold) {
    std::vector<PolarLine> lines;
    for (const SparseEntry& e : acc.entries)
        if (e.votes >= vote_threshold) lines.push_back({e.theta, e.rho, e.votes});
    std::sort(lines.begin(), lines.end(), LineOrder{});
    return lines;
}

RandomizedResult randomized_hough(const BinaryImage& edges, const RegionModel* mask,
                                  const SamplingParams& params) {
    if (params.vote_threshold < 2)
        throw std::invalid_argument("randomized_hough: vote_threshold must be >= 2");
    SparseAccumulator acc = randomized_accumulate(edges, mask, params);
    RandomizedResult result;
    result.degenerate = acc.degenerate;
    result.samples_drawn = acc.samples_drawn;
    result.population = acc.population;
    if (!acc.degenerate)
        result.lines = extract_sparse_peaks(acc, params.vote_threshold);
    return result;
}

}  // namespace linedet
