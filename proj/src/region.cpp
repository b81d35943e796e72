#include "linedet/region.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "linedet/error.hpp"

namespace linedet {

namespace {

// Merge radius used for the spacing-estimation pass before d1 is known;
// generous for lines 1-2 px wide, far below any plausible line spacing.
constexpr double kBootstrapD1 = 6.0;

}  // namespace

bool RegionModel::contains(int x, int y) const {
    for (const StripBand& band : strips)
        if (x >= band.x_start && x < band.x_end)
            return y >= band.upper_y && y <= band.lower_y;
    return false;
}

double RegionModel::recompute_ic() const {
    long long inside = 0;
    for (const StripBand& band : strips)
        inside += static_cast<long long>(band.lower_y - band.upper_y + 1) *
                  (band.x_end - band.x_start);
    return static_cast<double>(inside) /
           (static_cast<double>(width) * static_cast<double>(height));
}

bool RegionModel::full_image() const {
    for (const StripBand& band : strips)
        if (band.upper_y != 0 || band.lower_y != height - 1) return false;
    return true;
}

RegionModel RegionModel::sentinel(int width, int height, int n_strips, double d1,
                                  double d2) {
    RegionModel region;
    region.width = width;
    region.height = height;
    region.d1 = d1;
    region.d2 = d2;
    for (const Strip& s : split_strips(width, n_strips))
        region.strips.push_back({s.x_start, s.x_end, 0, height - 1});
    region.i_c = 1.0;
    return region;
}

std::vector<Strip> split_strips(int width, int n) {
    if (n < 1 || width < n)
        throw std::invalid_argument("split_strips: need width >= n >= 1");
    const int base = width / n;
    const int rem = width % n;
    std::vector<Strip> strips;
    strips.reserve(static_cast<std::size_t>(n));
    int x = 0;
    for (int i = 0; i < n; ++i) {
        const int w = base + (i < rem ? 1 : 0);
        strips.push_back({i, x, x + w});
        x += w;
    }
    return strips;
}

std::vector<StripSegment> find_segments(const BinaryImage& edges, const Strip& strip,
                                        int min_run, double d1, double d2) {
    if (min_run < 1)
        throw std::invalid_argument("find_segments: min_run must be >= 1");
    if (!(0 < d1 && d1 <= d2))
        throw std::invalid_argument("find_segments: need 0 < d1 <= d2");

    std::vector<StripSegment> segments;
    const double merge_dist = d1 / 2.0;
    // Current merge group: best row seen and the last qualifying row.
    bool open = false;
    StripSegment best{};
    int last_y = 0;

    auto flush = [&]() {
        if (open) segments.push_back(best);
        open = false;
    };

    for (int y = 0; y < edges.height(); ++y) {
        int run_start = 0, run_len = 0, cur_start = 0, cur_len = 0;
        for (int x = strip.x_start; x < strip.x_end; ++x) {
            if (edges.at(x, y)) {
                if (cur_len == 0) cur_start = x;
                ++cur_len;
                if (cur_len > run_len) {
                    run_len = cur_len;
                    run_start = cur_start;
                }
            } else {
                cur_len = 0;
            }
        }
        if (run_len < min_run) continue;
        if (open && y - last_y < merge_dist) {
            if (run_len > best.run_length) best = {strip.index, y, run_start, run_len};
        } else {
            flush();
            best = {strip.index, y, run_start, run_len};
            open = true;
        }
        last_y = y;
    }
    flush();
    return segments;
}

std::pair<int, int> strip_boundaries(const std::vector<StripSegment>& segments,
                                     double d2, int image_height) {
    if (segments.empty()) return {0, image_height - 1};
    const int first_y = segments.front().y;
    const int last_y = segments.back().y;
    const int upper = std::max(0, static_cast<int>(std::floor(first_y - d2)));
    const int lower =
        std::min(image_height - 1, static_cast<int>(std::ceil(last_y + d2)));
    return {upper, lower};
}

std::pair<double, double> estimate_spacings(const std::vector<StripSegment>& segments) {
    std::map<int, std::vector<int>> by_strip;
    for (const StripSegment& s : segments) by_strip[s.strip].push_back(s.y);
    for (auto& [strip, ys] : by_strip) {
        if (ys.size() < 2) continue;
        std::sort(ys.begin(), ys.end());
        double d1 = ys[1] - ys[0];
        double d2 = d1;
        for (std::size_t i = 2; i < ys.size(); ++i) {
            const double gap = ys[i] - ys[i - 1];
            d1 = std::min(d1, gap);
            d2 = std::max(d2, gap);
        }
        return {d1, d2};
    }
    throw EstimationError(
        "estimate_spacings: no strip holds 2 or more segments; supply d1/d2");
}

RegionModel build_region(const BinaryImage& edges, const RegionConfig& config) {
    const std::vector<Strip> strips = split_strips(edges.width(), config.n_strips);

    double d1, d2;
    if (config.d1 && config.d2) {
        d1 = *config.d1;
        d2 = *config.d2;
    } else {
        std::vector<StripSegment> all;
        for (const Strip& s : strips) {
            auto segs = find_segments(edges, s, config.min_run, kBootstrapD1,
                                      kBootstrapD1);
            all.insert(all.end(), segs.begin(), segs.end());
        }
        std::tie(d1, d2) = estimate_spacings(all);
        if (config.d1) d1 = *config.d1;
        if (config.d2) d2 = *config.d2;
    }
    if (!(0 < d1 && d1 <= d2))
        throw std::invalid_argument("build_region: need 0 < d1 <= d2");

    RegionModel region;
    region.width = edges.width();
    region.height = edges.height();
    region.d1 = d1;
    region.d2 = d2;
    for (const Strip& s : strips) {
        const auto segs = find_segments(edges, s, config.min_run, d1, d2);
        const auto [upper, lower] = strip_boundaries(segs, d2, edges.height());
        region.strips.push_back({s.x_start, s.x_end, upper, lower});
    }
    region.i_c = region.recompute_ic();
    return region;
}

BinaryImage mask_edges(const BinaryImage& edges, const RegionModel& region) {
    if (edges.width() != region.width || edges.height() != region.height)
        throw DataError("mask_edges: image and region dimensions differ");
    BinaryImage out(edges.width(), edges.height());
    for (const StripBand& band : region.strips)
        for (int y = band.upper_y; y <= band.lower_y; ++y)
            for (int x = band.x_start; x < band.x_end; ++x)
                if (edges.at(x, y)) out.set(x, y, true);
    return out;
}

std::string region_to_json(const RegionModel& region) {
    nlohmann::ordered_json j;
    j["strips"] = nlohmann::ordered_json::array();
    for (const StripBand& band : region.strips)
        j["strips"].push_back({{"x_start", band.x_start},
                               {"x_end", band.x_end},
                               {"upper_y", band.upper_y},
                               {"lower_y", band.lower_y}});
    j["d1"] = region.d1;
    j["d2"] = region.d2;
    j["i_c"] = region.i_c;
    j["width"] = region.width;
    j["height"] = region.height;
    return j.dump(2);
}

RegionModel region_from_json(const std::string& text) {
    RegionModel region;
    try {
        const auto j = nlohmann::json::parse(text);
        for (const auto& s : j.at("strips"))
            region.strips.push_back({s.at("x_start").get<int>(),
                                     s.at("x_end").get<int>(),
                                     s.at("upper_y").get<int>(),
                                     s.at("lower_y").get<int>()});
        region.d1 = j.at("d1").get<double>();
        region.d2 = j.at("d2").get<double>();
        region.i_c = j.at("i_c").get<double>();
        region.width = j.at("width").get<int>();
        region.height = j.at("height").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("region JSON: ") + e.what());
    }
    return region;
}

}  // namespace linedet
