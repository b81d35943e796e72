#ifndef LINEDET_IMAGE_HPP
#define LINEDET_IMAGE_HPP

#include <cstdint>
#include <vector>

namespace linedet {

/**
 * 8-bit grayscale raster, row-major. x is the column index (increasing
 * rightward), y the row index (increasing downward), origin at the top-left.
 */
class GrayImage {
public:
    GrayImage(int width, int height, std::uint8_t fill = 0);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }

    std::uint8_t at(int x, int y) const { return pixels_[idx(x, y)]; }
    void set(int x, int y, std::uint8_t v) { pixels_[idx(x, y)] = v; }

    const std::vector<std::uint8_t>& pixels() const noexcept { return pixels_; }
    std::vector<std::uint8_t>& pixels() noexcept { return pixels_; }

    bool operator==(const GrayImage& other) const = default;

private:
    std::size_t idx(int x, int y) const {
        return static_cast<std::size_t>(y) * width_ + x;
    }

    int width_;
    int height_;
    std::vector<std::uint8_t> pixels_;
};

/**
 * Edge/ridge map with one logical bit per pixel. The set-pixel count is
 * maintained on every write so it can be queried in O(1); this count is the
 * sampling population N in the detection probability model.
 */
class BinaryImage {
public:
    BinaryImage(int width, int height);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }

    bool at(int x, int y) const { return values_[idx(x, y)] != 0; }
    void set(int x, int y, bool v);

    /// Number of set (edge) pixels. O(1).
    long count() const noexcept { return count_; }

    /// Full recount of set pixels; used by tests to validate the counter.
    long recount() const;

    /// Set pixels as (x, y) pairs in row-major scan order.
    std::vector<std::pair<int, int>> pixel_list() const;

    bool operator==(const BinaryImage& other) const {
        return width_ == other.width_ && height_ == other.height_ &&
               values_ == other.values_;
    }

private:
    std::size_t idx(int x, int y) const {
        return static_cast<std::size_t>(y) * width_ + x;
    }

    int width_;
    int height_;
    long count_ = 0;
    std::vector<std::uint8_t> values_;
};

}  // namespace linedet

#endif  // LINEDET_IMAGE_HPP
