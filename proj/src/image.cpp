#include "linedet/image.hpp"

#include <stdexcept>

namespace linedet {

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
    : width_(width), height_(height) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("GrayImage: dimensions must be >= 1");
    pixels_.assign(static_cast<std::size_t>(width) * height, fill);
}

BinaryImage::BinaryImage(int width, int height) : width_(width), height_(height) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("BinaryImage: dimensions must be >= 1");
    values_.assign(static_cast<std::size_t>(width) * height, 0);
}

void BinaryImage::set(int x, int y, bool v) {
    std::uint8_t& cell = values_[idx(x, y)];
    count_ += static_cast<long>(v) - static_cast<long>(cell != 0);
    cell = v ? 1 : 0;
}

long BinaryImage::recount() const {
    long n = 0;
    for (std::uint8_t v : values_) n += (v != 0);
    return n;
}

std::vector<std::pair<int, int>> BinaryImage::pixel_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(count_));
    for (int y = 0; y < height_; ++y)
        for (int x = 0; x < width_; ++x)
            if (values_[idx(x, y)]) out.emplace_back(x, y);
    return out;
}

}  // namespace linedet
