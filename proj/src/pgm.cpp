#include "linedet/pgm.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "linedet/error.hpp"

namespace linedet {

namespace {

// Header token scanner. Skips whitespace and '#' comments, tracking the
// current byte offset for error reporting.
class HeaderScanner {
public:
    explicit HeaderScanner(std::string_view bytes) : bytes_(bytes) {}

    std::size_t pos() const noexcept { return pos_; }

    void skip_separators() {
        while (pos_ < bytes_.size()) {
            const char c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    // Non-negative decimal integer; `what` names the field in errors.
    long read_int(const char* what) {
        skip_separators();
        const std::size_t start = pos_;
        long value = 0;
        bool any = false;
        while (pos_ < bytes_.size() &&
               std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > 1'000'000'000L)
                throw PgmParseError(std::string(what) + " out of range", start);
            ++pos_;
            any = true;
        }
        if (!any)
            throw PgmParseError(std::string("expected ") + what, pos_);
        return value;
    }

    // P5 payload starts after exactly one whitespace byte following maxval.
    void consume_single_separator() {
        if (pos_ >= bytes_.size() ||
            !std::isspace(static_cast<unsigned char>(bytes_[pos_])))
            throw PgmParseError("expected whitespace before pixel payload", pos_);
        ++pos_;
    }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

GrayImage read_pgm(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '2'))
        throw PgmParseError("malformed magic, expected P5 or P2", 0);
    const bool binary = bytes[1] == '5';

    HeaderScanner s(bytes.substr(2));
    const long width = s.read_int("width");
    const long height = s.read_int("height");
    if (width == 0 || height == 0)
        throw PgmParseError("zero image dimension", 2 + s.pos());
    const long maxval = s.read_int("maxval");
    if (maxval == 0 || maxval > 255)
        throw PgmParseError("maxval must be in [1, 255]", 2 + s.pos());

    GrayImage img(static_cast<int>(width), static_cast<int>(height));
    const std::size_t n = static_cast<std::size_t>(width) * height;

    if (binary) {
        s.consume_single_separator();
        const std::size_t payload = 2 + s.pos();
        if (bytes.size() - payload < n)
            throw PgmParseError("truncated payload", bytes.size());
        for (std::size_t i = 0; i < n; ++i) {
            const auto v = static_cast<std::uint8_t>(bytes[payload + i]);
            if (v > maxval)
                throw PgmParseError("sample exceeds maxval", payload + i);
            img.pixels()[i] = v;
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            long v;
            try {
                v = s.read_int("sample");
            } catch (const PgmParseError&) {
                if (2 + s.pos() >= bytes.size())
                    throw PgmParseError("truncated payload", bytes.size());
                throw;
            }
            if (v > maxval)
                throw PgmParseError("sample exceeds maxval", 2 + s.pos());
            img.pixels()[i] = static_cast<std::uint8_t>(v);
        }
    }
    return img;
}

std::string write_pgm(const GrayImage& img) {
    std::string out = "P5\n" + std::to_string(img.width()) + " " +
                      std::to_string(img.height()) + "\n255\n";
    out.append(reinterpret_cast<const char*>(img.pixels().data()),
               img.pixels().size());
    return out;
}

std::string write_pgm(const BinaryImage& map) {
    GrayImage img(map.width(), map.height(), 0);
    for (int y = 0; y < map.height(); ++y)
        for (int x = 0; x < map.width(); ++x)
            if (map.at(x, y)) img.set(x, y, 255);
    return write_pgm(img);
}

GrayImage read_pgm_file(const std::string& path) {
    return read_pgm(read_file(path));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot open file for writing: " + path);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw DataError("write failed: " + path);
}

}  // namespace linedet
