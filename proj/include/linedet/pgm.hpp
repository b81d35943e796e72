#ifndef LINEDET_PGM_HPP
#define LINEDET_PGM_HPP

#include <string>
#include <string_view>

#include "linedet/image.hpp"

namespace linedet {

/**
 * Parse a PGM byte stream, magic "P5" (binary) or "P2" (ASCII), maxval <= 255.
 * Header comments (# ... end of line) are accepted. Sample values are kept
 * as stored; they are not rescaled when maxval < 255.
 *
 * Throws PgmParseError naming the byte offset on malformed magic, zero
 * dimensions, maxval > 255, out-of-range samples, or a truncated payload.
 */
GrayImage read_pgm(std::string_view bytes);

/// Canonical binary encoding: "P5\n<w> <h>\n255\n" followed by the row-major
/// payload. read_pgm(write_pgm(img)) == img exactly.
std::string write_pgm(const GrayImage& img);

/// 0/255 rendering of a binary map, encoded with write_pgm.
std::string write_pgm(const BinaryImage& map);

GrayImage read_pgm_file(const std::string& path);
void write_file(const std::string& path, std::string_view bytes);
std::string read_file(const std::string& path);

}  // namespace linedet

#endif  // LINEDET_PGM_HPP
