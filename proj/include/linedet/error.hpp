#ifndef LINEDET_ERROR_HPP
#define LINEDET_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linedet {

/// Malformed input data (bad file contents, dimension mismatches, ...).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// PGM parsing failure; carries the byte offset where parsing stopped.
class PgmParseError : public DataError {
public:
    PgmParseError(const std::string& msg, std::size_t offset)
        : DataError(msg + " (at byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Spacing estimation found fewer than 2 segments in every strip.
class EstimationError : public DataError {
public:
    explicit EstimationError(const std::string& msg) : DataError(msg) {}
};

/// Two lines were not parallel within the requested angular tolerance.
class NotParallelError : public std::invalid_argument {
public:
    explicit NotParallelError(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace linedet

#endif  // LINEDET_ERROR_HPP
