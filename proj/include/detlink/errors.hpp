#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace detlink {

struct RingMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
    int line;
    int column;
    std::string token;
    ParseError(std::string msg, int line_, int column_, std::string token_)
        : std::runtime_error(msg + " at " + std::to_string(line_) + ":" + std::to_string(column_) +
                             " near \"" + token_ + "\""),
          line(line_),
          column(column_),
          token(std::move(token_)) {}
};

// Statistics reported when a basis computation aborts on its step limit.
struct GbStats {
    uint64_t reduction_steps = 0;
    uint64_t pairs_considered = 0;
    uint64_t pairs_reduced = 0;
    uint64_t basis_size = 0;
    uint64_t max_degree = 0;
};

struct ResourceLimitError : std::runtime_error {
    GbStats stats;
    explicit ResourceLimitError(GbStats s)
        : std::runtime_error("computation exceeded step limit (steps=" +
                             std::to_string(s.reduction_steps) +
                             ", pairs=" + std::to_string(s.pairs_considered) +
                             ", basis=" + std::to_string(s.basis_size) + ")"),
          stats(s) {}
};

}  // namespace detlink
