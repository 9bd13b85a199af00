#ifndef PALETTE_COMMON_HPP
#define PALETTE_COMMON_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace palette {

// Malformed input text (graph6 / edge list). Carries the position that
// triggered the failure: byte offset for graph6, line number for edge lists.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg), position(position) {}
    std::size_t position;
};

// A caller violated an operation's precondition (bad vertex id, c_max < Delta, ...).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// An inter-module contract was violated (improper coloring fed to palettes(),
// mismatched universes, t > delta fed to the extractor).
struct ContractError : std::logic_error {
    explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace palette

#endif
