#pragma once

// JSON state files:
//
//   {"kind": "pure",  "layout": [2, 2], "amplitudes": [[re, im], ...]}
//   {"kind": "mixed", "layout": [2, 2], "matrix": [[[re, im], ...], ...]}
//
// Numbers are written with 17 significant digits so that a dumped state
// replays bit-exactly.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "polygamy/linalg.hpp"

namespace polygamy {

/// Malformed or invalid state file; the message names the line/column or
/// the offending field.
class StateFileError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using LoadedState = std::variant<StateVector, DensityOperator>;

LoadedState parse_state(std::string_view text);
LoadedState read_state_file(const std::filesystem::path& path);

std::string serialize_state(const LoadedState& state);
void write_state_file(const std::filesystem::path& path, const LoadedState& state);

const SubsystemLayout& layout_of(const LoadedState& state);
DensityOperator as_density(const LoadedState& state);

}  // namespace polygamy
