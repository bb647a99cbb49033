#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mbent/fock.hpp"

namespace mbent {

/// A state read from QSTATE v1 text.
struct LoadedState {
  PureState state;
  /// The file's amplitudes were not unit-norm within kNormTolerance and have
  /// been rescaled.
  bool renormalized = false;
};

/// Parses and validates QSTATE v1 JSON:
///
///   { "version": 1,
///     "kinds": [ { "name": "A", "basis": [ { "n": 0, "sigma": 0 }, ... ] }, ... ],
///     "total_particles": 1,            // or null
///     "amplitudes": [ { "index": [0, 1], "re": 0.7071, "im": 0.0 }, ... ] }
///
/// Indices are zero-based positions into each kind's basis list. Throws
/// ParseError for malformed input, ConstraintViolation when an index breaks
/// total_particles or is out of range, ZeroState when no amplitude survives.
LoadedState encode_state_from_file(std::string_view text);

/// Reads a file and forwards to encode_state_from_file. Throws ParseError when
/// the file cannot be read.
LoadedState load_qstate(const std::filesystem::path& path);

/// Serializes a state as QSTATE v1 text.
std::string write_qstate(const PureState& state);

}  // namespace mbent
