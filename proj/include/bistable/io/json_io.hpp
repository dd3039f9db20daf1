#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "bistable/constraint/classify.hpp"
#include "bistable/constraint/coupling_system.hpp"
#include "bistable/flux/flux.hpp"
#include "bistable/torsor/aperture.hpp"

namespace bistable::io {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent JSON input.
class FormatError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

[[nodiscard]] Json bits_to_json(const BitVector& v);
/// Accepts an array of 0/1 (or booleans) of exactly `length` entries.
[[nodiscard]] BitVector bits_from_json(const Json& j, std::size_t length, const std::string& what);

/// { "vertices": N, "edges": [[u,v],...], "faces": [[e0,...],...], "labels": {...} }
[[nodiscard]] Json complex_to_json(const CellComplex& x);
/// Validates the result.
[[nodiscard]] CellComplex complex_from_json(const Json& j);

/// { "complex", "constraint_edges": [e...], "coupling": [bit per edge],
///   "twist"?: [bit per edge], "pinned"?: {"v": bit} }
[[nodiscard]] Json system_to_json(const CouplingSystem& sys);
[[nodiscard]] CouplingSystem system_from_json(const Json& j);

[[nodiscard]] Json walk_to_json(const CellComplex& x, const EdgeWalk& walk);
/// { degree, coordinates, representative: support }
[[nodiscard]] Json class_to_json(int degree, const BitVector& coordinates, const BitVector& representative);
[[nodiscard]] Json classification_to_json(const CouplingSystem& sys, const Classification& c);
[[nodiscard]] Json solve_to_json(const CouplingSystem& sys, const SolveResult& r);
/// { "steps": [{"window": [v...], "display": [bit...]}...], "flip": bit }
[[nodiscard]] Json trace_to_json(const CircuitResult& r);
[[nodiscard]] Json reach_to_json(const ReachResult& r);

[[nodiscard]] Json read_json_file(const std::filesystem::path& path);
/// Two-space indent plus trailing newline.
void write_json_file(const std::filesystem::path& path, const Json& j);
[[nodiscard]] std::string dump(const Json& j);

} // namespace bistable::io
