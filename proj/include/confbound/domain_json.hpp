#pragma once

#include <filesystem>
#include <string>

#include "confbound/geometry.hpp"

namespace confbound {

// Domain-spec file format:
//
//   {
//     "base": {"type": "rectangle", "x0": .., "x1": .., "y0": .., "y1": ..}
//           | {"type": "disc", "center": C, "radius": r},
//     "map":  {"type": "identity" | "exp" | "sin"}
//           | {"type": "affine", "a": C, "b": C}
//           | {"type": "power", "n": int}
//           | {"type": "mobius", "a": C, "b": C, "c": C, "d": C}
//           | {"type": "compose", "maps": [outer, ..., inner]},
//     "inradius": r,                              (optional)
//     "convex_radii": {"ro": .., "ri": .., "rc": ..}, (optional)
//     "area": a,                                  (optional)
//     "image_in_base": bool,                      (optional)
//     "name": "label"                             (optional)
//   }
//
// A complex number C is either a plain number or [re, im]. "compose" applies
// its maps right to left.

struct NamedSpec {
  std::string name;
  DomainSpec spec;
};

/// Throws SpecError on malformed input.
NamedSpec parse_domain_spec(const std::string& json_text);
NamedSpec load_domain_spec(const std::filesystem::path& path);

/// Canonical JSON (sorted keys, two-space indent, trailing newline).
std::string dump_domain_spec(const NamedSpec& spec);

}  // namespace confbound
