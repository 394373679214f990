#pragma once

#include "lattice.hpp"

#include <string>

namespace zplat {

inline constexpr const char* kLatticeFormatVersion = "1";

// Parses a lattice file (UTF-8 JSON).  The action matrix entries are decimal
// integer strings (plain integers are also accepted).  Unknown fields are
// rejected under strict mode and ignored otherwise.  The group-order
// invariant A^(p^n) = I is re-verified, never trusted.
//
// Throws SyntaxError (malformed JSON, with position), VersionError,
// ValidationError (with the offending field).
Lattice parse_lattice(const std::string& text, bool strict);

// Canonical serialization; parse(serialize(x)) == x and serialization of a
// parsed canonical file is byte-identical.
std::string serialize_lattice(const Lattice& L);

}  // namespace zplat
