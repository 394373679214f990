#pragma once

#include "lattice.hpp"

#include <map>
#include <optional>
#include <string>

namespace zplat {

// All reports are deterministic: byte-identical across runs for identical
// inputs and flags.

std::string report_cohomology(const Lattice& L, long level);

// full pipeline: input echo, character profile, per-level cohomology,
// decomposition statistics, diagram, bound table
std::string report_pipeline(const Lattice& L);

std::string report_decompose(const Lattice& L, long group_level,
                             const std::optional<CharacterProfile>& reference);

std::string report_ext(unsigned long p, bool modp2);

std::string report_enumerate(unsigned long p, const std::vector<long>& ranks,
                             std::uint64_t size_cap);

std::string report_bounds(const std::string& formula,
                          const std::map<std::string, std::string>& params);

// the cross-module invariant suite
std::string report_verify(std::uint64_t seed, std::uint64_t cap);

}  // namespace zplat
