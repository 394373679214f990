#pragma once

#include "modrep.hpp"
#include "tate.hpp"

#include <string>
#include <vector>

namespace zplat {

// The chain M_1 <-> M_2 <-> ... <-> M_n of finite modules with forward maps
// alpha_i (level i to i+1) and backward maps beta_i, subject to the
// composite axioms: beta o alpha = relative norm on M_i and alpha o beta =
// multiplication by p on M_{i+1}.
struct YakovlevDiagram {
    unsigned long p;
    long n;
    std::vector<FModule> modules;   // M_1..M_n
    std::vector<ModuleMap> alpha;   // n-1 forward maps
    std::vector<ModuleMap> beta;    // n-1 backward maps

    std::string to_string() const;  // deterministic serialization
};

// Verifies every defining condition; throws InternalError with a diagnostic
// dump of the offending matrices.
void check_axioms(const YakovlevDiagram& d);

// Delta(M): entries h1(M, i), forward maps = corestrictions, backward maps =
// restrictions; axioms are asserted before returning.
YakovlevDiagram build_diagram(const Lattice& M);

// Level-wise equivariant isomorphisms commuting with all maps, by exhaustive
// search with invariant prefilters.  Throws CapExceededError beyond the cap.
bool are_equivalent(const YakovlevDiagram& D, const YakovlevDiagram& E, std::uint64_t cap);

// Solves sum_{i <= k} a_i = m_k(M) - m_k(reference) for the multiplicities
// of the permutation summands.  Throws InconsistentError if any a_k < 0.
std::vector<long> permutation_multiplicities(const Lattice& M, const CharacterProfile& reference);

struct DiagramConstraints {
    std::vector<long> rank_caps;       // d_1..d_n
    std::uint64_t size_cap = 729;      // bound on |M_1| * ... * |M_n|
};

struct EnumerationResult {
    long class_count = 0;
    std::vector<YakovlevDiagram> representatives;  // sorted by serialization
    std::uint64_t diagrams_seen = 0;               // before bucketing
};

// Exhaustive enumeration of diagrams for n = 2 up to equivalence.  Any other
// n throws UnsupportedError.  reverse_traversal changes only the internal
// candidate order; the result must be identical either way.
EnumerationResult enumerate_diagrams(unsigned long p, long n, const DiagramConstraints& c,
                                     bool reverse_traversal = false);

}  // namespace zplat
