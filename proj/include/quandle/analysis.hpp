#pragma once

#include "quandle/cayley.hpp"

#include <string>
#include <vector>

namespace quandle {

/// Connected components of the Cayley graph under all generator edges
/// (equivalently, orbits of the generator actions).
struct ComponentReport {
    int count = 0;
    std::vector<long long> sizes; // ascending
    std::vector<int> membership;  // element -> component id, ids by smallest member
    std::vector<std::vector<int>> members; // per component, ascending element ids
};

ComponentReport components(const CayleyTable& t);

/// Result of an isomorphism search. When isomorphic, generator_images
/// gives the image in the target of each source generator seed and
/// full_map the element bijection intertwining the operations.
struct IsoResult {
    bool isomorphic = false;
    std::string reason; // set when not isomorphic
    std::vector<int> generator_images;
    std::vector<int> full_map;
};

/// Searches for a quandle isomorphism from s to t. Generator images
/// range over all elements of t (an isomorphism need not preserve the
/// chosen generating set); an assignment extends to at most one
/// equivariant map, built by breadth-first propagation. The first
/// witness in lexicographic image order is returned.
IsoResult is_isomorphic(const CayleyTable& s, const CayleyTable& t);

/// Deterministic shape summary used by reports and the sweep output.
struct StructureSummary {
    int size = 0;
    std::vector<long long> component_sizes; // ascending
    std::vector<int> generator_fixed_points; // per generator, number of elements fixed
};

StructureSummary structure_summary(const CayleyTable& t);

} // namespace quandle
