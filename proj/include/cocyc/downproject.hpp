#pragma once

#include <cstddef>
#include <vector>

#include "cocyc/homology_level.hpp"
#include "cocyc/pyramid.hpp"

namespace cocyc {

/// A set of boundary-graph edges at one level representing hole `hole` of
/// object `object`.
struct Cocycle {
    int level = 0;
    int object = -1;
    int hole = -1;
    std::vector<EdgeId> edges;  // sorted
};

/// Counts edge-end inspections, for complexity measurements.
struct ProjectionWork {
    std::size_t visits = 0;
};

/// Every face of the object at the cocycle's level meets the cocycle an even
/// number of times (self-loops count once per side).
bool satisfies_cocycle_condition(const Pyramid& p, const Cocycle& c);

/// One step of the down projection from level k to k-1. Throws
/// ContractViolation when the input is not a cocycle at its level.
Cocycle down_project_level(const Pyramid& p, const Cocycle& a, ProjectionWork* work = nullptr);

/// Projects {alpha, beta} from the top to the base. When `trail` is given it
/// receives the cocycle of every level, top first.
Cocycle down_project_to_base(const Pyramid& p, const TopCocycle& t, const HomologyLevel& h,
                             ProjectionWork* work = nullptr, std::vector<Cocycle>* trail = nullptr);

}  // namespace cocyc
