#pragma once

#include "ifn/types.hpp"

namespace ifn {

/// All complete subgraphs of `g` with 1..(max_dimension + 1) vertices,
/// grouped by dimension (vertices at dimension 0, edges at 1, triangles
/// at 2, ...).  max_dimension must be >= 0.
SimplexSet enumerate_simplices(const FilteredGraph& g, int max_dimension);

}  // namespace ifn
