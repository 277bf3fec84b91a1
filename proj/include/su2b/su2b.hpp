#pragma once
// Umbrella header: exact arithmetic for principal SU(2)-bundles with
// 3-connected total space over 3-connected 8-dimensional Poincare duality
// complexes, and the homotopy classification of the 11-dimensional total
// spaces.

#include "bundles.hpp"
#include "checked.hpp"
#include "eclass.hpp"
#include "int_matrix.hpp"
#include "manifold.hpp"
#include "residue.hpp"
#include "smith.hpp"
#include "verify.hpp"
#include "wedge.hpp"
