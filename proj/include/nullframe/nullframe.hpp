#pragma once

// Frenet frames, curvature functions, and Cartan framings of slant null
// curves on the two homogeneous almost contact B-metric 3-manifold models.

#include "nullframe/b_solver.hpp"
#include "nullframe/connection.hpp"
#include "nullframe/curve.hpp"
#include "nullframe/errors.hpp"
#include "nullframe/frenet.hpp"
#include "nullframe/lie_example.hpp"
#include "nullframe/linalg.hpp"
#include "nullframe/minkowski.hpp"
#include "nullframe/models.hpp"
#include "nullframe/rational.hpp"
#include "nullframe/structure.hpp"
