#pragma once

// Umbrella header: exact classification and factorization of polynomial
// correspondences that act on d-tuples, plus the numeric spot-check oracle.

#include "dtuples/assignment.hpp"
#include "dtuples/bipoly.hpp"
#include "dtuples/classify.hpp"
#include "dtuples/correspondence.hpp"
#include "dtuples/errors.hpp"
#include "dtuples/exact_matrix.hpp"
#include "dtuples/factorize.hpp"
#include "dtuples/fixtures.hpp"
#include "dtuples/fractional_map.hpp"
#include "dtuples/gaussian.hpp"
#include "dtuples/oracle.hpp"
#include "dtuples/parse.hpp"
#include "dtuples/roots.hpp"
#include "dtuples/serialize.hpp"
#include "dtuples/sphere.hpp"
#include "dtuples/symmetry.hpp"
#include "dtuples/unipoly.hpp"
