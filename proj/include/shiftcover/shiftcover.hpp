#pragma once

// Umbrella header: exact transfer matrices for cyclic covers over a finite
// group, hom counting for finitely presented groups, and strong shift
// equivalence machinery for the resulting nonnegative integer matrices.

#include "shiftcover/cobordism.hpp"
#include "shiftcover/errors.hpp"
#include "shiftcover/finite_group.hpp"
#include "shiftcover/knot_data.hpp"
#include "shiftcover/matrix.hpp"
#include "shiftcover/multigraph.hpp"
#include "shiftcover/numeric.hpp"
#include "shiftcover/polynomial.hpp"
#include "shiftcover/presentation.hpp"
#include "shiftcover/smith.hpp"
#include "shiftcover/symdyn.hpp"
#include "shiftcover/transfer.hpp"
#include "shiftcover/words.hpp"
