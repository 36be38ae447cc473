#pragma once

// Umbrella header: exact braided exterior algebra structures on Lambda_p(V),
// their braidings and two-parameter R-matrices, identity verification, and
// braid-closure knot invariants.

#include "lambdap/braiding.hpp"
#include "lambdap/exterior.hpp"
#include "lambdap/knots.hpp"
#include "lambdap/laurent.hpp"
#include "lambdap/linear_operator.hpp"
#include "lambdap/linsolve.hpp"
#include "lambdap/qseries.hpp"
#include "lambdap/rational.hpp"
#include "lambdap/rmatrix.hpp"
#include "lambdap/subsets.hpp"
#include "lambdap/tensor.hpp"
#include "lambdap/verify.hpp"
