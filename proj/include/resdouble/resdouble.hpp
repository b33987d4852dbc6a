#pragma once

#include "resdouble/adjoint.hpp"
#include "resdouble/canres.hpp"
#include "resdouble/classify.hpp"
#include "resdouble/cycles.hpp"
#include "resdouble/error.hpp"
#include "resdouble/io.hpp"
#include "resdouble/lattice.hpp"
#include "resdouble/matrix.hpp"
#include "resdouble/minres.hpp"
#include "resdouble/planecurve.hpp"
#include "resdouble/poly.hpp"
#include "resdouble/weighted.hpp"
