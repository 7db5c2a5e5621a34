#pragma once

#include "concave/area.hpp"
#include "concave/concave_family.hpp"
#include "concave/errors.hpp"
#include "concave/hypergeom.hpp"
#include "concave/quadrature.hpp"
#include "concave/report.hpp"
#include "concave/rng.hpp"
#include "concave/series.hpp"
#include "concave/verify.hpp"
