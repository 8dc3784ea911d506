#pragma once

#define SEGBOUNDS_VERSION "0.1.0"

#include "segbounds/rational.hpp"
#include "segbounds/polynomial.hpp"
#include "segbounds/special.hpp"
#include "segbounds/sturm.hpp"
#include "segbounds/chebyshev.hpp"
#include "segbounds/coefficients.hpp"
#include "segbounds/product_analysis.hpp"
#include "segbounds/disk_zeros.hpp"
#include "segbounds/quadrature.hpp"
#include "segbounds/bounds.hpp"
#include "segbounds/extremal.hpp"
#include "segbounds/positivity.hpp"
#include "segbounds/parallel.hpp"
