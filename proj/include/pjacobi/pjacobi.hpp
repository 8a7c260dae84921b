#pragma once

// Orthogonal polynomials with period-N recurrence coefficients
// alpha_j = 2a cos(2pi j/N): polynomial families, band structure,
// orthogonality measure, Stieltjes transforms and the spectral measures of
// the associated doubly infinite Jacobi matrix.

#include "bands.hpp"
#include "checks.hpp"
#include "cli.hpp"
#include "cyclotomic.hpp"
#include "measure.hpp"
#include "poly.hpp"
#include "quadrature.hpp"
#include "rational.hpp"
#include "recurrence.hpp"
#include "series.hpp"
#include "spectral.hpp"
#include "table.hpp"
#include "tridiag.hpp"
