#pragma once

#include "rumor/rational.hpp"
#include "rumor/scaled_real.hpp"

namespace rumor {

// Unnormalized QSD mass on the no-removal boundary y = N+1-x.

// MT: N!/(x! N^{N-x}), 0 <= x <= N-1.
ScaledReal mt_boundary_exact(int n, int x);
Rational mt_boundary_exact_rational(int n, int x);

// Gaussian approximation exp(-N (1 - x/N)^2 / 2); the degenerate endpoint
// x = N is allowed and gives 1.
double mt_boundary_gauss(int n, int x);

struct BoundaryValue {
  ScaledReal exact;
  double gauss = 0.0;
  double relerr = 0.0;  // |gauss/exact - 1|
};

BoundaryValue mt_boundary(int n, int x);

// DK: 2^{N-x} N! (N+x-2)! / (x! (2N-2)!), together with the factored form
// prefactor * NegBin(r = N-1, p = 1/2) mass at x. The two routes are checked
// against each other to 1e-12 relative on every call.
struct DkBoundary {
  ScaledReal direct;
  ScaledReal factored;
};

DkBoundary dk_boundary_exact(int n, int x);
Rational dk_boundary_exact_rational(int n, int x);

// Deterministic limit curve f(x) = ln(x) - 2x + 2 on (0, 1].
double deterministic_curve(double xbar);

// Root of f in (0,1) by bisection to 1e-12; the limiting final proportion of
// ignorants, approximately 0.2032.
double final_proportion();

}  // namespace rumor
