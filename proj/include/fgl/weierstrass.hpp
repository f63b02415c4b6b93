#pragma once

#include "fgl/series.hpp"

namespace fgl {

/// ring Q[g2, g3] with weights 4 and 6
RingPtr g_ring();

/// ring Q[u, v, g2, g3] with weights 2, 3, 4, 6 (u = wp(z), v = wp'(z))
RingPtr uv_ring();

/// wp(x) = 1/x^2 + tail(x); the tail is an even series with tail(0) = 0
/// whose x^{2k-2} coefficient is homogeneous of weight 2k over {g2, g3}.
struct WpSeries
{
	int order;     // truncation order of the tail
	Series1 tail;  // over g_ring()
};

/// Solves the defining equation (wp')^2 = 4 wp^3 - g2 wp - g3 order by
/// order; nothing about the classical coefficient recursion is assumed.
WpSeries wp_series(int order);

/// x^6 * ((wp')^2 - 4 wp^3 + g2 wp + g3) as an honest power series; zero for
/// a correct expansion.
Series1 wp_ode_residual(const WpSeries &wp);

/// sigma(x): odd, begins x, with (log(sigma/x))'' = -tail to truncation.
/// Reconstructed from wp by integrating the tail twice, both constants
/// pinned by sigma = x + O(x^3).
Series1 sigma_series(int order);

/// zeta(x) - 1/x = (log(sigma/x))', an odd series
Series1 zeta_tail_series(int order);

/// k-th z-derivative of wp(z) as a polynomial in u, v, g2, g3, reduced to
/// v-exponent <= 1 via the Weierstrass relation.  Derivation rules:
/// u' = v, v' = 6u^2 - g2/2.
MultiPoly wp_z_derivative(unsigned k);

} // namespace fgl
