#pragma once

#include "fgl/genus_table.hpp"
#include "fgl/report.hpp"
#include "fgl/series.hpp"

namespace fgl {

/// ring Q[a1, a2, a3] with weights 2, 4, 6
RingPtr a_ring();

/// Genus parameters: symbolic generators by default, numeric rationals on
/// specialization.  Values always live over a_ring().
struct GenusParams
{
	MultiPoly a1, a2, a3;

	static GenusParams symbolic();
	static GenusParams numeric(const Rational &a1, const Rational &a2,
	                           const Rational &a3);
	/// symbolic with a1 = 0 (Witten-comparison slice)
	static GenusParams symbolic_a1_zero();
	/// symbolic with a3 = 0 (Ochanine slice)
	static GenusParams symbolic_a3_zero();

	const RingPtr &ring() const { return a1.ring(); }
	bool a3_is_zero() const { return a3.is_zero(); }
};

/// g2 = 4(a1^2/3 - a2), g3 = 4(a1 a2/3 - 2 a1^3/27 - a3)
struct EllipticParams
{
	MultiPoly g2, g3;
};
EllipticParams elliptic_from_a(const GenusParams &p);

/// Q(t) = 1 - a1 t^2 + a2 t^4 - a3 t^6 as a series over a_ring()
Series1 q_series(const GenusParams &p, int order);

/// logarithm g_Bc(u) = integral_0^u dt / sqrt(Q(t)); odd, begins u
Series1 log_bc(const GenusParams &p, int order);

/// exponential f_Bc(u), computed as the reversion of log_bc
Series1 exp_bc(const GenusParams &p, int order);

/// f_Bc via the closed form 1/sqrt(wp(u; g2, -g3) + a1/3), expanded
/// structurally around the pole of wp
Series1 exp_bc_closed_form(const GenusParams &p, int order);

struct FormalGroupLaw
{
	Series2 law;         // F(u, v)
	Series1 exponential; // f_Bc
	Series1 logarithm;   // g_Bc
	int order;
};

/// F(u, v) = f(g(u) + g(v)) to total order N
FormalGroupLaw fgl_bc(const GenusParams &p, int order);

/// formal-group axioms at the law's order: unit, commutativity, inverse,
/// and trivariate associativity by truncated polynomial substitution
CheckReport verify_fgl_axioms(const FormalGroupLaw &fgl);

/// pole-cleared restatement of the closed form of F_Bc:
///   ((u^2-v^2)/F)^2 = u^2 Q(v) + v^2 Q(u) - 2uv sqrt(Q(u)) sqrt(Q(v))
///                     + a3 u^2 v^2 (u^2-v^2)^2
CheckReport verify_closed_form(const GenusParams &p, int order);

enum class ThetaMethod
{
	reversion,  // coefficients of the reverted logarithm
	recurrence, // multinomial recurrence from f'' = -a1 f + 2a2 f^3 - 3a3 f^5
};

/// Bc(Theta_n) for n <= N; odd indices are zero
GenusTable theta_values(const GenusParams &p, int order, ThetaMethod method);

/// Bc(CP^n) for n <= N from the logarithm; odd indices are zero
GenusTable cp_values(const GenusParams &p, int order);

/// Two-valued logarithm B(x) = I(x)^2 with I(x) = J(sqrt(x)) for the odd
/// series J(s) = integral_0^s dt / sqrt(1 + a1 t^2 + a2 t^4 + a3 t^6).
struct TwoValuedLogarithm
{
	Series1 B;       // series in x
	Series1 I;       // the odd series J in s, where x = s^2
	MultiPoly phi1;  // over x_ring(): 2(1 + 2 a1 x + 3 a2 x^2 + 4 a3 x^3)
	MultiPoly phi2;  // 16 x (1 + a1 x + a2 x^2 + a3 x^3)
};

/// ring Q[a1, a2, a3, x]
RingPtr x_ring();

TwoValuedLogarithm two_valued_log(const GenusParams &p, int order);

/// (1/2) phi1 B' + (1/8) phi2 B'' = 1 to the stated order, phi2 = 8 int phi1
/// exactly, B(0) = 0
CheckReport verify_tv_ode(const GenusParams &p, int order);

/// Theorem 3.1 (i): the functional inverse of u = I(x) equals
/// 1/(wp(u; g2, g3) - a1/3); also the bridge B(-u^2) = -g_Bc(u)^2
CheckReport verify_uniformization(const GenusParams &p, int order);

/// (f')^2 = Q(f) — the defining exponential ODE (holds for all parameters)
CheckReport verify_exp_ode(const GenusParams &p, int order);

/// the two-parameter elliptic-genus ODE (f')^2 = 1 - a1 f^2 + a2 f^4;
/// requires a3 = 0
CheckReport verify_ochanine_ode(const GenusParams &p, int order);

} // namespace fgl
