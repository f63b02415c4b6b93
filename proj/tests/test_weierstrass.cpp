#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fgl/weierstrass.hpp"

using namespace fgl;

namespace {

MultiPoly gvar(const char *n) { return MultiPoly::variable(g_ring(), n); }

// numeric specialization of a {g2, g3} polynomial
Rational at(const MultiPoly &p, const Rational &g2, const Rational &g3)
{
	Rational out(0);
	for (const auto &[key, c] : p.terms())
	{
		Rational term = c;
		term *= g2.pow(p.ring()->exponent(key, 0));
		term *= g3.pow(p.ring()->exponent(key, 1));
		out += term;
	}
	return out;
}

} // namespace

TEST_CASE("degenerate cusp: g2 = g3 = 0 leaves the bare pole")
{
	WpSeries wp = wp_series(12);
	for (int k = 0; k <= wp.tail.order(); ++k)
		CHECK(at(wp.tail.coeff(k), Rational(0), Rational(0)) == Rational(0));
}

TEST_CASE("low coefficients emerge from the equation")
{
	WpSeries wp = wp_series(10);
	CHECK(wp.tail.coeff(2) == gvar("g2") * Rational(1, 20));
	CHECK(wp.tail.coeff(4) == gvar("g3") * Rational(1, 28));
	// x^6 coefficient: g2^2 / 1200 (from the convolution layer)
	CHECK(wp.tail.coeff(6) ==
	      (gvar("g2") * gvar("g2")).scale(Rational(1, 1200)));
}

TEST_CASE("ODE residual vanishes at order 20")
{
	WpSeries wp = wp_series(20);
	CHECK(wp_ode_residual(wp).is_zero());
}

TEST_CASE("tail structure: even, zero constant, graded")
{
	WpSeries wp = wp_series(16);
	CHECK(wp.tail.even_check().holds);
	CHECK(wp.tail.coeff(0).is_zero());
	// coefficient of x^{2k-2} is homogeneous of weight 2k
	for (int k = 2; 2 * k - 2 <= wp.order; ++k)
	{
		auto rep = weight_of(wp.tail.coeff(2 * k - 2));
		CHECK(rep.homogeneous);
		if (!wp.tail.coeff(2 * k - 2).is_zero())
			CHECK(rep.weight == 2 * k);
	}
}

TEST_CASE("sigma series")
{
	Series1 sigma = sigma_series(12);
	CHECK(sigma.odd_check().holds);
	CHECK(sigma.coeff(1) == MultiPoly::constant(g_ring(), Rational(1)));
	CHECK(sigma.coeff(3).is_zero());
	CHECK(sigma.coeff(5) == gvar("g2") * Rational(-1, 240));
	CHECK(sigma.coeff(7) == gvar("g3") * Rational(-1, 840));

	SUBCASE("degenerate case reduces to x")
	{
		for (int k = 2; k <= sigma.order(); ++k)
			CHECK(at(sigma.coeff(k), Rational(0), Rational(0)) ==
			      Rational(0));
	}

	SUBCASE("(log(sigma/x))'' = -(wp - 1/x^2)")
	{
		WpSeries wp = wp_series(12);
		// E = sigma with the x factor removed
		Series1 E(g_ring(), sigma.order() - 1);
		for (int k = 0; k <= E.order(); ++k)
			E.set_coeff(k, sigma.coeff(k + 1));
		Series1 lg = E.log();
		Series1 res = lg.derivative().derivative() +
		              wp.tail.truncated(lg.order() - 2);
		CHECK(res.is_zero());
	}

	SUBCASE("zeta tail is the log-derivative")
	{
		Series1 zt = zeta_tail_series(10);
		CHECK(zt.odd_check().holds);
		WpSeries wp = wp_series(11);
		CHECK((zt.derivative() + wp.tail.truncated(9)).is_zero());
	}
}

TEST_CASE("z-derivatives of wp in the relation ring")
{
	auto R = uv_ring();
	MultiPoly u = MultiPoly::variable(R, "u");
	MultiPoly v = MultiPoly::variable(R, "v");
	MultiPoly g2 = MultiPoly::variable(R, "g2");
	MultiPoly g3 = MultiPoly::variable(R, "g3");

	CHECK(wp_z_derivative(0) == u);
	CHECK(wp_z_derivative(1) == v);

	SUBCASE("wp'' against the halved derivative of the cubic")
	{
		// differentiate v^2 = 4u^3 - g2 u - g3 once: 2 v v' = (12u^2 - g2) v
		MultiPoly cubic = u.pow(3) * Rational(4) - g2 * u - g3;
		MultiPoly dcubic_du = cubic.derivative(*R->index_of("u"));
		MultiPoly expected = dcubic_du * Rational(1, 2);
		CHECK(wp_z_derivative(2) == expected);
	}

	SUBCASE("wp'''' by two more derivations")
	{
		CHECK(wp_z_derivative(4) == u.pow(3) * Rational(120) -
		                                g2 * u * Rational(18) -
		                                g3 * Rational(12));
	}

	SUBCASE("normal form and parity structure")
	{
		const RelationRing rel = weierstrass_relation(R);
		for (unsigned k = 0; k <= 8; ++k)
		{
			MultiPoly d = wp_z_derivative(k);
			CHECK(d.degree_in(*R->index_of("v")) <= 1);
			CHECK(rel.reduce(d) == d);
			// weight of wp^{(k)} is k + 2
			auto rep = weight_of(d);
			CHECK(rep.homogeneous);
			CHECK(rep.weight == long(k) + 2);
			// odd derivatives are v-linear, even ones v-free
			for (const auto &[key, c] : d.terms())
				CHECK(R->exponent(key, *R->index_of("v")) ==
				      (k % 2 == 1 ? 1u : 0u));
		}
	}
}
