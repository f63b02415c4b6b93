#include "fgl/weierstrass.hpp"

namespace fgl {

RingPtr g_ring()
{
	static RingPtr ring = make_ring({{"g2", 4}, {"g3", 6}});
	return ring;
}

RingPtr uv_ring()
{
	static RingPtr ring =
	    make_ring({{"u", 2}, {"v", 3}, {"g2", 4}, {"g3", 6}});
	return ring;
}

namespace {

// x^6 * R for the residual R = (wp')^2 - 4 wp^3 + g2 wp + g3 with
// wp = 1/x^2 + S.  Expanding the pole part:
//   x^6 R = -4 x^3 S' - 12 x^2 S + x^6 S'^2 - 12 x^4 S^2 - 4 x^6 S^3
//           + g2 x^4 + g2 x^6 S + g3 x^6
Series1 residual_from_tail(const Series1 &S, int out_order)
{
	const RingPtr &R = S.ring();
	auto g2 = MultiPoly::variable(R, "g2");
	auto g3 = MultiPoly::variable(R, "g3");
	Series1 Sp = S.derivative().extended(out_order);
	Series1 Se = S.extended(out_order);
	Series1 S2 = (Se * Se).truncated(out_order);
	Series1 S3 = (S2 * Se).truncated(out_order);
	Series1 r = Sp.shifted(3).scaled(Rational(-4));
	r += Se.shifted(2).scaled(Rational(-12));
	r += (Sp * Sp).truncated(out_order).shifted(6);
	r += S2.shifted(4).scaled(Rational(-12));
	r += S3.shifted(6).scaled(Rational(-4));
	Series1 g2x4(R, out_order);
	if (out_order >= 4)
		g2x4.set_coeff(4, g2);
	r += g2x4;
	r += Se.shifted(6).scaled(g2);
	Series1 g3x6(R, out_order);
	if (out_order >= 6)
		g3x6.set_coeff(6, g3);
	r += g3x6;
	return r;
}

} // namespace

WpSeries wp_series(int order)
{
	if (order < 2)
		throw std::invalid_argument("wp series needs order >= 2");
	const RingPtr R = g_ring();
	Series1 tail(R, order);
	// determine the x^{2k-2} coefficient c_k from the x^{2k-6} residual
	// coefficient, which involves only earlier c's:
	//   c_k * (-(8k+4)) + [x^{2k-6}] (lower-order data) = 0
	for (int k = 2; 2 * k - 2 <= order; ++k)
	{
		Series1 r = residual_from_tail(tail, 2 * k + 2);
		MultiPoly known = r.coeff(2 * k);        // x^6-shifted x^{2k-6}
		known.scale(Rational(1, 8 * k + 4));
		tail.set_coeff(2 * k - 2, std::move(known));
	}
	return WpSeries{order, std::move(tail)};
}

Series1 wp_ode_residual(const WpSeries &wp)
{
	return residual_from_tail(wp.tail, wp.order + 2);
}

Series1 sigma_series(int order)
{
	if (order < 1)
		throw std::invalid_argument("sigma series needs order >= 1");
	WpSeries wp = wp_series(order);
	// sigma = x exp(-W) with W'' = tail and W = O(x^4)
	Series1 W = wp.tail.integral().integral().truncated(order);
	return (-W).exp().shifted(1).truncated(order);
}

Series1 zeta_tail_series(int order)
{
	WpSeries wp = wp_series(order + 1);
	return (-wp.tail.integral()).truncated(order);
}

MultiPoly wp_z_derivative(unsigned k)
{
	const RingPtr R = uv_ring();
	const RelationRing rel = weierstrass_relation(R);
	MultiPoly u = MultiPoly::variable(R, "u");
	MultiPoly v = MultiPoly::variable(R, "v");
	MultiPoly vprime =
	    u.pow(2) * Rational(6) - MultiPoly::variable(R, "g2") * Rational(1, 2);
	MultiPoly d = u;
	for (unsigned i = 0; i < k; ++i)
	{
		auto u_idx = *R->index_of("u");
		auto v_idx = *R->index_of("v");
		d = rel.reduce(d.derivative(u_idx) * v + d.derivative(v_idx) * vprime);
	}
	return d;
}

} // namespace fgl
