#include "fgl/buchstaber.hpp"

#include "fgl/combinatorics.hpp"
#include "fgl/weierstrass.hpp"

#include <sstream>

namespace fgl {

RingPtr a_ring()
{
	static RingPtr ring = make_ring({{"a1", 2}, {"a2", 4}, {"a3", 6}});
	return ring;
}

RingPtr x_ring()
{
	static RingPtr ring =
	    make_ring({{"a1", 2}, {"a2", 4}, {"a3", 6}, {"x", 2}});
	return ring;
}

GenusParams GenusParams::symbolic()
{
	auto R = a_ring();
	return {MultiPoly::variable(R, "a1"), MultiPoly::variable(R, "a2"),
	        MultiPoly::variable(R, "a3")};
}

GenusParams GenusParams::numeric(const Rational &a1, const Rational &a2,
                                 const Rational &a3)
{
	auto R = a_ring();
	return {MultiPoly::constant(R, a1), MultiPoly::constant(R, a2),
	        MultiPoly::constant(R, a3)};
}

GenusParams GenusParams::symbolic_a1_zero()
{
	auto R = a_ring();
	return {MultiPoly(R), MultiPoly::variable(R, "a2"),
	        MultiPoly::variable(R, "a3")};
}

GenusParams GenusParams::symbolic_a3_zero()
{
	auto R = a_ring();
	return {MultiPoly::variable(R, "a1"), MultiPoly::variable(R, "a2"),
	        MultiPoly(R)};
}

EllipticParams elliptic_from_a(const GenusParams &p)
{
	const MultiPoly &a1 = p.a1, &a2 = p.a2, &a3 = p.a3;
	MultiPoly g2 = (a1 * a1).scale(Rational(4, 3)) - a2 * Rational(4);
	MultiPoly g3 = (a1 * a2).scale(Rational(4, 3)) -
	               (a1 * a1 * a1).scale(Rational(8, 27)) - a3 * Rational(4);
	return {std::move(g2), std::move(g3)};
}

Series1 q_series(const GenusParams &p, int order)
{
	Series1 q = Series1::constant(p.ring(), Rational(1), order);
	if (order >= 2)
		q.set_coeff(2, -p.a1);
	if (order >= 4)
		q.set_coeff(4, p.a2);
	if (order >= 6)
		q.set_coeff(6, -p.a3);
	return q;
}

Series1 log_bc(const GenusParams &p, int order)
{
	if (order < 1)
		throw std::invalid_argument("log_bc needs order >= 1");
	Series1 integrand = q_series(p, order - 1).sqrt().inverse();
	return integrand.integral();
}

Series1 exp_bc(const GenusParams &p, int order)
{
	return log_bc(p, order).revert();
}

Series1 exp_bc_closed_form(const GenusParams &p, int order)
{
	// wp(u; g2, -g3) + a1/3 = u^{-2} (1 + (a1/3) u^2 + u^2 tail(u)), so
	// f = u (1 + (a1/3) u^2 + u^2 tail(u))^{-1/2}
	EllipticParams es = elliptic_from_a(p);
	WpSeries wp = wp_series(std::max(order, 2));
	const RingPtr &A = p.ring();
	std::map<std::size_t, MultiPoly> bind{
	    {*g_ring()->index_of("g2"), es.g2},
	    {*g_ring()->index_of("g3"), -es.g3}};
	Series1 tail_a(A, wp.tail.order());
	for (int k = 0; k <= wp.tail.order(); ++k)
		if (!wp.tail.coeff(k).is_zero())
			tail_a.set_coeff(k, substitute(wp.tail.coeff(k), A, bind));
	Series1 inner = Series1::constant(A, Rational(1), order);
	if (order >= 2)
		inner.set_coeff(2, p.a1 * Rational(1, 3));
	inner += tail_a.shifted(2).truncated(order);
	return inner.sqrt().inverse().shifted(1);
}

FormalGroupLaw fgl_bc(const GenusParams &p, int order)
{
	if (order < 2)
		throw std::invalid_argument("fgl_bc needs order >= 2");
	Series1 g = log_bc(p, order);
	Series1 f = exp_bc(p, order);
	Series2 sum = Series2::from_series1(g, 0) + Series2::from_series1(g, 1);
	Series2 law = compose_outer(f, sum);
	return {std::move(law), std::move(f), std::move(g), order};
}

namespace {

std::string first_nonzero(const Series2 &s)
{
	for (int d = 0; d <= s.order(); ++d)
		for (int j = 0; j <= d; ++j)
			if (!s.coeff(d - j, j).is_zero())
			{
				std::ostringstream os;
				os << "first nonzero coefficient at u^" << (d - j) << " v^"
				   << j << ": " << s.coeff(d - j, j).to_string();
				return os.str();
			}
	return "residual identically zero";
}

std::string first_nonzero(const Series1 &s)
{
	for (int k = 0; k <= s.order(); ++k)
		if (!s.coeff(k).is_zero())
		{
			std::ostringstream os;
			os << "first nonzero coefficient at x^" << k << ": "
			   << s.coeff(k).to_string();
			return os.str();
		}
	return "residual identically zero";
}

} // namespace

CheckReport verify_fgl_axioms(const FormalGroupLaw &fgl)
{
	const int n = fgl.order;
	const RingPtr &A = fgl.law.ring();
	Series1 id = Series1::identity(A, n);
	Series1 zero(A, n);

	if (substitute_series1(fgl.law, id, zero) != id)
		return CheckReport::fail("fgl-axioms", "unit axiom F(u,0) = u fails");
	if (!fgl.law.is_symmetric())
		return CheckReport::fail("fgl-axioms", "commutativity fails");
	if (!substitute_series1(fgl.law, id, -id).is_zero())
		return CheckReport::fail("fgl-axioms", "inverse axiom F(u,-u) = 0 fails");

	// trivariate associativity via truncated polynomial substitution
	RingPtr R6 = make_ring(
	    {{"a1", 2}, {"a2", 4}, {"a3", 6}, {"u", 1}, {"v", 1}, {"w", 1}});
	const std::vector<std::size_t> tracked{*R6->index_of("u"),
	                                       *R6->index_of("v"),
	                                       *R6->index_of("w")};
	auto lift = [&](const MultiPoly &c)
	{ return substitute(c, R6, {}); };
	auto U = MultiPoly::variable(R6, "u");
	auto V = MultiPoly::variable(R6, "v");
	auto W = MultiPoly::variable(R6, "w");

	// law as a truncated polynomial in two chosen variables
	auto law_poly = [&](const MultiPoly &X, const MultiPoly &Y)
	{
		// Horner over powers of X, inner sums over Y
		std::vector<MultiPoly> ypow{MultiPoly::constant(R6, Rational(1))};
		for (int j = 1; j <= n; ++j)
			ypow.push_back(
			    mul_truncated(ypow.back(), Y, tracked, unsigned(n)));
		MultiPoly acc(R6);
		for (int i = n; i >= 0; --i)
		{
			acc = mul_truncated(acc, X, tracked, unsigned(n));
			for (int j = 0; i + j <= n; ++j)
			{
				const MultiPoly &c = fgl.law.coeff(i, j);
				if (c.is_zero())
					continue;
				acc += lift(c) * ypow[std::size_t(j)];
			}
		}
		return acc;
	};

	MultiPoly inner_uv = law_poly(U, V);
	MultiPoly inner_vw = law_poly(V, W);
	MultiPoly lhs = law_poly(inner_uv, W);
	MultiPoly rhs = law_poly(U, inner_vw);
	if (lhs != rhs)
		return CheckReport::fail("fgl-axioms",
		                         "associativity fails at order " +
		                             std::to_string(n));
	return CheckReport::ok("fgl-axioms",
	                       "unit, commutativity, inverse, associativity at "
	                       "total order " +
	                           std::to_string(n));
}

CheckReport verify_closed_form(const GenusParams &p, int order)
{
	FormalGroupLaw fgl = fgl_bc(p, order + 4);
	const RingPtr &A = p.ring();
	const int n = order;

	// LHS: ((u^2 - v^2) / F)^2
	Series2 num(A, order + 4);
	num.set_coeff(2, 0, MultiPoly::constant(A, Rational(1)));
	num.set_coeff(0, 2, MultiPoly::constant(A, Rational(-1)));
	Series2 ratio = num.div_exact(fgl.law);
	Series2 lhs = (ratio * ratio).truncated(n);

	// RHS: u^2 Q(v) + v^2 Q(u) - 2uv sqrt(Q(u)) sqrt(Q(v))
	//      + a3 u^2 v^2 (u^2 - v^2)^2
	Series1 q = q_series(p, n);
	Series1 sq = q.sqrt();
	Series2 Qu = Series2::from_series1(q, 0).truncated(n);
	Series2 Qv = Series2::from_series1(q, 1).truncated(n);
	Series2 sQu = Series2::from_series1(sq, 0).truncated(n);
	Series2 sQv = Series2::from_series1(sq, 1).truncated(n);
	Series2 u2 = Series2::variable(A, 0, n) * Series2::variable(A, 0, n);
	Series2 v2 = Series2::variable(A, 1, n) * Series2::variable(A, 1, n);
	Series2 uv = Series2::variable(A, 0, n) * Series2::variable(A, 1, n);
	Series2 rhs = u2 * Qv + v2 * Qu - (uv * sQu * sQv).scaled(Rational(2));
	Series2 diff2 = u2 - v2;
	rhs += ((u2 * v2) * (diff2 * diff2)).scaled(p.a3);

	Series2 residual = lhs - rhs;
	if (residual.is_zero())
		return CheckReport::ok("closed-form",
		                       "pole-cleared law identity holds to total "
		                       "degree " +
		                           std::to_string(n));
	return CheckReport::fail("closed-form", first_nonzero(residual));
}

GenusTable theta_values(const GenusParams &p, int order, ThetaMethod method)
{
	if (order < 2)
		throw std::invalid_argument("theta_values needs order >= 2");
	const RingPtr &A = p.ring();
	std::vector<MultiPoly> even; // even[n] = Bc(Theta_{2n}), even[0] = 1

	if (method == ThetaMethod::reversion)
	{
		Series1 f = exp_bc(p, order + 1);
		for (int n = 0; 2 * n <= order; ++n)
		{
			MultiPoly c = f.coeff(2 * n + 1);
			c.scale(Rational(factorial(unsigned(2 * n + 1))));
			even.push_back(std::move(c));
		}
	}
	else
	{
		// b_{n+1} = -a1 b_n
		//   + 2 a2 sum_{i+j+k=n-1} binom(2n+1; 2i+1,2j+1,2k+1) b_i b_j b_k
		//   - 3 a3 sum_{i1+..+i5=n-2} binom(2n+1; ...) b_{i1} .. b_{i5}
		even.push_back(MultiPoly::constant(A, Rational(1)));
		for (int n = 0; 2 * (n + 1) <= order; ++n)
		{
			MultiPoly next = -(p.a1 * even[std::size_t(n)]);
			if (n >= 1)
			{
				MultiPoly sum3(A);
				for_each_multiset(
				    unsigned(n - 1), 3,
				    [&](const std::vector<unsigned> &parts,
				        unsigned long arr)
				    {
					    std::vector<unsigned> odd_parts;
					    for (unsigned q : parts)
						    odd_parts.push_back(2 * q + 1);
					    mpz_class m =
					        multinomial(unsigned(2 * n + 1), odd_parts) *
					        long(arr);
					    MultiPoly prod =
					        MultiPoly::constant(A, Rational(m));
					    for (unsigned q : parts)
						    prod = prod * even[q];
					    sum3 += prod;
				    });
				next += (p.a2 * sum3).scale(Rational(2));
			}
			if (n >= 2)
			{
				MultiPoly sum5(A);
				for_each_multiset(
				    unsigned(n - 2), 5,
				    [&](const std::vector<unsigned> &parts,
				        unsigned long arr)
				    {
					    std::vector<unsigned> odd_parts;
					    for (unsigned q : parts)
						    odd_parts.push_back(2 * q + 1);
					    mpz_class m =
					        multinomial(unsigned(2 * n + 1), odd_parts) *
					        long(arr);
					    MultiPoly prod =
					        MultiPoly::constant(A, Rational(m));
					    for (unsigned q : parts)
						    prod = prod * even[q];
					    sum5 += prod;
				    });
				next -= (p.a3 * sum5).scale(Rational(3));
			}
			even.push_back(std::move(next));
		}
	}

	GenusTable table{"bc-theta", A, {}};
	for (int n = 1; n <= order; ++n)
	{
		MultiPoly value =
		    (n % 2 == 0) ? even[std::size_t(n / 2)] : MultiPoly(A);
		table.rows.push_back(
		    {"Theta" + std::to_string(n), n, std::move(value)});
	}
	return table;
}

GenusTable cp_values(const GenusParams &p, int order)
{
	if (order < 2)
		throw std::invalid_argument("cp_values needs order >= 2");
	Series1 g = log_bc(p, order + 1);
	GenusTable table{"bc-cp", p.ring(), {}};
	for (int n = 1; n <= order; ++n)
	{
		MultiPoly c = g.coeff(n + 1);
		c.scale(Rational(n + 1));
		table.rows.push_back({"CP" + std::to_string(n), n, std::move(c)});
	}
	return table;
}

TwoValuedLogarithm two_valued_log(const GenusParams &p, int order)
{
	if (order < 2)
		throw std::invalid_argument("two_valued_log needs order >= 2");
	const RingPtr &A = p.ring();
	// J(s) = int_0^s dt / sqrt(1 + a1 t^2 + a2 t^4 + a3 t^6)
	int sorder = 2 * order + 1;
	Series1 qplus = Series1::constant(A, Rational(1), sorder - 1);
	if (sorder - 1 >= 2)
		qplus.set_coeff(2, p.a1);
	if (sorder - 1 >= 4)
		qplus.set_coeff(4, p.a2);
	if (sorder - 1 >= 6)
		qplus.set_coeff(6, p.a3);
	Series1 J = qplus.sqrt().inverse().integral();

	Series1 sq = J * J;
	auto parity = sq.even_check();
	if (!parity.holds)
		throw std::domain_error("odd power leakage in I(x)^2 at s^" +
		                        std::to_string(parity.first_offender));
	Series1 B(A, order);
	for (int m = 0; m <= order; ++m)
		B.set_coeff(m, sq.coeff(2 * m));

	const RingPtr X = x_ring();
	auto x = MultiPoly::variable(X, "x");
	auto lift = [&](const MultiPoly &c) { return substitute(c, X, {}); };
	MultiPoly one = MultiPoly::constant(X, Rational(1));
	MultiPoly phi1 =
	    (one + lift(p.a1) * x * Rational(2) + lift(p.a2) * x.pow(2) * Rational(3) +
	     lift(p.a3) * x.pow(3) * Rational(4)) *
	    Rational(2);
	MultiPoly phi2 = (one + lift(p.a1) * x + lift(p.a2) * x.pow(2) +
	                  lift(p.a3) * x.pow(3)) *
	                 x * Rational(16);
	return {std::move(B), std::move(J), std::move(phi1), std::move(phi2)};
}

CheckReport verify_tv_ode(const GenusParams &p, int order)
{
	TwoValuedLogarithm tvl = two_valued_log(p, order + 2);

	if (!tvl.B.coeff(0).is_zero())
		return CheckReport::fail("tv-ode", "B(0) != 0");

	auto xi = *x_ring()->index_of("x");
	if (tvl.phi1.integral(xi) * Rational(8) != tvl.phi2)
		return CheckReport::fail("tv-ode", "phi2 != 8 int phi1");

	Series1 phi1s = series_in_var(tvl.phi1, "x", p.ring(), order);
	Series1 phi2s = series_in_var(tvl.phi2, "x", p.ring(), order);
	Series1 Bp = tvl.B.derivative();
	Series1 Bpp = Bp.derivative();
	Series1 residual = (phi1s * Bp.truncated(order)).scaled(Rational(1, 2)) +
	                   (phi2s * Bpp.truncated(order)).scaled(Rational(1, 8)) -
	                   Series1::constant(p.ring(), Rational(1), order);
	if (residual.is_zero())
		return CheckReport::ok("tv-ode",
		                       "(1/2) phi1 B' + (1/8) phi2 B'' = 1 to order " +
		                           std::to_string(order));
	return CheckReport::fail("tv-ode", first_nonzero(residual));
}

CheckReport verify_uniformization(const GenusParams &p, int order)
{
	if (order < 4)
		throw std::invalid_argument("verify_uniformization needs order >= 4");
	const RingPtr &A = p.ring();

	// functional inverse of u = I(x): revert the odd series J, then square
	TwoValuedLogarithm tvl = two_valued_log(p, order);
	Series1 r = tvl.I.truncated(order + 1).revert();
	Series1 xu = (r * r).truncated(order);

	// 1/(wp(u; g2, g3) - a1/3) = u^2 (1 - (a1/3) u^2 + u^2 tail)^{-1}
	EllipticParams es = elliptic_from_a(p);
	WpSeries wp = wp_series(std::max(order, 2));
	std::map<std::size_t, MultiPoly> bind{
	    {*g_ring()->index_of("g2"), es.g2},
	    {*g_ring()->index_of("g3"), es.g3}};
	Series1 tail_a(A, wp.tail.order());
	for (int k = 0; k <= wp.tail.order(); ++k)
		if (!wp.tail.coeff(k).is_zero())
			tail_a.set_coeff(k, substitute(wp.tail.coeff(k), A, bind));
	Series1 inner = Series1::constant(A, Rational(1), order);
	if (order >= 2)
		inner.set_coeff(2, p.a1 * Rational(-1, 3));
	inner += tail_a.shifted(2).truncated(order);
	Series1 wu = inner.inverse().shifted(2);

	Series1 diff = xu - wu;
	if (!diff.is_zero())
		return CheckReport::fail("uniformization",
		                         "x(u) vs 1/(wp - a1/3): " +
		                             first_nonzero(diff));

	// modulus-square bridge: B(-u^2) = -g_Bc(u)^2
	Series1 minus_u2(A, order);
	if (order >= 2)
		minus_u2.set_coeff(2, MultiPoly::constant(A, Rational(-1)));
	Series1 bridge =
	    tvl.B.truncated(order).compose(minus_u2) +
	    [&]
	    {
		    Series1 g = log_bc(p, order);
		    return (g * g).truncated(order);
	    }();
	if (!bridge.is_zero())
		return CheckReport::fail("uniformization",
		                         "B(-u^2) + g(u)^2: " + first_nonzero(bridge));
	return CheckReport::ok("uniformization",
	                       "x(u) identity and B(-u^2) = -g(u)^2 to order " +
	                           std::to_string(order));
}

CheckReport verify_exp_ode(const GenusParams &p, int order)
{
	Series1 f = exp_bc(p, order + 1);
	Series1 fp = f.derivative();
	Series1 lhs = (fp * fp).truncated(order);
	Series1 rhs = q_series(p, order).compose(f.truncated(order));
	Series1 residual = lhs - rhs;
	if (residual.is_zero())
		return CheckReport::ok("exp-ode", "(f')^2 = Q(f) to order " +
		                                      std::to_string(order));
	return CheckReport::fail("exp-ode", first_nonzero(residual));
}

CheckReport verify_ochanine_ode(const GenusParams &p, int order)
{
	if (!p.a3_is_zero())
		throw std::invalid_argument("verify_ochanine_ode needs a3 = 0");
	Series1 f = exp_bc(p, order + 1);
	Series1 fp = f.derivative();
	Series1 ft = f.truncated(order);
	Series1 f2 = ft * ft;
	Series1 f4 = f2 * f2;
	Series1 residual = (fp * fp).truncated(order) -
	                   Series1::constant(p.ring(), Rational(1), order) +
	                   f2.scaled(p.a1) - f4.scaled(p.a2);
	if (residual.is_zero())
		return CheckReport::ok("ochanine-ode",
		                       "(f')^2 = 1 - a1 f^2 + a2 f^4 to order " +
		                           std::to_string(order));
	return CheckReport::fail("ochanine-ode", first_nonzero(residual));
}

} // namespace fgl
