#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fgl/buchstaber.hpp"
#include "fgl/series.hpp"

#include <random>

using namespace fgl;

namespace {

RingPtr plain()
{
	static RingPtr r = make_ring({{"c", 1}});
	return r;
}

Series1 rat_series(const RingPtr &ring, std::initializer_list<long> coeffs)
{
	Series1 s(ring, int(coeffs.size()) - 1);
	int k = 0;
	for (long c : coeffs)
		s.set_coeff(k++, MultiPoly::constant(ring, Rational(c)));
	return s;
}

// independent oracle: triangular back-substitution for the reciprocal,
// c_0 = 1/b_0, c_k = -(1/b_0) sum_{j=1}^{k} b_j c_{k-j}
Series1 oracle_inverse(const Series1 &b)
{
	Rational b0 = b.coeff(0).constant_value();
	Series1 c(b.ring(), b.order());
	c.set_coeff(0, MultiPoly::constant(b.ring(), b0.inverse()));
	for (int k = 1; k <= b.order(); ++k)
	{
		MultiPoly acc(b.ring());
		for (int j = 1; j <= k; ++j)
			acc += b.coeff(j) * c.coeff(k - j);
		acc.scale(-b0.inverse());
		c.set_coeff(k, acc);
	}
	return c;
}

// independent oracle: (1+w)^{1/2} by the binomial series, w = Q - 1
Series1 oracle_sqrt_binomial(const Series1 &q)
{
	Series1 w = q - Series1::constant(q.ring(), Rational(1), q.order());
	Series1 acc = Series1::constant(q.ring(), Rational(1), q.order());
	Series1 wpow = Series1::constant(q.ring(), Rational(1), q.order());
	Rational binom(1);
	for (int k = 1; k <= q.order(); ++k)
	{
		wpow = wpow * w;
		// binom(1/2, k) = binom(1/2, k-1) * (1/2 - (k-1)) / k
		binom *= (Rational(1, 2) - Rational(k - 1)) / Rational(k);
		acc += wpow.scaled(binom);
	}
	return acc;
}

// independent oracle: order-by-order solve of a(b(x)) = x for b
Series1 oracle_revert(const Series1 &a)
{
	Series1 b = Series1::identity(a.ring(), a.order());
	for (int k = 2; k <= a.order(); ++k)
	{
		// adjust b_k so that [x^k] a(b) vanishes
		MultiPoly residue = a.compose(b).coeff(k);
		b.set_coeff(k, b.coeff(k) - residue);
	}
	return b;
}

} // namespace

TEST_CASE("basic products")
{
	auto R = plain();
	Series1 a = rat_series(R, {1, 1, 0, 0});  // 1 + x
	Series1 b = rat_series(R, {1, -1, 0, 0}); // 1 - x
	CHECK(a * b == rat_series(R, {1, 0, -1, 0}));
}

TEST_CASE("geometric series")
{
	auto R = plain();
	Series1 b = rat_series(R, {1, -1, 0, 0, 0, 0, 0}); // 1 - x
	Series1 inv = b.inverse();
	for (int k = 0; k <= 6; ++k)
		CHECK(inv.coeff(k).constant_value() == Rational(1));
	CHECK_THROWS_AS(rat_series(R, {0, 1}).inverse(), std::invalid_argument);
}

TEST_CASE("Q times oracle inverse is one")
{
	GenusParams p = GenusParams::symbolic();
	Series1 q = q_series(p, 12);
	Series1 inv = oracle_inverse(q);
	CHECK(q.div(q) == Series1::constant(q.ring(), Rational(1), 12));
	CHECK(q * inv == Series1::constant(q.ring(), Rational(1), 12));
	CHECK(q.inverse() == inv);
}

TEST_CASE("square roots")
{
	auto R = plain();
	Series1 a = rat_series(R, {1, 1, 0, 0}); // 1 + x
	CHECK((a * a).sqrt() == a);
	Series1 b = rat_series(R, {1, -2, 1, 0}); // (1-x)^2
	CHECK(b.sqrt() == rat_series(R, {1, -1, 0, 0}));
	CHECK_THROWS_AS(rat_series(R, {2, 0}).sqrt(), std::invalid_argument);
}

TEST_CASE("sqrt of Q against the binomial oracle")
{
	GenusParams p = GenusParams::symbolic();
	Series1 q = q_series(p, 6);
	Series1 s = q.sqrt();
	CHECK(s == oracle_sqrt_binomial(q));
	CHECK(s * s == q);
	// explicit low-order values: 1 - a1 t^2/2 + (4 a2 - a1^2) t^4 / 8
	auto A = a_ring();
	MultiPoly a1 = MultiPoly::variable(A, "a1");
	MultiPoly a2 = MultiPoly::variable(A, "a2");
	CHECK(s.coeff(2) == a1 * Rational(-1, 2));
	CHECK(s.coeff(4) == (a2 * Rational(4) - a1 * a1).scale(Rational(1, 8)));
}

TEST_CASE("composition")
{
	auto R = plain();
	Series1 id = Series1::identity(R, 8);
	Series1 f = rat_series(R, {0, 1, 3, -2, 0, 1, 0, 0, 2});
	CHECK(f.compose(id) == f);

	// exp(x) - 1 composed with log(1+x) gives x
	Series1 expm1 = id.exp() - Series1::constant(R, Rational(1), 8);
	Series1 log1p =
	    (Series1::constant(R, Rational(1), 8) + id).log();
	CHECK(expm1.compose(log1p) == id);
	CHECK_THROWS_AS(f.compose(rat_series(R, {1, 1})), std::invalid_argument);
}

TEST_CASE("reversion")
{
	auto R = plain();
	Series1 id = Series1::identity(R, 7);
	CHECK(id.revert() == id);

	// revert(x + x^2) has Catalan signs
	Series1 a = rat_series(R, {0, 1, 1, 0, 0, 0, 0, 0});
	Series1 b = a.revert();
	CHECK(b.coeff(2).constant_value() == Rational(-1));
	CHECK(b.coeff(3).constant_value() == Rational(2));
	CHECK(b.coeff(4).constant_value() == Rational(-5));
	CHECK(b.coeff(5).constant_value() == Rational(14));
	CHECK(a.compose(b) == id.truncated(a.order()));

	CHECK_THROWS_AS(rat_series(R, {0, 2}).revert(), std::invalid_argument);
	CHECK_THROWS_AS(rat_series(R, {1, 1}).revert(), std::invalid_argument);
}

TEST_CASE("reversion of the Buchstaber logarithm")
{
	GenusParams p = GenusParams::symbolic();
	Series1 g = log_bc(p, 9);
	Series1 f = g.revert();
	CHECK(f == oracle_revert(g));
	// u^3 coefficient is -a1/6 = Bc(Theta_2)/3!
	CHECK(f.coeff(3) ==
	      MultiPoly::variable(a_ring(), "a1") * Rational(-1, 6));
	CHECK(g.compose(f) == Series1::identity(g.ring(), 9));
	CHECK(f.compose(g) == Series1::identity(g.ring(), 9));
}

TEST_CASE("exp and log")
{
	auto R = plain();
	Series1 zero(R, 6);
	CHECK(zero.exp() == Series1::constant(R, Rational(1), 6));

	Series1 id = Series1::identity(R, 6);
	Series1 geo = rat_series(R, {1, -1, 0, 0, 0, 0, 0}).inverse();
	Series1 l = geo.log(); // sum x^k / k
	for (int k = 1; k <= 6; ++k)
		CHECK(l.coeff(k).constant_value() == Rational(1, k));

	// exp(c x) has coefficients c^k / k!
	Series1 cx(plain(), 4);
	cx.set_coeff(1, MultiPoly::variable(plain(), "c"));
	Series1 e = cx.exp();
	auto c = MultiPoly::variable(plain(), "c");
	CHECK(e.coeff(2) == (c * c).scale(Rational(1, 2)));
	CHECK(e.coeff(3) == (c * c * c).scale(Rational(1, 6)));

	CHECK_THROWS_AS(rat_series(R, {1, 0}).exp(), std::invalid_argument);
	CHECK_THROWS_AS(rat_series(R, {0, 1}).log(), std::invalid_argument);
}

TEST_CASE("calculus")
{
	auto R = plain();
	Series1 one = Series1::constant(R, Rational(1), 5);
	Series1 x = one.integral();
	CHECK(x.coeff(1).constant_value() == Rational(1));
	CHECK(x.coeff(0).is_zero());

	Series1 x3 = rat_series(R, {0, 0, 0, 1, 0});
	CHECK(x3.derivative() == rat_series(R, {0, 0, 3, 0}));

	std::mt19937 rng(5);
	Series1 g = log_bc(GenusParams::symbolic(), 8);
	CHECK(g.derivative().integral() == g);
}

TEST_CASE("round trips and parity under fuzz")
{
	auto R = plain();
	std::mt19937 rng(11);
	std::uniform_int_distribution<long> num(-4, 4);
	for (int trial = 0; trial < 20; ++trial)
	{
		Series1 a(R, 8);
		a.set_coeff(1, MultiPoly::constant(R, Rational(1)));
		for (int k = 2; k <= 8; ++k)
			a.set_coeff(k, MultiPoly::constant(R, Rational(num(rng), 3)));
		CHECK(a.revert().revert() == a);
		CHECK(a.compose(a.revert()) == Series1::identity(R, 8));

		Series1 u = Series1::constant(R, Rational(1), 8);
		for (int k = 1; k <= 8; ++k)
			u.set_coeff(k, MultiPoly::constant(R, Rational(num(rng), 2)));
		CHECK((u * u).sqrt() == u);
		Series1 w(R, 8);
		for (int k = 1; k <= 8; ++k)
			w.set_coeff(k, MultiPoly::constant(R, Rational(num(rng), 5)));
		CHECK(w.exp().log() == w);
		CHECK(w.derivative().integral() == w);
	}
}

TEST_CASE("odd composed with odd is odd, reversion preserves oddness")
{
	GenusParams p = GenusParams::symbolic();
	Series1 g = log_bc(p, 11);
	CHECK(g.odd_check().holds);
	Series1 f = g.revert();
	CHECK(f.odd_check().holds);
	CHECK(g.compose(f).odd_check().holds);
	// an even series for contrast
	Series1 sq = (g * g).truncated(10);
	CHECK(sq.even_check().holds);
	CHECK_FALSE(sq.odd_check().holds);
}

TEST_CASE("truncation coherence")
{
	GenusParams p = GenusParams::symbolic();
	Series1 g12 = log_bc(p, 12);
	Series1 g7 = log_bc(p, 7);
	CHECK(g12.truncated(7) == g7);
	Series1 f12 = exp_bc(p, 12);
	CHECK(f12.truncated(7) == exp_bc(p, 7));
}

TEST_CASE("bivariate arithmetic and exact division")
{
	auto R = plain();
	// (u^2 - v^2) / (u + v) = u - v
	Series2 num(R, 4);
	num.set_coeff(2, 0, MultiPoly::constant(R, Rational(1)));
	num.set_coeff(0, 2, MultiPoly::constant(R, Rational(-1)));
	Series2 den(R, 4);
	den.set_coeff(1, 0, MultiPoly::constant(R, Rational(1)));
	den.set_coeff(0, 1, MultiPoly::constant(R, Rational(1)));
	Series2 q = num.div_exact(den);
	Series2 want(R, 3);
	want.set_coeff(1, 0, MultiPoly::constant(R, Rational(1)));
	want.set_coeff(0, 1, MultiPoly::constant(R, Rational(-1)));
	CHECK(q == want);

	SUBCASE("inexact division fails loudly")
	{
		Series2 bad(R, 4);
		bad.set_coeff(2, 0, MultiPoly::constant(R, Rational(1)));
		bad.set_coeff(0, 1, MultiPoly::constant(R, Rational(1)));
		CHECK_THROWS_AS(bad.div_exact(den), std::domain_error);
	}

	SUBCASE("substitution into a bivariate series")
	{
		Series1 s = Series1::identity(R, 4);
		Series1 zero(R, 4);
		// q(u, 0) = u
		CHECK(substitute_series1(q, s, zero) == s.truncated(3));
	}
}

TEST_CASE("even reindex catches odd leakage")
{
	auto R = plain();
	Series2 s(R, 4);
	s.set_coeff(2, 2, MultiPoly::constant(R, Rational(5)));
	Series2 r = s.even_reindex(true);
	CHECK(r.coeff(1, 1).constant_value() == Rational(5));

	s.set_coeff(1, 2, MultiPoly::constant(R, Rational(1)));
	CHECK(s.odd_power_offender() == std::pair<int, int>{1, 2});
	CHECK_THROWS_AS(s.even_reindex(false), std::domain_error);
}
