#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fgl/multipoly.hpp"

#include <random>

using namespace fgl;

namespace {

RingPtr xy()
{
	static RingPtr r = make_ring({{"x", 1}, {"y", 1}});
	return r;
}

RingPtr axy()
{
	static RingPtr r =
	    make_ring({{"a1", 2}, {"a2", 4}, {"a3", 6}, {"x", 1}, {"y", 1}});
	return r;
}

RingPtr uvg()
{
	static RingPtr r =
	    make_ring({{"u", 2}, {"v", 3}, {"g2", 4}, {"g3", 6}});
	return r;
}

MultiPoly var(const RingPtr &r, const char *n, unsigned e = 1)
{
	return MultiPoly::variable(r, n, e);
}

MultiPoly random_poly(const RingPtr &ring, std::mt19937 &rng,
                      unsigned max_terms = 4, unsigned max_exp = 3)
{
	std::uniform_int_distribution<unsigned> nterms(0, max_terms);
	std::uniform_int_distribution<unsigned> exp(0, max_exp);
	std::uniform_int_distribution<long> num(-6, 6);
	std::uniform_int_distribution<long> den(1, 4);
	MultiPoly p(ring);
	unsigned n = nterms(rng);
	for (unsigned t = 0; t < n; ++t)
	{
		std::vector<unsigned> exps(ring->arity());
		for (auto &e : exps)
			e = exp(rng);
		p += MultiPoly::monomial(ring, exps, Rational(num(rng), den(rng)));
	}
	return p;
}

} // namespace

TEST_CASE("rational normalization")
{
	CHECK(Rational(6, 4) == Rational(3, 2));
	CHECK(Rational(-6, -4) == Rational(3, 2));
	CHECK(Rational(6, -4) == Rational(-3, 2));
	CHECK(Rational(0, 7) == Rational(0));
	CHECK(Rational(0).to_string() == "0");
	CHECK(Rational(3, 2).to_string() == "3/2");
	CHECK(Rational(-8, 2).to_string() == "-4");
	CHECK(Rational::parse("22/7") == Rational(22, 7));
	CHECK(Rational::parse("-5") == Rational(-5));
	CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
	CHECK(Rational(2, 3).inverse() == Rational(3, 2));
	CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
	CHECK_THROWS(Rational(1, 0));
	CHECK(Rational(3, 2).denominator() == 2);
	CHECK(Rational(-3, 2).numerator() == -3);
}

TEST_CASE("difference of squares")
{
	auto x = var(xy(), "x"), y = var(xy(), "y");
	CHECK((x + y) * (x - y) == x * x - y * y);
}

TEST_CASE("psi denominator square term")
{
	// (1 - a2 x y)^2 = 1 - 2 a2 x y + a2^2 x^2 y^2
	auto R = axy();
	auto a2 = var(R, "a2"), x = var(R, "x"), y = var(R, "y");
	MultiPoly one = MultiPoly::constant(R, Rational(1));
	MultiPoly lhs = (one - a2 * x * y) * (one - a2 * x * y);
	MultiPoly rhs = one - (a2 * x * y).scale(Rational(2)) +
	                a2 * a2 * x * x * y * y;
	CHECK(lhs == rhs);
}

TEST_CASE("zero annihilates")
{
	auto x = var(xy(), "x");
	MultiPoly zero(xy());
	CHECK((zero * (x + x * x)).is_zero());
}

TEST_CASE("ring mismatch throws")
{
	auto x = var(xy(), "x");
	auto u = var(uvg(), "u");
	CHECK_THROWS_AS(x + u, std::invalid_argument);
	CHECK_THROWS_AS(x * u, std::invalid_argument);
}

TEST_CASE("weierstrass reduction")
{
	auto R = uvg();
	const RelationRing rel = weierstrass_relation(R);
	auto u = var(R, "u"), v = var(R, "v"), g2 = var(R, "g2"),
	     g3 = var(R, "g3");
	MultiPoly cubic = u.pow(3) * Rational(4) - g2 * u - g3;

	CHECK(rel.reduce(v * v) == cubic);
	CHECK(rel.reduce(v.pow(3)) == cubic * v);
	CHECK(rel.reduce((cubic - v * v).scale(Rational(90))).is_zero());
	CHECK(rel.reduce(u) == u);
	SUBCASE("normal form has v-exponent below 2")
	{
		MultiPoly p = v.pow(5) * u + v.pow(2) * g3;
		CHECK(rel.reduce(p).degree_in(*R->index_of("v")) <= 1);
	}
	SUBCASE("relation variable must exist")
	{
		CHECK_THROWS_AS(
		    RelationRing(xy(), "v", 2, MultiPoly(xy())),
		    std::invalid_argument);
	}
}

TEST_CASE("reduction is idempotent and a ring map")
{
	auto R = uvg();
	const RelationRing rel = weierstrass_relation(R);
	std::mt19937 rng(42);
	for (int trial = 0; trial < 40; ++trial)
	{
		MultiPoly p = random_poly(R, rng);
		MultiPoly q = random_poly(R, rng);
		MultiPoly rp = rel.reduce(p);
		CHECK(rel.reduce(rp) == rp);
		CHECK(rel.reduce(p * q) == rel.reduce(rel.reduce(p) * rel.reduce(q)));
	}
}

TEST_CASE("substitution")
{
	auto R = uvg();
	auto u = var(R, "u"), v = var(R, "v"), g2 = var(R, "g2"),
	     g3 = var(R, "g3");

	SUBCASE("g3 elimination annihilates the relation combination")
	{
		MultiPoly p =
		    (u.pow(3) * Rational(4) - g2 * u - g3 - v * v).scale(Rational(90));
		MultiPoly image = u.pow(3) * Rational(4) - g2 * u - v * v;
		MultiPoly out = substitute(p, R, {{*R->index_of("g3"), image}});
		CHECK(out.is_zero());
	}
	SUBCASE("a-parameters to g-parameters")
	{
		auto A = make_ring({{"a1", 2}, {"a2", 4}, {"a3", 6}});
		auto G = make_ring({{"g2", 4}, {"g3", 6}});
		MultiPoly p = var(A, "a2") * Rational(12);
		std::map<std::size_t, MultiPoly> bind{
		    {*A->index_of("a2"), var(G, "g2") * Rational(-1, 4)},
		    {*A->index_of("a3"), var(G, "g3") * Rational(-1, 4)},
		    {*A->index_of("a1"), MultiPoly(G)}};
		CHECK(substitute(p, G, bind) == var(G, "g2") * Rational(-3));
	}
	SUBCASE("identity bindings")
	{
		MultiPoly p = u * v + g2.pow(2);
		CHECK(substitute(p, R, {}) == p);
	}
	SUBCASE("unbound variable missing from target")
	{
		MultiPoly p = u * v;
		CHECK_THROWS_AS(substitute(p, xy(), {}), std::invalid_argument);
	}
}

TEST_CASE("truncated substitution")
{
	auto R = xy();
	auto x = var(R, "x"), y = var(R, "y");
	MultiPoly p = x.pow(3) + x * y;
	std::vector<std::size_t> tracked{*R->index_of("x"), *R->index_of("y")};
	// x -> x + y^2 truncated at total degree 3
	MultiPoly image = x + y * y;
	MultiPoly out =
	    substitute_truncated(p, R, {{*R->index_of("x"), image}}, tracked, 3);
	// (x+y^2)^3 keeps only x^3 and 3x^2y^2 ... -> x^3 at degree 3;
	// x y -> x y + y^3
	MultiPoly want = x.pow(3) + x * y + y.pow(3);
	CHECK(out == want);
}

TEST_CASE("weight reports")
{
	auto A = make_ring({{"a1", 2}, {"a2", 4}, {"a3", 6}});
	auto a1 = var(A, "a1"), a2 = var(A, "a2"), a3 = var(A, "a3");

	auto w1 = weight_of(a1 * a1 + a2 * Rational(12));
	CHECK(w1.homogeneous);
	CHECK(w1.weight == 4);

	auto w2 = weight_of(-(a1.pow(3)) - (a1 * a2).scale(Rational(132)) -
	                    a3 * Rational(360));
	CHECK(w2.homogeneous);
	CHECK(w2.weight == 6);

	auto w3 = weight_of(a1 + a2);
	CHECK_FALSE(w3.homogeneous);
	CHECK(w3.detail.find("weight 2") != std::string::npos);
	CHECK(w3.detail.find("weight 4") != std::string::npos);

	SUBCASE("custom functional")
	{
		std::vector<long> w{-2, -4, -6};
		auto rep = weight_of(a1.pow(2) * a2, w);
		CHECK(rep.homogeneous);
		CHECK(rep.weight == -8);
	}
}

TEST_CASE("weight additivity on homogeneous polynomials")
{
	auto A = make_ring({{"a1", 2}, {"a2", 4}, {"a3", 6}});
	auto a1 = var(A, "a1"), a2 = var(A, "a2"), a3 = var(A, "a3");
	MultiPoly p = a1 * a2 + a3;                    // weight 6
	MultiPoly q = a1.pow(2) + a2;                  // weight 4
	auto rep = weight_of(p * q);
	CHECK(rep.homogeneous);
	CHECK(rep.weight == 10);
}

TEST_CASE("ring axioms on random polynomials")
{
	auto R = axy();
	std::mt19937 rng(7);
	for (int trial = 0; trial < 30; ++trial)
	{
		MultiPoly p = random_poly(R, rng), q = random_poly(R, rng),
		          s = random_poly(R, rng);
		CHECK((p + q) + s == p + (q + s));
		CHECK(p + q == q + p);
		CHECK((p * q) * s == p * (q * s));
		CHECK(p * q == q * p);
		CHECK(p * (q + s) == p * q + p * s);
	}
}

TEST_CASE("canonical serialization")
{
	auto A = make_ring({{"a1", 2}, {"a2", 4}, {"a3", 6}});
	auto a1 = var(A, "a1"), a2 = var(A, "a2"), a3 = var(A, "a3");
	MultiPoly p = -(a1.pow(3)) - (a1 * a2).scale(Rational(132)) -
	              a3 * Rational(360);
	CHECK(p.to_string() == "-a1^3 - 132*a1*a2 - 360*a3");
	CHECK(MultiPoly(A).to_string() == "0");
	MultiPoly half = MultiPoly::constant(A, Rational(1, 2));
	CHECK((a1 * Rational(1, 2)).to_string() == "1/2*a1");
	CHECK(half.to_string() == "1/2");
	// derivative drops the a3 term, the integral does not restore it
	MultiPoly d = p.derivative(0);
	CHECK(d.integral(0) ==
	      -(a1.pow(3)) - (a1 * a2).scale(Rational(132)));
}

TEST_CASE("monomial overflow guard")
{
	auto R = xy();
	MultiPoly big = var(R, "x", R->max_exponent());
	CHECK_THROWS_AS(big * var(R, "x"), std::overflow_error);
}
