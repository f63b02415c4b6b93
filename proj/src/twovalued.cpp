#include "fgl/twovalued.hpp"

#include <algorithm>
#include <sstream>

namespace fgl {

AbelianGroup AbelianGroup::parse(const std::string &spec)
{
	AbelianGroup g;
	std::size_t pos = 0;
	while (pos < spec.size())
	{
		if (spec[pos] != 'Z')
			throw std::invalid_argument("bad group spec: " + spec);
		++pos;
		std::size_t start = pos;
		while (pos < spec.size() && std::isdigit(spec[pos]))
			++pos;
		if (start == pos)
			throw std::invalid_argument("bad group spec: " + spec);
		int m = std::stoi(spec.substr(start, pos - start));
		if (m < 1)
			throw std::invalid_argument("bad group modulus in " + spec);
		g.moduli.push_back(m);
		if (pos < spec.size())
		{
			if (spec[pos] != 'x')
				throw std::invalid_argument("bad group spec: " + spec);
			++pos;
		}
	}
	if (g.moduli.empty())
		throw std::invalid_argument("empty group spec");
	return g;
}

std::string AbelianGroup::name() const
{
	std::string s;
	for (std::size_t i = 0; i < moduli.size(); ++i)
	{
		if (i)
			s += "x";
		s += "Z" + std::to_string(moduli[i]);
	}
	return s;
}

namespace {

GroupElem negate(const AbelianGroup &g, const GroupElem &e)
{
	GroupElem n(e.size());
	for (std::size_t i = 0; i < e.size(); ++i)
		n[i] = (g.moduli[i] - e[i]) % g.moduli[i];
	return n;
}

GroupElem add(const AbelianGroup &g, const GroupElem &a, const GroupElem &b)
{
	GroupElem s(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		s[i] = (a[i] + b[i]) % g.moduli[i];
	return s;
}

} // namespace

CosetClass coset_class(const AbelianGroup &g, const GroupElem &e)
{
	if (e.size() != g.moduli.size())
		throw std::invalid_argument("group element arity mismatch");
	GroupElem r(e.size());
	for (std::size_t i = 0; i < e.size(); ++i)
	{
		r[i] = e[i] % g.moduli[i];
		if (r[i] < 0)
			r[i] += g.moduli[i];
	}
	GroupElem n = negate(g, r);
	return {std::min(r, n)};
}

std::vector<CosetClass> coset_classes(const AbelianGroup &g)
{
	std::vector<CosetClass> out;
	GroupElem e(g.moduli.size(), 0);
	for (;;)
	{
		CosetClass c = coset_class(g, e);
		if (std::find(out.begin(), out.end(), c) == out.end())
			out.push_back(c);
		std::size_t i = e.size();
		while (i > 0)
		{
			--i;
			if (++e[i] < g.moduli[i])
				break;
			e[i] = 0;
			if (i == 0)
			{
				std::sort(out.begin(), out.end());
				return out;
			}
		}
		if (e == GroupElem(g.moduli.size(), 0))
		{
			std::sort(out.begin(), out.end());
			return out;
		}
	}
}

std::array<CosetClass, 2> coset_product(const AbelianGroup &g,
                                        const CosetClass &a,
                                        const CosetClass &b)
{
	if (a.rep.size() != g.moduli.size() || b.rep.size() != g.moduli.size())
		throw std::invalid_argument("coset class over wrong group");
	CosetClass s = coset_class(g, add(g, a.rep, b.rep));
	CosetClass d = coset_class(g, add(g, a.rep, negate(g, b.rep)));
	if (d < s)
		std::swap(s, d);
	return {s, d};
}

std::string CosetClass::to_string() const
{
	std::string s = "[";
	for (std::size_t i = 0; i < rep.size(); ++i)
	{
		if (i)
			s += ",";
		s += std::to_string(rep[i]);
	}
	return s + "]";
}

CheckReport verify_coset_axioms(const AbelianGroup &g)
{
	const auto classes = coset_classes(g);
	const CosetClass e = coset_class(g, GroupElem(g.moduli.size(), 0));

	auto sorted4 = [&](const CosetClass &a, const CosetClass &b,
	                   const CosetClass &c, bool left)
	{
		std::vector<CosetClass> out;
		auto ab = left ? coset_product(g, a, b) : coset_product(g, b, c);
		for (const auto &m : ab)
		{
			auto two = left ? coset_product(g, m, c) : coset_product(g, a, m);
			out.push_back(two[0]);
			out.push_back(two[1]);
		}
		std::sort(out.begin(), out.end());
		return out;
	};

	for (const auto &a : classes)
	{
		// neutral and inverse-as-identity
		auto ea = coset_product(g, e, a);
		if (!(ea[0] == a && ea[1] == a))
			return CheckReport::fail("coset-" + g.name(),
			                         "neutral axiom fails at " + a.to_string());
		auto aa = coset_product(g, a, a);
		if (!(aa[0] == e || aa[1] == e))
			return CheckReport::fail("coset-" + g.name(),
			                         "inverse axiom fails at " + a.to_string());
	}
	for (const auto &a : classes)
		for (const auto &b : classes)
		{
			auto ab = coset_product(g, a, b);
			auto ba = coset_product(g, b, a);
			if (!(ab[0] == ba[0] && ab[1] == ba[1]))
				return CheckReport::fail("coset-" + g.name(),
				                         "commutativity fails at " +
				                             a.to_string() + ", " +
				                             b.to_string());
		}
	for (const auto &a : classes)
		for (const auto &b : classes)
			for (const auto &c : classes)
				if (sorted4(a, b, c, true) != sorted4(a, b, c, false))
					return CheckReport::fail(
					    "coset-" + g.name(),
					    "associativity fails at " + a.to_string() + ", " +
					        b.to_string() + ", " + c.to_string());
	return CheckReport::ok("coset-" + g.name(),
	                       std::to_string(classes.size()) +
	                           " classes, all axioms exhaustively");
}

// ---------------------------------------------------------------------------

RingPtr xy_ring()
{
	static RingPtr ring = make_ring(
	    {{"a1", 2}, {"a2", 4}, {"a3", 6}, {"x", 2}, {"y", 2}});
	return ring;
}

namespace {

RingPtr xyz_ring()
{
	static RingPtr ring = make_ring(
	    {{"a1", 2}, {"a2", 4}, {"a3", 6}, {"x", 2}, {"y", 2}, {"z", 2}});
	return ring;
}

std::string first_nonzero2(const Series2 &s)
{
	for (int d = 0; d <= s.order(); ++d)
		for (int j = 0; j <= d; ++j)
			if (!s.coeff(d - j, j).is_zero())
			{
				std::ostringstream os;
				os << "first divergence at x^" << (d - j) << " y^" << j
				   << ": " << s.coeff(d - j, j).to_string();
				return os.str();
			}
	return "zero";
}

// the three printed polynomials over xy_ring()
struct PsiPolys
{
	MultiPoly psi1_num, psi2_num, denom;
};

PsiPolys psi_polys(const GenusParams &p)
{
	const RingPtr R = xy_ring();
	auto lift = [&](const MultiPoly &c) { return substitute(c, R, {}); };
	MultiPoly a1 = lift(p.a1), a2 = lift(p.a2), a3 = lift(p.a3);
	MultiPoly x = MultiPoly::variable(R, "x");
	MultiPoly y = MultiPoly::variable(R, "y");
	MultiPoly one = MultiPoly::constant(R, Rational(1));

	MultiPoly psi1 = (x + y) * Rational(2) + a1 * x * y * Rational(4) +
	                 a2 * x.pow(2) * y * Rational(2) +
	                 a2 * x * y.pow(2) * Rational(2) +
	                 a3 * x.pow(2) * y.pow(2) * Rational(4);
	MultiPoly psi2 = x.pow(2) - x * y * Rational(2) + y.pow(2);
	MultiPoly den = one - a2 * x * y * Rational(2) -
	                a3 * x.pow(2) * y * Rational(4) -
	                a3 * x * y.pow(2) * Rational(4) +
	                a2.pow(2) * x.pow(2) * y.pow(2) -
	                a1 * a3 * x.pow(2) * y.pow(2) * Rational(4);
	return {std::move(psi1), std::move(psi2), std::move(den)};
}

} // namespace

TwoValuedLaw formal_psi(const FormalGroupLaw &fgl, int order)
{
	if (fgl.order < 2 * order)
		throw std::invalid_argument(
		    "formal_psi needs the law to order 2N");
	auto parity = fgl.exponential.odd_check();
	if (!parity.holds)
		throw std::domain_error("formal_psi needs an odd exponential");

	const Series2 &F = fgl.law;
	Series2 Fm = F.flip_second(); // F(u, -v)
	Series2 z1 = -(F * F);
	Series2 z2 = -(Fm * Fm);
	Series2 s1 = z1 + z2;
	Series2 s2 = z1 * z2;

	// x = -u^2, y = -v^2; the rational-function side stays empty here
	Series2 psi1 = s1.even_reindex(true);
	Series2 psi2 = s2.even_reindex(true);
	return {MultiPoly(xy_ring()), MultiPoly(xy_ring()), MultiPoly(xy_ring()),
	        psi1.truncated(order), psi2.truncated(order), order};
}

TwoValuedLaw psi_rational(const GenusParams &p, int order)
{
	PsiPolys polys = psi_polys(p);
	const RingPtr &A = p.ring();
	Series2 num1 = series_in_vars(polys.psi1_num, "x", "y", A, order);
	Series2 num2 = series_in_vars(polys.psi2_num, "x", "y", A, order);
	Series2 den = series_in_vars(polys.denom, "x", "y", A, order);
	// 1/den as a geometric series in (1 - den), which has degree >= 2
	Series2 one = Series2(A, order);
	one.set_coeff(0, 0, MultiPoly::constant(A, Rational(1)));
	Series2 t = one - den;
	Series2 inv = one;
	Series2 pw = one;
	for (int k = 1; 2 * k <= order; ++k)
	{
		pw = pw * t;
		inv += pw;
	}
	return {polys.psi1_num, polys.psi2_num, polys.denom,
	        num1 * inv, num2 * inv, order};
}

CheckReport verify_psi_match(const GenusParams &p, int order)
{
	FormalGroupLaw fgl = fgl_bc(p, 2 * order);
	TwoValuedLaw series_side = formal_psi(fgl, order);
	TwoValuedLaw rational_side = psi_rational(p, order);
	Series2 d1 = series_side.psi1 - rational_side.psi1;
	Series2 d2 = series_side.psi2 - rational_side.psi2;
	if (!d1.is_zero())
		return CheckReport::fail("psi-match", "Psi1: " + first_nonzero2(d1));
	if (!d2.is_zero())
		return CheckReport::fail("psi-match", "Psi2: " + first_nonzero2(d2));
	if (!series_side.psi1.is_symmetric() || !series_side.psi2.is_symmetric())
		return CheckReport::fail("psi-match", "Psi not symmetric in x, y");
	return CheckReport::ok("psi-match",
	                       "modulus square of F_Bc matches the printed "
	                       "rational forms to total order " +
	                           std::to_string(order));
}

MultiPoly buchstaber_polynomial(const GenusParams &p)
{
	const RingPtr R = xyz_ring();
	auto lift = [&](const MultiPoly &c) { return substitute(c, R, {}); };
	MultiPoly a1 = lift(p.a1), a2 = lift(p.a2), a3 = lift(p.a3);
	MultiPoly x = MultiPoly::variable(R, "x");
	MultiPoly y = MultiPoly::variable(R, "y");
	MultiPoly z = MultiPoly::variable(R, "z");
	MultiPoly one = MultiPoly::constant(R, Rational(1));
	MultiPoly s = x + y + z - a2 * x * y * z;
	MultiPoly q = x * y + y * z + x * z + a1 * x * y * z;
	return s * s - (one + a3 * x * y * z) * q * Rational(4);
}

CheckReport verify_buchstaber_polynomial(const GenusParams &p)
{
	PsiPolys polys = psi_polys(p);
	const RingPtr R = xyz_ring();
	auto lift = [&](const MultiPoly &c) { return substitute(c, R, {}); };
	MultiPoly z = MultiPoly::variable(R, "z");
	MultiPoly lhs =
	    lift(polys.denom) * z * z - lift(polys.psi1_num) * z +
	    lift(polys.psi2_num);
	MultiPoly residual = lhs - buchstaber_polynomial(p);
	if (residual.is_zero())
		return CheckReport::ok(
		    "buchstaber-polynomial",
		    "c (z^2 - Psi1 z + Psi2) = B_a exactly, no truncation");
	return CheckReport::fail("buchstaber-polynomial",
	                         "residual: " + residual.to_string());
}

CheckReport verify_prop_2_4(const GenusParams &p, int order)
{
	const RingPtr &A = p.ring();
	TwoValuedLogarithm tvl = two_valued_log(p, order);

	// sqrt(B(s^2)) = J(s) on the +s branch; arguments (J(s) +- J(t))^2
	Series1 J = tvl.I.truncated(order);
	Series2 P = Series2::from_series1(J, 0);
	Series2 Q = Series2::from_series1(J, 1);
	Series2 rp = (P + Q) * (P + Q);
	Series2 rm = (P - Q) * (P - Q);

	Series1 binv = tvl.B.truncated(std::max(order / 2 + 1, 1)).revert();
	Series2 z1 = compose_outer(binv, rp);
	Series2 z2 = compose_outer(binv, rm);

	// Psi's under x = s^2, y = t^2
	TwoValuedLaw law = psi_rational(p, order / 2 + 1);
	auto stretch = [&](const Series2 &s)
	{
		Series2 out(A, order);
		for (int d = 0; d <= s.order(); ++d)
			for (int j = 0; j <= d; ++j)
				if (2 * d <= order && !s.coeff(d - j, j).is_zero())
					out.set_coeff(2 * (d - j), 2 * j, s.coeff(d - j, j));
		return out;
	};

	Series2 sum_diff = (z1 + z2).truncated(order) - stretch(law.psi1);
	Series2 prod_diff =
	    (z1 * z2).truncated(order) - stretch(law.psi2);
	if (!sum_diff.is_zero())
		return CheckReport::fail("prop-2-4",
		                         "z1 + z2 vs Psi1: " +
		                             first_nonzero2(sum_diff));
	if (!prod_diff.is_zero())
		return CheckReport::fail("prop-2-4",
		                         "z1 z2 vs Psi2: " +
		                             first_nonzero2(prod_diff));
	return CheckReport::ok("prop-2-4",
	                       "B^{-1}((sqrt B(x) +- sqrt B(y))^2) reproduces "
	                       "Psi1, Psi2 to total order " +
	                           std::to_string(order));
}

} // namespace fgl
