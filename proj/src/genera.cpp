#include "fgl/genera.hpp"

#include "fgl/combinatorics.hpp"
#include "fgl/weierstrass.hpp"

#include <algorithm>
#include <sstream>

namespace fgl {

RingPtr kr_ring()
{
	static RingPtr ring = make_ring(
	    {{"alpha", 1}, {"u", 2}, {"v", 3}, {"g2", 4}, {"g3", 6}});
	return ring;
}

RingPtr kr_free_ring()
{
	static RingPtr ring =
	    make_ring({{"alpha", 1}, {"u", 2}, {"v", 3}, {"g2", 4}});
	return ring;
}

Series1 krichever_exp(int order, bool reduced)
{
	if (order < 1)
		throw std::invalid_argument("krichever_exp needs order >= 1");
	const RingPtr K = kr_ring();

	Series1 ealpha(K, order);
	ealpha.set_coeff(1, MultiPoly::variable(K, "alpha"));
	ealpha = ealpha.exp();

	Series1 sigma = sigma_series(std::max(order, 2));
	Series1 sigma_k(K, order);
	for (int k = 0; k <= std::min(order, sigma.order()); ++k)
		if (!sigma.coeff(k).is_zero())
			sigma_k.set_coeff(k, substitute(sigma.coeff(k), K, {}));

	// T = sum_{k>=2} (-1)^k wp^{(k-2)}(z) x^k / k!
	Series1 T(K, order);
	for (int k = 2; k <= order; ++k)
	{
		MultiPoly d = substitute(wp_z_derivative(unsigned(k - 2)), K, {});
		Rational c(Rational(mpz_class(1)) / Rational(factorial(unsigned(k))));
		if (k % 2 != 0)
			c = -c;
		T.set_coeff(k, d * c);
	}

	Series1 f = ealpha * sigma_k * T.exp();
	if (reduced)
	{
		const RelationRing rel = weierstrass_relation(K);
		Series1 r(K, f.order());
		for (int k = 0; k <= f.order(); ++k)
			if (!f.coeff(k).is_zero())
				r.set_coeff(k, rel.reduce(f.coeff(k)));
		return r;
	}
	return f;
}

Series1 witten_exp(int order)
{
	return sigma_series(order);
}

// ---------------------------------------------------------------------------

void ThetaPolynomial::add_term(Monomial m, mpz_class coeff)
{
	std::sort(m.begin(), m.end(), std::greater<int>());
	for (int i : m)
		if (i < 1)
			throw std::invalid_argument("theta index must be positive");
	auto [it, fresh] = terms_.emplace(std::move(m), coeff);
	if (!fresh)
	{
		it->second += coeff;
		if (it->second == 0)
			terms_.erase(it);
	}
	else if (it->second == 0)
		terms_.erase(it);
}

ThetaPolynomial ThetaPolynomial::monomial(Monomial m, mpz_class coeff)
{
	ThetaPolynomial p;
	p.add_term(std::move(m), std::move(coeff));
	return p;
}

mpz_class ThetaPolynomial::coefficient(const Monomial &m) const
{
	Monomial s = m;
	std::sort(s.begin(), s.end(), std::greater<int>());
	auto it = terms_.find(s);
	return it == terms_.end() ? mpz_class(0) : it->second;
}

int ThetaPolynomial::degree() const
{
	int deg = 0;
	bool first = true;
	for (const auto &[m, c] : terms_)
	{
		int d = 0;
		for (int i : m)
			d += i;
		if (first)
		{
			deg = d;
			first = false;
		}
		else if (d != deg)
			return -1;
	}
	return deg;
}

ThetaPolynomial ThetaPolynomial::operator*(const ThetaPolynomial &o) const
{
	ThetaPolynomial r;
	for (const auto &[ma, ca] : terms_)
		for (const auto &[mb, cb] : o.terms_)
		{
			Monomial m = ma;
			m.insert(m.end(), mb.begin(), mb.end());
			r.add_term(std::move(m), ca * cb);
		}
	return r;
}

ThetaPolynomial ThetaPolynomial::operator+(const ThetaPolynomial &o) const
{
	ThetaPolynomial r = *this;
	for (const auto &[m, c] : o.terms_)
		r.add_term(m, c);
	return r;
}

std::string ThetaPolynomial::to_string() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	for (const auto &[m, c] : terms_)
	{
		if (!out.empty())
			out += c >= 0 ? " + " : " - ";
		else if (c < 0)
			out += "-";
		mpz_class a = abs(c);
		std::string mono;
		for (std::size_t i = 0; i < m.size(); ++i)
		{
			unsigned run = 1;
			while (i + 1 < m.size() && m[i + 1] == m[i])
				++run, ++i;
			if (!mono.empty())
				mono += "*";
			mono += "Theta" + std::to_string(m[i]);
			if (run > 1)
				mono += "^" + std::to_string(run);
		}
		if (mono.empty())
			out += a.get_str();
		else if (a == 1)
			out += mono;
		else
			out += a.get_str() + "*" + mono;
	}
	return out;
}

// ---------------------------------------------------------------------------

GenusTable krichever_table(int order)
{
	Series1 f = krichever_exp(order + 1, /*reduced=*/false);
	GenusTable table{"krichever", kr_ring(), {}};
	for (int n = 1; n <= order; ++n)
	{
		MultiPoly c = f.coeff(n + 1);
		c.scale(Rational(factorial(unsigned(n + 1))));
		table.rows.push_back({"Theta" + std::to_string(n), n, std::move(c)});
	}
	return table;
}

GenusTable witten_table(int order)
{
	Series1 f = witten_exp(order + 1);
	GenusTable table{"witten", g_ring(), {}};
	for (int n = 1; n <= order; ++n)
	{
		MultiPoly c = f.coeff(n + 1);
		c.scale(Rational(factorial(unsigned(n + 1))));
		table.rows.push_back({"Theta" + std::to_string(n), n, std::move(c)});
	}
	return table;
}

MultiPoly genus_eval(const ThetaPolynomial &p, const GenusTable &table)
{
	MultiPoly out(table.coefficient_ring);
	for (const auto &[m, c] : p.terms())
	{
		MultiPoly prod =
		    MultiPoly::constant(table.coefficient_ring, Rational(c));
		for (int i : m)
			prod = prod * table.value_of(i);
		out += prod;
	}
	return out;
}

std::pair<ThetaPolynomial, ThetaPolynomial> special_elements()
{
	ThetaPolynomial K;
	K.add_term({6}, 1);
	K.add_term({1, 1, 1, 1, 1, 1}, 9);
	K.add_term({2, 1, 1, 1, 1}, -15);
	K.add_term({3, 1, 1, 1}, -3);
	K.add_term({2, 2, 1, 1}, -13);
	K.add_term({4, 1, 1}, 3);
	K.add_term({3, 2, 1}, 29);
	K.add_term({2, 2, 2}, 10);
	K.add_term({4, 2}, -11);
	K.add_term({3, 3}, -10);

	ThetaPolynomial L;
	L.add_term({5, 1}, 1);
	L.add_term({4, 1, 1}, -3);
	L.add_term({3, 2, 1}, -11);
	L.add_term({3, 1, 1, 1}, 12);
	L.add_term({2, 2, 1, 1}, 22);
	L.add_term({2, 1, 1, 1, 1}, -30);
	L.add_term({1, 1, 1, 1, 1, 1}, 9);
	return {std::move(K), std::move(L)};
}

MultiPoly eliminate_g3(const MultiPoly &p)
{
	const RingPtr F = kr_free_ring();
	MultiPoly u = MultiPoly::variable(F, "u");
	MultiPoly v = MultiPoly::variable(F, "v");
	MultiPoly g2 = MultiPoly::variable(F, "g2");
	MultiPoly image = u.pow(3) * Rational(4) - g2 * u - v * v;
	auto g3_idx = p.ring()->index_of("g3");
	if (!g3_idx)
		throw std::invalid_argument("no g3 in ring");
	return substitute(p, F, {{*g3_idx, image}});
}

// ---------------------------------------------------------------------------
// exact linear algebra for the kernel computation

namespace {

// fraction-free (Bareiss) row echelon over Z; returns pivot column per row
std::vector<int> bareiss_echelon(std::vector<std::vector<mpz_class>> &m)
{
	const std::size_t rows = m.size();
	const std::size_t cols = rows ? m[0].size() : 0;
	std::vector<int> pivot_cols;
	mpz_class prev(1);
	std::size_t r = 0;
	for (std::size_t c = 0; c < cols && r < rows; ++c)
	{
		std::size_t sel = r;
		while (sel < rows && m[sel][c] == 0)
			++sel;
		if (sel == rows)
			continue;
		std::swap(m[r], m[sel]);
		for (std::size_t i = r + 1; i < rows; ++i)
		{
			for (std::size_t j = c + 1; j < cols; ++j)
			{
				mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
				mpz_divexact(t.get_mpz_t(), t.get_mpz_t(),
				             prev.get_mpz_t());
				m[i][j] = t;
			}
			m[i][c] = 0;
		}
		prev = m[r][c];
		pivot_cols.push_back(int(c));
		++r;
	}
	return pivot_cols;
}

// null space basis over Q from an integer echelon form, normalized to
// primitive integer vectors
std::vector<std::vector<mpz_class>>
nullspace_basis(std::vector<std::vector<mpz_class>> m)
{
	const std::size_t cols = m.empty() ? 0 : m[0].size();
	std::vector<int> pivots = bareiss_echelon(m);
	std::vector<bool> is_pivot(cols, false);
	for (int c : pivots)
		is_pivot[std::size_t(c)] = true;

	std::vector<std::vector<mpz_class>> basis;
	for (std::size_t fc = 0; fc < cols; ++fc)
	{
		if (is_pivot[fc])
			continue;
		std::vector<Rational> x(cols, Rational(0));
		x[fc] = Rational(1);
		// back-substitute pivot rows (echelon, so bottom-up)
		for (std::size_t ri = pivots.size(); ri-- > 0;)
		{
			std::size_t pc = std::size_t(pivots[ri]);
			Rational acc(0);
			for (std::size_t j = pc + 1; j < cols; ++j)
				if (!(x[j] == Rational(0)))
					acc += Rational(m[ri][j]) * x[j];
			x[pc] = -acc / Rational(m[ri][pc]);
		}
		// clear denominators, divide by content
		mpz_class lcm(1);
		for (const auto &q : x)
			mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
			        q.denominator().get_mpz_t());
		std::vector<mpz_class> v(cols);
		mpz_class content(0);
		for (std::size_t j = 0; j < cols; ++j)
		{
			v[j] = x[j].numerator() * (lcm / x[j].denominator());
			mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
			        v[j].get_mpz_t());
		}
		if (content > 1)
			for (auto &e : v)
				mpz_divexact(e.get_mpz_t(), e.get_mpz_t(),
				             content.get_mpz_t());
		basis.push_back(std::move(v));
	}
	return basis;
}

std::size_t rank_of(std::vector<std::vector<mpz_class>> m)
{
	return bareiss_echelon(m).size();
}

std::vector<ThetaPolynomial::Monomial> theta_monomials(int degree)
{
	std::vector<ThetaPolynomial::Monomial> out;
	for (const auto &p : partitions_of(degree))
		out.push_back(p);
	return out;
}

} // namespace

bool KernelBasis::contains(const ThetaPolynomial &p) const
{
	// membership in the Q-span: rank unchanged after appending p's vector
	std::vector<std::vector<mpz_class>> m;
	for (const auto &b : basis)
	{
		std::vector<mpz_class> row;
		for (const auto &mono : monomials)
			row.push_back(b.coefficient(mono));
		m.push_back(std::move(row));
	}
	std::size_t r0 = rank_of(m);
	std::vector<mpz_class> row;
	for (const auto &mono : monomials)
		row.push_back(p.coefficient(mono));
	m.push_back(std::move(row));
	return rank_of(std::move(m)) == r0;
}

KernelBasis kernel_basis(int degree)
{
	if (degree < 1)
		throw std::invalid_argument("kernel degree must be positive");
	GenusTable table = krichever_table(degree);
	KernelBasis out;
	out.degree = degree;
	out.monomials = theta_monomials(degree);

	// images in the free ring Q[alpha, u, v, g2]
	std::vector<MultiPoly> images;
	for (const auto &m : out.monomials)
		images.push_back(
		    eliminate_g3(genus_eval(ThetaPolynomial::monomial(m), table)));

	// collect the ring monomials that occur
	std::vector<std::uint64_t> keys;
	for (const auto &img : images)
		for (const auto &[key, c] : img.terms())
			keys.push_back(key);
	std::sort(keys.begin(), keys.end());
	keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

	// rows = ring monomials, cols = theta monomials; scale rows integral
	std::vector<std::vector<mpz_class>> m(
	    keys.size(), std::vector<mpz_class>(out.monomials.size(), 0));
	for (std::size_t r = 0; r < keys.size(); ++r)
	{
		mpz_class lcm(1);
		std::vector<Rational> row(out.monomials.size());
		for (std::size_t c = 0; c < images.size(); ++c)
		{
			row[c] = images[c].coefficient_key(keys[r]);
			mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
			        row[c].denominator().get_mpz_t());
		}
		for (std::size_t c = 0; c < images.size(); ++c)
			m[r][c] = row[c].numerator() * (lcm / row[c].denominator());
	}

	for (auto &vec : nullspace_basis(std::move(m)))
	{
		ThetaPolynomial p;
		for (std::size_t c = 0; c < out.monomials.size(); ++c)
			if (vec[c] != 0)
				p.add_term(out.monomials[c], vec[c]);
		out.basis.push_back(std::move(p));
	}
	return out;
}

// ---------------------------------------------------------------------------

namespace {

RingPtr e_ring()
{
	static RingPtr ring = make_ring({{"e1", 2}, {"e2", 2}, {"e3", 2}});
	return ring;
}

RingPtr e12_ring()
{
	static RingPtr ring = make_ring({{"e1", 2}, {"e2", 2}});
	return ring;
}

// reduce modulo e1 + e2 + e3 = 0 by eliminating e3
MultiPoly mod_esum(const MultiPoly &p)
{
	const RingPtr T = e12_ring();
	MultiPoly e3_image = -(MultiPoly::variable(T, "e1") +
	                       MultiPoly::variable(T, "e2"));
	return substitute(p, T, {{*e_ring()->index_of("e3"), e3_image}});
}

bool reduces_to_zero(const Series1 &s)
{
	for (int k = 0; k <= s.order(); ++k)
		if (!s.coeff(k).is_zero() && !mod_esum(s.coeff(k)).is_zero())
			return false;
	return true;
}

std::string first_nonzero_mod(const Series1 &s)
{
	for (int k = 0; k <= s.order(); ++k)
		if (!s.coeff(k).is_zero())
		{
			MultiPoly r = mod_esum(s.coeff(k));
			if (!r.is_zero())
				return "first residual at x^" + std::to_string(k) + ": " +
				       r.to_string();
		}
	return "zero";
}

} // namespace

CheckReport verify_ochanine_specialization(int order)
{
	const RingPtr E = e_ring();
	MultiPoly e1 = MultiPoly::variable(E, "e1");
	MultiPoly e2 = MultiPoly::variable(E, "e2");
	MultiPoly e3 = MultiPoly::variable(E, "e3");
	// 4x^3 - g2 x - g3 = 4 (x - e1)(x - e2)(x - e3) requires e1+e2+e3 = 0,
	// g2 = -4 sigma2, g3 = 4 sigma3
	MultiPoly g2e = -(e1 * e2 + e1 * e3 + e2 * e3) * Rational(4);
	MultiPoly g3e = e1 * e2 * e3 * Rational(4);

	const RingPtr K = kr_ring();
	std::map<std::size_t, MultiPoly> bind{
	    {*K->index_of("alpha"), MultiPoly(E)},
	    {*K->index_of("u"), e1},
	    {*K->index_of("v"), MultiPoly(E)},
	    {*K->index_of("g2"), g2e},
	    {*K->index_of("g3"), g3e}};

	Series1 fk = krichever_exp(order + 1, /*reduced=*/true);
	Series1 f(E, order + 1);
	for (int k = 0; k <= order + 1; ++k)
		if (!fk.coeff(k).is_zero())
			f.set_coeff(k, substitute(fk.coeff(k), E, bind));

	// oddness holds identically in the free ring over e1, e2, e3
	auto parity = f.odd_check();
	if (!parity.holds)
		return CheckReport::fail(
		    "ochanine-specialization",
		    "even Hurwitz coefficient survives at x^" +
		        std::to_string(parity.first_offender));

	// wp(x) with the same parameters
	WpSeries wp = wp_series(std::max(order, 2));
	std::map<std::size_t, MultiPoly> gbind{
	    {*g_ring()->index_of("g2"), g2e}, {*g_ring()->index_of("g3"), g3e}};
	Series1 tail_e(E, wp.tail.order());
	for (int k = 0; k <= wp.tail.order(); ++k)
		if (!wp.tail.coeff(k).is_zero())
			tail_e.set_coeff(k, substitute(wp.tail.coeff(k), E, gbind));

	// pole-cleared square identity: f^2 (1 - e1 x^2 + x^2 tail) = x^2
	Series1 inner = Series1::constant(E, Rational(1), order);
	if (order >= 2)
		inner.set_coeff(2, -e1);
	inner += tail_e.shifted(2).truncated(order);
	Series1 f2 = (f * f).truncated(order);
	Series1 x2(E, order);
	if (order >= 2)
		x2.set_coeff(2, MultiPoly::constant(E, Rational(1)));
	Series1 sq_res = f2 * inner - x2;
	if (!reduces_to_zero(sq_res))
		return CheckReport::fail("ochanine-specialization",
		                         "f^2 (wp - e1) != 1: " +
		                             first_nonzero_mod(sq_res));

	// (f')^2 = (1 + (e1-e2) f^2)(1 + (e1-e3) f^2)
	Series1 fp = f.derivative().truncated(order);
	Series1 one = Series1::constant(E, Rational(1), order);
	Series1 rhs = (one + f2.scaled(e1 - e2)) * (one + f2.scaled(e1 - e3));
	Series1 ode_res = fp * fp - rhs;
	if (!reduces_to_zero(ode_res))
		return CheckReport::fail("ochanine-specialization",
		                         "(f')^2 product identity: " +
		                             first_nonzero_mod(ode_res));
	return CheckReport::ok(
	    "ochanine-specialization",
	    "oddness, square identity and (f')^2 factorization to order " +
	        std::to_string(order));
}

// ---------------------------------------------------------------------------

std::vector<MultiPoly> hurwitz_coefficients(const Series1 &f, int max_n)
{
	if (f.order() < max_n + 1)
		throw std::invalid_argument("series order too low for Hurwitz range");
	std::vector<MultiPoly> out;
	for (int n = 1; n <= max_n; ++n)
	{
		MultiPoly c = f.coeff(n + 1);
		c.scale(Rational(factorial(unsigned(n + 1))));
		out.push_back(std::move(c));
	}
	return out;
}

HurwitzReport hurwitz_membership(const Series1 &f,
                                 std::span<const HurwitzGenerator> gens,
                                 int max_n)
{
	const RingPtr &R = f.ring();
	std::vector<std::optional<Rational>> scale_of(R->arity());
	for (const auto &g : gens)
	{
		auto idx = R->index_of(g.var);
		if (!idx)
			throw std::invalid_argument("generator variable absent: " + g.var);
		scale_of[*idx] = g.scale;
	}
	auto coeffs = hurwitz_coefficients(f, max_n);
	for (int n = 1; n <= max_n; ++n)
	{
		const MultiPoly &c = coeffs[std::size_t(n - 1)];
		for (const auto &[key, q] : c.terms())
		{
			Rational val = q;
			for (std::size_t i = 0; i < R->arity(); ++i)
			{
				unsigned e = R->exponent(key, i);
				if (e == 0)
					continue;
				if (!scale_of[i])
					return {false, n,
					        "coefficient of u^" + std::to_string(n + 1) +
					            " involves non-generator variable " +
					            R->var(i).name};
				val /= scale_of[i]->pow(e);
			}
			if (!val.is_integer())
				return {false, n,
				        "b_" + std::to_string(n) + " term " +
				            R->monomial_string(key) +
				            " has non-integer generator coordinate " +
				            val.to_string()};
		}
	}
	return {true, -1,
	        "all Hurwitz coefficients up to n = " + std::to_string(max_n) +
	            " lie in the generated subring"};
}

Series1 exp_bc_a1_zero(int order)
{
	// 1/sqrt(wp(u; g2, -g3)) = u (1 + u^2 tail(u; g2, -g3))^{-1/2}
	const RingPtr G = g_ring();
	WpSeries wp = wp_series(std::max(order, 2));
	std::map<std::size_t, MultiPoly> bind{
	    {*G->index_of("g3"), -MultiPoly::variable(G, "g3")}};
	Series1 tail_neg(G, wp.tail.order());
	for (int k = 0; k <= wp.tail.order(); ++k)
		if (!wp.tail.coeff(k).is_zero())
			tail_neg.set_coeff(k, substitute(wp.tail.coeff(k), G, bind));
	Series1 inner = Series1::constant(G, Rational(1), order);
	inner += tail_neg.shifted(2).truncated(order);
	return inner.sqrt().inverse().shifted(1);
}

CheckReport verify_eq14_recurrence(int order)
{
	const RingPtr G = g_ring();
	MultiPoly g2 = MultiPoly::variable(G, "g2");
	MultiPoly g3 = MultiPoly::variable(G, "g3");

	// direct side: b_n = n! [u^n] f in the n!-normalization of Prop 3.5
	Series1 f = exp_bc_a1_zero(order);
	std::vector<MultiPoly> direct;
	for (int n = 0; n <= order; ++n)
	{
		MultiPoly c = f.coeff(n);
		c.scale(Rational(factorial(unsigned(n))));
		direct.push_back(std::move(c));
	}

	// recurrence side: b_{n+2} = -(g2/2) C_n + (3 g3/4) D_n
	std::vector<MultiPoly> rec(std::size_t(order) + 1, MultiPoly(G));
	rec[1] = MultiPoly::constant(G, Rational(1));
	auto hurwitz_power_sum = [&](int n, unsigned parts) -> MultiPoly
	{
		MultiPoly sum(G);
		for_each_multiset(
		    unsigned(n), parts,
		    [&](const std::vector<unsigned> &idx, unsigned long arr)
		    {
			    for (unsigned q : idx)
				    if (q == 0 || q % 2 == 0)
					    return; // b_0 = 0 and b_even = 0
			    mpz_class m = multinomial(unsigned(n), idx) * long(arr);
			    MultiPoly prod = MultiPoly::constant(G, Rational(m));
			    for (unsigned q : idx)
				    prod = prod * rec[q];
			    sum += prod;
		    });
		return sum;
	};

	for (int n = 0; n + 2 <= order; ++n)
	{
		MultiPoly Cn = hurwitz_power_sum(n, 3);
		MultiPoly Dn = hurwitz_power_sum(n, 5);
		// 2-adic facts from the Kummer argument
		MultiPoly chalf = Cn;
		chalf.scale(Rational(1, 2));
		if (!chalf.has_integer_coefficients())
			return CheckReport::fail("eq14-recurrence",
			                         "C_" + std::to_string(n) +
			                             " not divisible by 2");
		MultiPoly dquarter = Dn;
		dquarter.scale(Rational(1, 4));
		if (!dquarter.has_integer_coefficients())
			return CheckReport::fail("eq14-recurrence",
			                         "D_" + std::to_string(n) +
			                             " not divisible by 4");
		rec[std::size_t(n + 2)] =
		    -(g2 * Cn).scale(Rational(1, 2)) + (g3 * Dn).scale(Rational(3, 4));
	}

	for (int n = 0; n <= order; ++n)
		if (direct[std::size_t(n)] != rec[std::size_t(n)])
			return CheckReport::fail(
			    "eq14-recurrence",
			    "b_" + std::to_string(n) + " differs: direct " +
			        direct[std::size_t(n)].to_string() + " vs recurrence " +
			        rec[std::size_t(n)].to_string());
	return CheckReport::ok("eq14-recurrence",
	                       "recurrence matches direct expansion through b_" +
	                           std::to_string(order) +
	                           ", C_n/2 and D_n/4 integral throughout");
}

} // namespace fgl
