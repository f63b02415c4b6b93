#pragma once

#include "fgl/buchstaber.hpp"
#include "fgl/genus_table.hpp"
#include "fgl/report.hpp"

#include <map>

namespace fgl {

/// ring Q[alpha, u, v, g2, g3] with weights 1, 2, 3, 4, 6
RingPtr kr_ring();

/// Krichever exponential f_Kr(x) = e^{alpha x} sigma(x)
/// exp(sum_{k>=2} (-1)^k wp^{(k-2)}(z) x^k / k!) over kr_ring().
/// With `reduced`, every coefficient is brought to Weierstrass normal form
/// (v-exponent <= 1); the raw form is what evaluation on Theta-polynomials
/// uses, since products of normal forms leave the normal form anyway.
Series1 krichever_exp(int order, bool reduced = true);

/// Witten exponential f_Wt(u) = sigma(u; g2, g3) over Q[g2, g3]
Series1 witten_exp(int order);

/// Formal Z-linear combination of monomials in Theta_1, Theta_2, ...
/// A monomial is a weakly decreasing list of indices.
class ThetaPolynomial {
public:
	using Monomial = std::vector<int>;

	void add_term(Monomial m, mpz_class coeff);
	static ThetaPolynomial monomial(Monomial m, mpz_class coeff = 1);

	const std::map<Monomial, mpz_class> &terms() const { return terms_; }
	mpz_class coefficient(const Monomial &m) const;

	/// complex degree when homogeneous (sum of indices per monomial),
	/// -1 otherwise; zero polynomial reports 0
	int degree() const;

	ThetaPolynomial operator*(const ThetaPolynomial &o) const;
	ThetaPolynomial operator+(const ThetaPolynomial &o) const;

	std::string to_string() const;

private:
	std::map<Monomial, mpz_class> terms_;
};

/// Kr(Theta_n) for n <= N, raw assembly coefficients (use
/// weierstrass_relation(kr_ring()).reduce for normal forms)
GenusTable krichever_table(int order);

/// Hurwitz coefficients of f_Wt
GenusTable witten_table(int order);

/// Monomials map to products of table values, extended Z-linearly.  No
/// reduction is applied; callers reduce the result where the relation ring
/// is in play.
MultiPoly genus_eval(const ThetaPolynomial &p, const GenusTable &table);

/// The paper's kernel elements K and L, both homogeneous of complex
/// degree 6.
std::pair<ThetaPolynomial, ThetaPolynomial> special_elements();

/// ring Q[alpha, u, v, g2] — image of kr_ring() under the g3-elimination
/// g3 -> 4u^3 - g2 u - v^2, free as a polynomial ring
RingPtr kr_free_ring();
MultiPoly eliminate_g3(const MultiPoly &p);

struct KernelBasis
{
	int degree = 0;
	std::vector<ThetaPolynomial::Monomial> monomials; // all degree-d monomials
	std::vector<ThetaPolynomial> basis;               // primitive integer vectors

	std::size_t dimension() const { return basis.size(); }
	/// membership in the Q-span of the basis
	bool contains(const ThetaPolynomial &p) const;
};

/// exact null space of the Krichever evaluation on degree-d
/// Theta-monomials, computed by fraction-free Gaussian elimination over Z
KernelBasis kernel_basis(int degree);

/// Thm 3.1 (v) specialization alpha = 0, wp'(z) = 0, wp(z) = e1: oddness of
/// f_Kr, the pole-cleared square identity f^2 (wp(x) - e1) = 1, and
/// (f')^2 = (1 + (e1-e2) f^2)(1 + (e1-e3) f^2), all modulo e1+e2+e3 = 0
CheckReport verify_ochanine_specialization(int order);

/// generator scale * var of a monomial subring Z[s1 v1, s2 v2, ...]
struct HurwitzGenerator
{
	std::string var;
	Rational scale;
};

struct HurwitzReport
{
	bool pass = true;
	int first_failure = -1; // index n of the first failing coefficient
	std::string detail;
};

/// c_n = (n+1)! [u^{n+1}] f for n >= 1
std::vector<MultiPoly> hurwitz_coefficients(const Series1 &f, int max_n);

/// checks c_n in Z[s1 v1, s2 v2, ...] for all n <= max_n
HurwitzReport hurwitz_membership(const Series1 &f,
                                 std::span<const HurwitzGenerator> gens,
                                 int max_n);

/// f_Bc at a1 = 0 over Q[g2, g3], via 1/sqrt(wp(u; g2, -g3))
Series1 exp_bc_a1_zero(int order);

/// Eq. (14): b_{n+2} = -(g2/2) C_n + (3 g3/4) D_n reproduces the direct
/// expansion of f_Bc(a1 = 0) for all n <= N; also asserts C_n in
/// 2 Z[g2,g3] and D_n in 4 Z[g2,g3]
CheckReport verify_eq14_recurrence(int order);

} // namespace fgl
