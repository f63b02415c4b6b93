#pragma once

#include "fgl/buchstaber.hpp"
#include "fgl/report.hpp"

#include <array>

namespace fgl {

/// Finite abelian group Z/m1 x ... x Z/mk.
struct AbelianGroup
{
	std::vector<int> moduli;

	std::size_t size() const
	{
		std::size_t n = 1;
		for (int m : moduli)
			n *= std::size_t(m);
		return n;
	}
	/// parses "Z12" or "Z2xZ8"
	static AbelianGroup parse(const std::string &spec);
	std::string name() const;
};

using GroupElem = std::vector<int>;

/// Unordered pair {g, -g}; the stored representative is the
/// lexicographically smaller of the two.
struct CosetClass
{
	GroupElem rep;

	bool operator==(const CosetClass &) const = default;
	bool operator<(const CosetClass &o) const { return rep < o.rep; }
	std::string to_string() const;
};

CosetClass coset_class(const AbelianGroup &g, const GroupElem &e);
std::vector<CosetClass> coset_classes(const AbelianGroup &g);

/// [g,-g] * [h,-h] = [[g+h, -g-h], [g-h, -g+h]] as an unordered pair
std::array<CosetClass, 2> coset_product(const AbelianGroup &g,
                                        const CosetClass &a,
                                        const CosetClass &b);

/// exhaustive two-valued group axioms: associativity of 4-element product
/// multisets, commutativity, neutral element, inverse = identity
CheckReport verify_coset_axioms(const AbelianGroup &g);

/// ring Q[a1, a2, a3, x, y]
RingPtr xy_ring();

/// The two-valued law z^2 - Psi1 z + Psi2, kept both as exact rational
/// functions (numerators over a shared denominator) and as series.
struct TwoValuedLaw
{
	MultiPoly psi1_num, psi2_num, denom; // over xy_ring()
	Series2 psi1, psi2;                  // over a_ring() in (x, y)
	int order;
};

/// modulus square of a formal group law with odd exponential:
/// z1 = -F(u,v)^2, z2 = -F(u,-v)^2 rewritten in x = -u^2, y = -v^2
TwoValuedLaw formal_psi(const FormalGroupLaw &fgl, int order);

/// the printed closed-form Psi's with their series expansions
TwoValuedLaw psi_rational(const GenusParams &p, int order);

/// series expansion of the rational Psi's matches the modulus square of
/// F_Bc to total order N — the central correctness gate
CheckReport verify_psi_match(const GenusParams &p, int order);

/// B_a(z; x, y) over Q[a1,a2,a3,x,y,z]
MultiPoly buchstaber_polynomial(const GenusParams &p);

/// exact polynomial identity c(x,y) (z^2 - Psi1 z + Psi2) = B_a(z; x, y)
CheckReport verify_buchstaber_polynomial(const GenusParams &p);

/// Prop 2.4: z_{1,2} = B^{-1}((sqrt(B(x)) +- sqrt(B(y)))^2) reproduces
/// Psi1 and Psi2 under x = s^2, y = t^2, to total order N in (s, t)
CheckReport verify_prop_2_4(const GenusParams &p, int order);

} // namespace fgl
