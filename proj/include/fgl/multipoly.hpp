#pragma once

#include "fgl/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fgl {

/// A ring variable: symbol name plus its (nonnegative) grading weight.
struct VarSpec
{
	std::string name;
	unsigned weight = 0;

	bool operator==(const VarSpec &) const = default;
};

/// Ordered variable set of a polynomial ring.  Exponent vectors are packed
/// into a single 64-bit key, one bit field per variable, with variable 0 in
/// the most significant field; a guard bit per field detects overflow on
/// monomial products.
class PolyRing {
public:
	explicit PolyRing(std::vector<VarSpec> vars);

	std::size_t arity() const { return vars_.size(); }
	const VarSpec &var(std::size_t i) const { return vars_[i]; }
	std::optional<std::size_t> index_of(std::string_view name) const;

	unsigned max_exponent() const { return payload_max_; }
	std::uint64_t guard_mask() const { return guard_; }

	std::uint64_t pack(std::span<const unsigned> exps) const;
	std::uint64_t pack_single(std::size_t var, unsigned exp) const;
	void unpack(std::uint64_t key, std::span<unsigned> out) const;
	unsigned exponent(std::uint64_t key, std::size_t i) const;
	unsigned total_degree(std::uint64_t key) const;
	long weighted_degree(std::uint64_t key) const;
	long weighted_degree(std::uint64_t key, std::span<const long> weights) const;

	std::string monomial_string(std::uint64_t key) const;

	bool operator==(const PolyRing &o) const { return vars_ == o.vars_; }

private:
	std::vector<VarSpec> vars_;
	unsigned bits_ = 0;
	unsigned payload_max_ = 0;
	std::uint64_t guard_ = 0;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<VarSpec> vars);

/// true when both rings have the same variables and weights
inline bool same_ring(const RingPtr &a, const RingPtr &b)
{
	return a == b || (a && b && *a == *b);
}

/// Sparse multivariate polynomial over Q.  Terms are kept sorted by packed
/// monomial key with no explicit zero coefficients stored.
class MultiPoly {
public:
	using Term = std::pair<std::uint64_t, Rational>;

	explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

	static MultiPoly constant(RingPtr ring, Rational c);
	static MultiPoly variable(RingPtr ring, std::size_t var, unsigned exp = 1);
	static MultiPoly variable(RingPtr ring, std::string_view name,
	                          unsigned exp = 1);
	static MultiPoly monomial(RingPtr ring, std::span<const unsigned> exps,
	                          Rational c);

	const RingPtr &ring() const { return ring_; }
	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const
	{
		return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
	}
	Rational constant_value() const;
	std::size_t size() const { return terms_.size(); }
	std::span<const Term> terms() const { return terms_; }

	Rational coefficient(std::span<const unsigned> exps) const;
	Rational coefficient_key(std::uint64_t key) const;
	unsigned degree_in(std::size_t var) const;
	unsigned total_degree() const;

	MultiPoly operator-() const;
	MultiPoly &operator+=(const MultiPoly &o);
	MultiPoly &operator-=(const MultiPoly &o);
	friend MultiPoly operator+(MultiPoly a, const MultiPoly &b)
	{
		return a += b;
	}
	friend MultiPoly operator-(MultiPoly a, const MultiPoly &b)
	{
		return a -= b;
	}
	friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);

	MultiPoly &scale(const Rational &c);
	friend MultiPoly operator*(MultiPoly p, const Rational &c)
	{
		return p.scale(c);
	}
	friend MultiPoly operator*(const Rational &c, MultiPoly p)
	{
		return p.scale(c);
	}

	MultiPoly pow(unsigned k) const;

	/// d/dvar and the antiderivative with zero constant term
	MultiPoly derivative(std::size_t var) const;
	MultiPoly integral(std::size_t var) const;

	bool operator==(const MultiPoly &o) const;
	bool operator!=(const MultiPoly &o) const { return !(*this == o); }

	/// every coefficient an integer (denominator 1)
	bool has_integer_coefficients() const;

	/// Canonical form: terms in descending graded-lex order.
	std::string to_string() const;

	/// replaces the term list wholesale; input need not be sorted or clean
	static MultiPoly from_raw_terms(RingPtr ring, std::vector<Term> raw);

private:
	void normalize_raw(std::vector<Term> &&raw);

	RingPtr ring_;
	std::vector<Term> terms_;
};

/// Homogeneity report for a weight functional.
struct WeightReport
{
	bool homogeneous = true;
	long weight = 0;          // meaningful when homogeneous and nonzero
	std::string detail;       // offending pair when inhomogeneous
};

WeightReport weight_of(const MultiPoly &p);
WeightReport weight_of(const MultiPoly &p, std::span<const long> weights);

/// Substitution of ring variables by polynomials over `target`.  Variables
/// without a binding must exist in `target` under the same name.
MultiPoly substitute(const MultiPoly &p, const RingPtr &target,
                     const std::map<std::size_t, MultiPoly> &bindings);

/// Same, but discards every monomial whose total degree over the tracked
/// target variables exceeds `max_degree` (series work in polynomial form).
MultiPoly substitute_truncated(const MultiPoly &p, const RingPtr &target,
                               const std::map<std::size_t, MultiPoly> &bindings,
                               std::span<const std::size_t> tracked,
                               unsigned max_degree);

MultiPoly mul_truncated(const MultiPoly &a, const MultiPoly &b,
                        std::span<const std::size_t> tracked,
                        unsigned max_degree);

/// A single rewrite rule var^power -> image, image free of var^power.
/// Reduction terminates because each application strictly lowers the
/// exponent of the rewritten variable.
class RelationRing {
public:
	RelationRing(RingPtr base, std::string_view var, unsigned power,
	             MultiPoly image);

	const RingPtr &ring() const { return base_; }
	std::size_t rewritten_var() const { return var_; }
	unsigned rewritten_power() const { return power_; }
	const MultiPoly &image() const { return image_; }

	/// normal form: exponent of the rewritten variable < power in every term
	MultiPoly reduce(MultiPoly p) const;

private:
	RingPtr base_;
	std::size_t var_;
	unsigned power_;
	MultiPoly image_;
};

/// v^2 -> 4u^3 - g2 u - g3 over any base ring containing u, v, g2, g3.
RelationRing weierstrass_relation(const RingPtr &base);

} // namespace fgl
