#pragma once

#include "fgl/multipoly.hpp"

#include <vector>

namespace fgl {

/// Truncated univariate power series with MultiPoly coefficients.  A series
/// of order N stores coefficients of degrees 0..N; arithmetic results carry
/// the minimum of the operand orders.
class Series1 {
public:
	Series1(RingPtr ring, int order);

	static Series1 identity(RingPtr ring, int order); // the series x
	static Series1 constant(RingPtr ring, Rational c, int order);
	static Series1 from_coeffs(std::vector<MultiPoly> coeffs);

	int order() const { return order_; }
	const RingPtr &ring() const { return ring_; }
	const MultiPoly &coeff(int k) const { return coeffs_[std::size_t(k)]; }
	void set_coeff(int k, MultiPoly p);

	Series1 truncated(int m) const;
	/// same coefficients padded with zeros up to order m >= order()
	Series1 extended(int m) const;

	bool is_zero() const;
	bool operator==(const Series1 &o) const;
	bool operator!=(const Series1 &o) const { return !(*this == o); }

	Series1 operator-() const;
	friend Series1 operator+(const Series1 &a, const Series1 &b);
	friend Series1 operator-(const Series1 &a, const Series1 &b);
	friend Series1 operator*(const Series1 &a, const Series1 &b);
	Series1 &operator+=(const Series1 &o) { return *this = *this + o; }
	Series1 &operator-=(const Series1 &o) { return *this = *this - o; }

	Series1 scaled(const Rational &c) const;
	Series1 scaled(const MultiPoly &c) const;
	/// multiply by x^k (degrees above the order fall off)
	Series1 shifted(int k) const;

	/// quotient; the divisor needs an invertible (nonzero rational) constant
	/// term
	Series1 div(const Series1 &b) const;
	Series1 inverse() const;

	/// square root with constant term 1
	Series1 sqrt() const;

	/// composition this(inner); inner must have zero constant term
	Series1 compose(const Series1 &inner) const;

	/// functional inverse; requires zero constant term and linear
	/// coefficient exactly 1
	Series1 revert() const;

	Series1 exp() const; // zero constant term
	Series1 log() const; // constant term 1

	Series1 derivative() const; // order drops by one
	Series1 integral() const;   // order rises by one, constant term 0

	struct ParityReport
	{
		bool holds = true;
		int first_offender = -1;
	};
	ParityReport odd_check() const;  // all even coefficients vanish
	ParityReport even_check() const; // all odd coefficients vanish

	std::string to_string() const;

private:
	RingPtr ring_;
	int order_;
	std::vector<MultiPoly> coeffs_;
};

/// Truncated bivariate power series, triangular storage: coefficient (i, j)
/// for i + j <= order.
class Series2 {
public:
	Series2(RingPtr ring, int order);

	/// embeds a univariate series in the first (which = 0) or second
	/// (which = 1) variable
	static Series2 from_series1(const Series1 &s, int which);
	static Series2 variable(RingPtr ring, int which, int order);

	int order() const { return order_; }
	const RingPtr &ring() const { return ring_; }
	const MultiPoly &coeff(int i, int j) const;
	void set_coeff(int i, int j, MultiPoly p);

	Series2 truncated(int m) const;

	bool is_zero() const;
	bool operator==(const Series2 &o) const;
	bool operator!=(const Series2 &o) const { return !(*this == o); }

	Series2 operator-() const;
	friend Series2 operator+(const Series2 &a, const Series2 &b);
	friend Series2 operator-(const Series2 &a, const Series2 &b);
	friend Series2 operator*(const Series2 &a, const Series2 &b);
	Series2 &operator+=(const Series2 &o) { return *this = *this + o; }
	Series2 &operator-=(const Series2 &o) { return *this = *this - o; }

	Series2 scaled(const Rational &c) const;
	Series2 scaled(const MultiPoly &c) const;

	Series2 flip_second() const; // v -> -v
	Series2 swapped() const;     // u <-> v

	bool is_symmetric() const;

	/// exact division: throws when the divisor does not divide to
	/// truncation (nonzero remainder at some total degree)
	Series2 div_exact(const Series2 &b) const;

	/// checks that only even exponents occur in both variables, then
	/// reindexes (2i, 2j) -> (i, j); with negate, scales by (-1)^{i+j}
	Series2 even_reindex(bool negate) const;

	/// first coefficient violating double evenness, or {-1,-1}
	std::pair<int, int> odd_power_offender() const;

	std::string to_string() const;

private:
	std::size_t idx(int i, int j) const;

	RingPtr ring_;
	int order_;
	std::vector<MultiPoly> tri_;
};

/// s(su(t), sv(t)) for univariate arguments with zero constant terms
Series1 substitute_series1(const Series2 &s, const Series1 &su,
                           const Series1 &sv);

/// outer(inner) for univariate outer and bivariate inner with zero constant
/// term
Series2 compose_outer(const Series1 &outer, const Series2 &inner);

/// Reads a polynomial over a ring containing `var` as a series in that
/// variable with coefficients over `coeff_ring` (the remaining variables,
/// matched by name).
Series1 series_in_var(const MultiPoly &p, std::string_view var,
                      const RingPtr &coeff_ring, int order);

/// Bivariate flavor for variables `var_u`, `var_v`.
Series2 series_in_vars(const MultiPoly &p, std::string_view var_u,
                       std::string_view var_v, const RingPtr &coeff_ring,
                       int order);

} // namespace fgl
