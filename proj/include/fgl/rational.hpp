#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace fgl {

/// Arbitrary-precision rational scalar.  Always stored reduced with a
/// positive denominator; the canonical zero is 0/1.
class Rational {
public:
	Rational() : v_(0) {}
	Rational(long n) : v_(n) {}
	Rational(long num, long den) : v_(num, den) { normalize(); }
	explicit Rational(const mpz_class &n) : v_(n) {}
	Rational(const mpz_class &num, const mpz_class &den) : v_(num, den)
	{
		normalize();
	}
	explicit Rational(const mpq_class &q) : v_(q) { v_.canonicalize(); }

	/// Parses "p" or "p/q" in base 10.
	static Rational parse(const std::string &text)
	{
		mpq_class q;
		if (q.set_str(text, 10) != 0)
			throw std::invalid_argument("bad rational literal: " + text);
		q.canonicalize();
		return Rational(q);
	}

	bool is_zero() const { return sgn(v_) == 0; }
	bool is_one() const { return v_ == 1; }
	bool is_integer() const { return v_.get_den() == 1; }
	int sign() const { return sgn(v_); }

	mpz_class numerator() const { return v_.get_num(); }
	mpz_class denominator() const { return v_.get_den(); }

	Rational operator-() const { return Rational(mpq_class(-v_)); }

	Rational &operator+=(const Rational &o)
	{
		v_ += o.v_;
		return *this;
	}
	Rational &operator-=(const Rational &o)
	{
		v_ -= o.v_;
		return *this;
	}
	Rational &operator*=(const Rational &o)
	{
		v_ *= o.v_;
		return *this;
	}
	Rational &operator/=(const Rational &o)
	{
		if (o.is_zero())
			throw std::domain_error("rational division by zero");
		v_ /= o.v_;
		return *this;
	}

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

	friend bool operator==(const Rational &a, const Rational &b)
	{
		return a.v_ == b.v_;
	}
	friend bool operator!=(const Rational &a, const Rational &b)
	{
		return a.v_ != b.v_;
	}
	friend bool operator<(const Rational &a, const Rational &b)
	{
		return a.v_ < b.v_;
	}

	Rational inverse() const
	{
		if (is_zero())
			throw std::domain_error("inverse of zero");
		return Rational(mpq_class(1) / v_);
	}

	Rational pow(unsigned k) const
	{
		mpq_class r(1), b = v_;
		for (; k; k >>= 1)
		{
			if (k & 1)
				r *= b;
			if (k > 1)
				b *= b;
		}
		return Rational(r);
	}

	/// "p" for integers, "p/q" otherwise.
	std::string to_string() const
	{
		if (is_integer())
			return v_.get_num().get_str();
		return v_.get_num().get_str() + "/" + v_.get_den().get_str();
	}

private:
	void normalize()
	{
		if (v_.get_den() == 0)
			throw std::domain_error("zero denominator");
		v_.canonicalize();
	}

	mpq_class v_;
};

inline mpz_class factorial(unsigned n)
{
	mpz_class r;
	mpz_fac_ui(r.get_mpz_t(), n);
	return r;
}

inline mpz_class binomial(unsigned n, unsigned k)
{
	mpz_class r;
	mpz_bin_uiui(r.get_mpz_t(), n, k);
	return r;
}

/// n! / (p_0! p_1! ...), parts must sum to n.
inline mpz_class multinomial(unsigned n, std::span<const unsigned> parts)
{
	mpz_class r = factorial(n);
	unsigned total = 0;
	for (unsigned p : parts)
	{
		r /= factorial(p);
		total += p;
	}
	if (total != n)
		throw std::invalid_argument("multinomial parts do not sum to n");
	return r;
}

} // namespace fgl
