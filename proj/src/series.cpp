#include "fgl/series.hpp"

#include <algorithm>
#include <cassert>

namespace fgl {

Series1::Series1(RingPtr ring, int order) : ring_(std::move(ring)), order_(order)
{
	if (order_ < 0)
		throw std::invalid_argument("series order must be nonnegative");
	coeffs_.assign(std::size_t(order_) + 1, MultiPoly(ring_));
}

Series1 Series1::identity(RingPtr ring, int order)
{
	Series1 s(ring, order);
	if (order >= 1)
		s.coeffs_[1] = MultiPoly::constant(ring, Rational(1));
	return s;
}

Series1 Series1::constant(RingPtr ring, Rational c, int order)
{
	Series1 s(ring, order);
	s.coeffs_[0] = MultiPoly::constant(std::move(ring), std::move(c));
	return s;
}

Series1 Series1::from_coeffs(std::vector<MultiPoly> coeffs)
{
	if (coeffs.empty())
		throw std::invalid_argument("empty coefficient list");
	Series1 s(coeffs[0].ring(), int(coeffs.size()) - 1);
	s.coeffs_ = std::move(coeffs);
	return s;
}

void Series1::set_coeff(int k, MultiPoly p)
{
	if (k < 0 || k > order_)
		throw std::out_of_range("series coefficient index");
	if (!same_ring(p.ring(), ring_))
		throw std::invalid_argument("ring mismatch in series coefficient");
	coeffs_[std::size_t(k)] = std::move(p);
}

Series1 Series1::truncated(int m) const
{
	if (m >= order_)
		return *this;
	Series1 s(ring_, m);
	for (int k = 0; k <= m; ++k)
		s.coeffs_[std::size_t(k)] = coeffs_[std::size_t(k)];
	return s;
}

Series1 Series1::extended(int m) const
{
	if (m <= order_)
		return truncated(m);
	Series1 s(ring_, m);
	for (int k = 0; k <= order_; ++k)
		s.coeffs_[std::size_t(k)] = coeffs_[std::size_t(k)];
	return s;
}

bool Series1::is_zero() const
{
	return std::all_of(coeffs_.begin(), coeffs_.end(),
	                   [](const MultiPoly &p) { return p.is_zero(); });
}

bool Series1::operator==(const Series1 &o) const
{
	if (order_ != o.order_ || !same_ring(ring_, o.ring_))
		return false;
	return coeffs_ == o.coeffs_;
}

Series1 Series1::operator-() const
{
	Series1 s(*this);
	for (auto &c : s.coeffs_)
		c = -c;
	return s;
}

Series1 operator+(const Series1 &a, const Series1 &b)
{
	if (!same_ring(a.ring_, b.ring_))
		throw std::invalid_argument("ring mismatch in series addition");
	Series1 s(a.ring_, std::min(a.order_, b.order_));
	for (int k = 0; k <= s.order_; ++k)
		s.coeffs_[std::size_t(k)] = a.coeff(k) + b.coeff(k);
	return s;
}

Series1 operator-(const Series1 &a, const Series1 &b)
{
	return a + (-b);
}

Series1 operator*(const Series1 &a, const Series1 &b)
{
	if (!same_ring(a.ring_, b.ring_))
		throw std::invalid_argument("ring mismatch in series product");
	Series1 s(a.ring_, std::min(a.order_, b.order_));
	for (int i = 0; i <= std::min(a.order_, s.order_); ++i)
	{
		if (a.coeff(i).is_zero())
			continue;
		for (int j = 0; i + j <= s.order_ && j <= b.order_; ++j)
		{
			if (b.coeff(j).is_zero())
				continue;
			s.coeffs_[std::size_t(i + j)] += a.coeff(i) * b.coeff(j);
		}
	}
	return s;
}

Series1 Series1::scaled(const Rational &c) const
{
	Series1 s(*this);
	for (auto &p : s.coeffs_)
		p.scale(c);
	return s;
}

Series1 Series1::scaled(const MultiPoly &c) const
{
	Series1 s(ring_, order_);
	for (int k = 0; k <= order_; ++k)
		s.coeffs_[std::size_t(k)] = coeffs_[std::size_t(k)] * c;
	return s;
}

Series1 Series1::shifted(int k) const
{
	if (k < 0)
		throw std::invalid_argument("negative series shift");
	Series1 s(ring_, order_);
	for (int i = 0; i + k <= order_; ++i)
		s.coeffs_[std::size_t(i + k)] = coeffs_[std::size_t(i)];
	return s;
}

Series1 Series1::div(const Series1 &b) const
{
	if (!same_ring(ring_, b.ring_))
		throw std::invalid_argument("ring mismatch in series division");
	const MultiPoly &b0 = b.coeff(0);
	if (!b0.is_constant() || b0.is_zero())
		throw std::invalid_argument(
		    "series divisor needs a nonzero rational constant term");
	Rational inv = b0.constant_value().inverse();
	int n = std::min(order_, b.order_);
	Series1 q(ring_, n);
	for (int k = 0; k <= n; ++k)
	{
		MultiPoly acc = coeff(k);
		for (int j = 1; j <= k; ++j)
		{
			if (b.coeff(j).is_zero() || q.coeff(k - j).is_zero())
				continue;
			acc -= b.coeff(j) * q.coeff(k - j);
		}
		acc.scale(inv);
		q.coeffs_[std::size_t(k)] = std::move(acc);
	}
	return q;
}

Series1 Series1::inverse() const
{
	return constant(ring_, Rational(1), order_).div(*this);
}

Series1 Series1::sqrt() const
{
	const MultiPoly one = MultiPoly::constant(ring_, Rational(1));
	if (coeff(0) != one)
		throw std::invalid_argument("series sqrt needs constant term 1");
	Series1 r(ring_, order_);
	r.coeffs_[0] = one;
	const Rational half(1, 2);
	for (int k = 1; k <= order_; ++k)
	{
		MultiPoly acc = coeff(k);
		for (int j = 1; j < k; ++j)
		{
			if (r.coeff(j).is_zero() || r.coeff(k - j).is_zero())
				continue;
			acc -= r.coeff(j) * r.coeff(k - j);
		}
		acc.scale(half);
		r.coeffs_[std::size_t(k)] = std::move(acc);
	}
	return r;
}

Series1 Series1::compose(const Series1 &inner) const
{
	if (!same_ring(ring_, inner.ring_))
		throw std::invalid_argument("ring mismatch in series composition");
	if (!inner.coeff(0).is_zero())
		throw std::invalid_argument(
		    "series composition needs zero inner constant term");
	int n = std::min(order_, inner.order_);
	Series1 in = inner.truncated(n);
	// Horner from the top coefficient down
	Series1 acc(ring_, n);
	for (int k = order_; k >= 0; --k)
	{
		acc = acc * in;
		acc.coeffs_[0] += coeff(k);
	}
	return acc;
}

Series1 Series1::revert() const
{
	if (!coeff(0).is_zero())
		throw std::invalid_argument("reversion needs zero constant term");
	const MultiPoly one = MultiPoly::constant(ring_, Rational(1));
	if (order_ < 1 || coeff(1) != one)
		throw std::invalid_argument("reversion needs linear coefficient 1");
	const int n = order_;
	Series1 b = identity(ring_, n);
	// triangular solve of this(b(x)) = x; pw[j][k] = [x^k] b^j, filled
	// degree by degree so that entries only ever reference known
	// coefficients of b
	std::vector<std::vector<MultiPoly>> pw(
	    std::size_t(n) + 1,
	    std::vector<MultiPoly>(std::size_t(n) + 1, MultiPoly(ring_)));
	if (n >= 1)
		pw[1][1] = one;
	for (int k = 2; k <= n; ++k)
	{
		// [x^k] b^j for j >= 2 uses b-coefficients of index <= k-1 only
		for (int j = 2; j <= k; ++j)
		{
			MultiPoly acc(ring_);
			for (int i = 1; i <= k - j + 1; ++i)
			{
				if (b.coeff(i).is_zero() || pw[std::size_t(j - 1)][std::size_t(k - i)].is_zero())
					continue;
				acc += b.coeff(i) * pw[std::size_t(j - 1)][std::size_t(k - i)];
			}
			pw[std::size_t(j)][std::size_t(k)] = std::move(acc);
		}
		MultiPoly c(ring_);
		for (int j = 2; j <= k; ++j)
		{
			if (coeff(j).is_zero() || pw[std::size_t(j)][std::size_t(k)].is_zero())
				continue;
			c += coeff(j) * pw[std::size_t(j)][std::size_t(k)];
		}
		b.coeffs_[std::size_t(k)] = -c;
		pw[1][std::size_t(k)] = b.coeffs_[std::size_t(k)];
	}
	return b;
}

Series1 Series1::exp() const
{
	if (!coeff(0).is_zero())
		throw std::invalid_argument("series exp needs zero constant term");
	// e' = a' e, solved termwise: k e_k = sum_{j=1}^{k} j a_j e_{k-j}
	Series1 e(ring_, order_);
	e.coeffs_[0] = MultiPoly::constant(ring_, Rational(1));
	for (int k = 1; k <= order_; ++k)
	{
		MultiPoly acc(ring_);
		for (int j = 1; j <= k; ++j)
		{
			if (coeff(j).is_zero() || e.coeff(k - j).is_zero())
				continue;
			acc += (coeff(j) * Rational(j)) * e.coeff(k - j);
		}
		acc.scale(Rational(1, k));
		e.coeffs_[std::size_t(k)] = std::move(acc);
	}
	return e;
}

Series1 Series1::log() const
{
	const MultiPoly one = MultiPoly::constant(ring_, Rational(1));
	if (coeff(0) != one)
		throw std::invalid_argument("series log needs constant term 1");
	// log(a) = integral of a'/a
	return derivative().div(truncated(order_ - 1)).integral().extended(order_);
}

Series1 Series1::derivative() const
{
	if (order_ == 0)
		return Series1(ring_, 0);
	Series1 d(ring_, order_ - 1);
	for (int k = 1; k <= order_; ++k)
		d.coeffs_[std::size_t(k - 1)] = coeffs_[std::size_t(k)] * Rational(k);
	return d;
}

Series1 Series1::integral() const
{
	Series1 s(ring_, order_ + 1);
	for (int k = 0; k <= order_; ++k)
		s.coeffs_[std::size_t(k + 1)] =
		    coeffs_[std::size_t(k)] * Rational(1, k + 1);
	return s;
}

Series1::ParityReport Series1::odd_check() const
{
	for (int k = 0; k <= order_; k += 2)
		if (!coeff(k).is_zero())
			return {false, k};
	return {};
}

Series1::ParityReport Series1::even_check() const
{
	for (int k = 1; k <= order_; k += 2)
		if (!coeff(k).is_zero())
			return {false, k};
	return {};
}

std::string Series1::to_string() const
{
	std::string out;
	bool empty = true;
	for (int k = 0; k <= order_; ++k)
	{
		if (coeff(k).is_zero())
			continue;
		if (!empty)
			out += " + ";
		out += "(" + coeff(k).to_string() + ")";
		if (k == 1)
			out += "*x";
		else if (k > 1)
			out += "*x^" + std::to_string(k);
		empty = false;
	}
	if (empty)
		out = "0";
	out += " + O(x^" + std::to_string(order_ + 1) + ")";
	return out;
}

// ---------------------------------------------------------------------------

Series2::Series2(RingPtr ring, int order) : ring_(std::move(ring)), order_(order)
{
	if (order_ < 0)
		throw std::invalid_argument("series order must be nonnegative");
	tri_.assign(std::size_t(order_ + 1) * std::size_t(order_ + 2) / 2,
	            MultiPoly(ring_));
}

std::size_t Series2::idx(int i, int j) const
{
	int d = i + j;
	return std::size_t(d) * std::size_t(d + 1) / 2 + std::size_t(j);
}

Series2 Series2::from_series1(const Series1 &s, int which)
{
	Series2 r(s.ring(), s.order());
	for (int k = 0; k <= s.order(); ++k)
	{
		if (s.coeff(k).is_zero())
			continue;
		if (which == 0)
			r.set_coeff(k, 0, s.coeff(k));
		else
			r.set_coeff(0, k, s.coeff(k));
	}
	return r;
}

Series2 Series2::variable(RingPtr ring, int which, int order)
{
	Series2 r(ring, order);
	if (order >= 1)
	{
		MultiPoly one = MultiPoly::constant(ring, Rational(1));
		if (which == 0)
			r.set_coeff(1, 0, std::move(one));
		else
			r.set_coeff(0, 1, std::move(one));
	}
	return r;
}

const MultiPoly &Series2::coeff(int i, int j) const
{
	if (i < 0 || j < 0 || i + j > order_)
		throw std::out_of_range("bivariate coefficient index");
	return tri_[idx(i, j)];
}

void Series2::set_coeff(int i, int j, MultiPoly p)
{
	if (i < 0 || j < 0 || i + j > order_)
		throw std::out_of_range("bivariate coefficient index");
	if (!same_ring(p.ring(), ring_))
		throw std::invalid_argument("ring mismatch in series coefficient");
	tri_[idx(i, j)] = std::move(p);
}

Series2 Series2::truncated(int m) const
{
	if (m >= order_)
		return *this;
	Series2 s(ring_, m);
	for (int d = 0; d <= m; ++d)
		for (int j = 0; j <= d; ++j)
			s.tri_[s.idx(d - j, j)] = tri_[idx(d - j, j)];
	return s;
}

bool Series2::is_zero() const
{
	return std::all_of(tri_.begin(), tri_.end(),
	                   [](const MultiPoly &p) { return p.is_zero(); });
}

bool Series2::operator==(const Series2 &o) const
{
	if (order_ != o.order_ || !same_ring(ring_, o.ring_))
		return false;
	return tri_ == o.tri_;
}

Series2 Series2::operator-() const
{
	Series2 s(*this);
	for (auto &c : s.tri_)
		c = -c;
	return s;
}

Series2 operator+(const Series2 &a, const Series2 &b)
{
	if (!same_ring(a.ring_, b.ring_))
		throw std::invalid_argument("ring mismatch in series addition");
	Series2 s(a.ring_, std::min(a.order_, b.order_));
	for (int d = 0; d <= s.order_; ++d)
		for (int j = 0; j <= d; ++j)
			s.tri_[s.idx(d - j, j)] = a.coeff(d - j, j) + b.coeff(d - j, j);
	return s;
}

Series2 operator-(const Series2 &a, const Series2 &b)
{
	return a + (-b);
}

Series2 operator*(const Series2 &a, const Series2 &b)
{
	if (!same_ring(a.ring_, b.ring_))
		throw std::invalid_argument("ring mismatch in series product");
	Series2 s(a.ring_, std::min(a.order_, b.order_));
	for (int da = 0; da <= std::min(a.order_, s.order_); ++da)
		for (int ja = 0; ja <= da; ++ja)
		{
			const MultiPoly &ca = a.coeff(da - ja, ja);
			if (ca.is_zero())
				continue;
			for (int db = 0; da + db <= s.order_ && db <= b.order_; ++db)
				for (int jb = 0; jb <= db; ++jb)
				{
					const MultiPoly &cb = b.coeff(db - jb, jb);
					if (cb.is_zero())
						continue;
					s.tri_[s.idx(da - ja + db - jb, ja + jb)] += ca * cb;
				}
		}
	return s;
}

Series2 Series2::scaled(const Rational &c) const
{
	Series2 s(*this);
	for (auto &p : s.tri_)
		p.scale(c);
	return s;
}

Series2 Series2::scaled(const MultiPoly &c) const
{
	Series2 s(ring_, order_);
	for (std::size_t k = 0; k < tri_.size(); ++k)
		s.tri_[k] = tri_[k] * c;
	return s;
}

Series2 Series2::flip_second() const
{
	Series2 s(*this);
	for (int d = 0; d <= order_; ++d)
		for (int j = 1; j <= d; j += 2)
			s.tri_[idx(d - j, j)] = -s.tri_[idx(d - j, j)];
	return s;
}

Series2 Series2::swapped() const
{
	Series2 s(ring_, order_);
	for (int d = 0; d <= order_; ++d)
		for (int j = 0; j <= d; ++j)
			s.tri_[s.idx(j, d - j)] = tri_[idx(d - j, j)];
	return s;
}

bool Series2::is_symmetric() const
{
	for (int d = 0; d <= order_; ++d)
		for (int j = 0; 2 * j <= d; ++j)
			if (coeff(d - j, j) != coeff(j, d - j))
				return false;
	return true;
}

namespace {

// divides a homogeneous bivariate layer (coefficients by v-exponent) by the
// lowest homogeneous layer of the divisor; lead coefficient of the divisor
// must be a nonzero rational
struct HomogeneousDivider
{
	// b[j] = coefficient of u^{m-j} v^j in the divisor's lowest layer
	std::vector<MultiPoly> b;
	int m;        // total degree of the layer
	int lead;     // smallest j with b[j] != 0
	Rational inv; // inverse of the lead rational coefficient

	HomogeneousDivider(const Series2 &divisor, int degree) : m(degree)
	{
		b.reserve(std::size_t(m) + 1);
		for (int j = 0; j <= m; ++j)
			b.push_back(divisor.coeff(m - j, j));
		lead = -1;
		for (int j = 0; j <= m; ++j)
			if (!b[std::size_t(j)].is_zero())
			{
				lead = j;
				break;
			}
		if (lead < 0)
			throw std::invalid_argument("zero divisor layer");
		const MultiPoly &lc = b[std::size_t(lead)];
		if (!lc.is_constant())
			throw std::invalid_argument(
			    "divisor lead coefficient must be rational");
		inv = lc.constant_value().inverse();
	}

	// a has degree m + k; quotient layer has degree k; throws on remainder
	std::vector<MultiPoly> divide(std::vector<MultiPoly> a, int k) const
	{
		std::vector<MultiPoly> q(std::size_t(k) + 1,
		                         MultiPoly(b[0].ring()));
		// eliminate from the lowest v-exponent upward
		for (int j = 0; j <= k; ++j)
		{
			MultiPoly t = a[std::size_t(j + lead)];
			t.scale(inv);
			if (t.is_zero())
				continue;
			q[std::size_t(j)] = t;
			for (int i = lead; i <= m; ++i)
			{
				if (b[std::size_t(i)].is_zero())
					continue;
				a[std::size_t(j + i)] -= t * b[std::size_t(i)];
			}
		}
		for (const auto &rest : a)
			if (!rest.is_zero())
				throw std::domain_error(
				    "inexact bivariate series division");
		return q;
	}
};

} // namespace

Series2 Series2::div_exact(const Series2 &b) const
{
	if (!same_ring(ring_, b.ring_))
		throw std::invalid_argument("ring mismatch in series division");
	int m = -1;
	for (int d = 0; d <= b.order_ && m < 0; ++d)
		for (int j = 0; j <= d; ++j)
			if (!b.coeff(d - j, j).is_zero())
			{
				m = d;
				break;
			}
	if (m < 0)
		throw std::invalid_argument("division by zero series");
	HomogeneousDivider div(b, m);
	int n = std::min(order_, b.order_) - m;
	if (n < 0)
		throw std::invalid_argument("divisor order too low");
	Series2 q(ring_, n);
	// layer by layer: A_{m+k} = sum_{i} Q_{k-i} B_{m+i}
	for (int k = 0; k <= n; ++k)
	{
		std::vector<MultiPoly> layer;
		layer.reserve(std::size_t(m + k) + 1);
		for (int j = 0; j <= m + k; ++j)
			layer.push_back(coeff(m + k - j, j));
		for (int i = 1; i <= k; ++i)
		{
			int bd = m + i;
			if (bd > b.order_)
				break;
			for (int jq = 0; jq <= k - i; ++jq)
			{
				const MultiPoly &qc = q.coeff(k - i - jq, jq);
				if (qc.is_zero())
					continue;
				for (int jb = 0; jb <= bd; ++jb)
				{
					const MultiPoly &bc = b.coeff(bd - jb, jb);
					if (bc.is_zero())
						continue;
					layer[std::size_t(jq + jb)] -= qc * bc;
				}
			}
		}
		auto qlayer = div.divide(std::move(layer), k);
		for (int j = 0; j <= k; ++j)
			if (!qlayer[std::size_t(j)].is_zero())
				q.set_coeff(k - j, j, std::move(qlayer[std::size_t(j)]));
	}
	return q;
}

Series2 Series2::even_reindex(bool negate) const
{
	auto bad = odd_power_offender();
	if (bad.first >= 0)
		throw std::domain_error(
		    "odd power leakage at (" + std::to_string(bad.first) + ", " +
		    std::to_string(bad.second) + ")");
	Series2 s(ring_, order_ / 2);
	for (int d = 0; d <= s.order(); ++d)
		for (int j = 0; j <= d; ++j)
		{
			MultiPoly c = coeff(2 * (d - j), 2 * j);
			if (negate && d % 2 == 1)
				c = -c;
			s.set_coeff(d - j, j, std::move(c));
		}
	return s;
}

std::pair<int, int> Series2::odd_power_offender() const
{
	for (int d = 0; d <= order_; ++d)
		for (int j = 0; j <= d; ++j)
			if ((j % 2 != 0 || (d - j) % 2 != 0) && !coeff(d - j, j).is_zero())
				return {d - j, j};
	return {-1, -1};
}

std::string Series2::to_string() const
{
	std::string out;
	bool empty = true;
	for (int d = 0; d <= order_; ++d)
		for (int j = 0; j <= d; ++j)
		{
			const MultiPoly &c = coeff(d - j, j);
			if (c.is_zero())
				continue;
			if (!empty)
				out += " + ";
			out += "(" + c.to_string() + ")";
			if (d - j > 0)
				out += "*u" + (d - j > 1 ? "^" + std::to_string(d - j)
				                         : std::string());
			if (j > 0)
				out += "*v" + (j > 1 ? "^" + std::to_string(j)
				                     : std::string());
			empty = false;
		}
	if (empty)
		out = "0";
	out += " + O(deg " + std::to_string(order_ + 1) + ")";
	return out;
}

Series1 substitute_series1(const Series2 &s, const Series1 &su,
                           const Series1 &sv)
{
	if (!same_ring(s.ring(), su.ring()) || !same_ring(s.ring(), sv.ring()))
		throw std::invalid_argument("ring mismatch in series substitution");
	if (!su.coeff(0).is_zero() || !sv.coeff(0).is_zero())
		throw std::invalid_argument(
		    "series substitution needs zero constant terms");
	int n = std::min({s.order(), su.order(), sv.order()});
	Series1 acc(s.ring(), n);
	// power tables
	std::vector<Series1> pu{Series1::constant(s.ring(), Rational(1), n)};
	std::vector<Series1> pv{Series1::constant(s.ring(), Rational(1), n)};
	for (int k = 1; k <= s.order(); ++k)
	{
		pu.push_back(pu.back() * su.truncated(n));
		pv.push_back(pv.back() * sv.truncated(n));
	}
	for (int d = 0; d <= s.order(); ++d)
		for (int j = 0; j <= d; ++j)
		{
			const MultiPoly &c = s.coeff(d - j, j);
			if (c.is_zero())
				continue;
			acc += (pu[std::size_t(d - j)] * pv[std::size_t(j)]).scaled(c);
		}
	return acc;
}

Series2 compose_outer(const Series1 &outer, const Series2 &inner)
{
	if (!same_ring(outer.ring(), inner.ring()))
		throw std::invalid_argument("ring mismatch in series composition");
	if (!inner.coeff(0, 0).is_zero())
		throw std::invalid_argument(
		    "series composition needs zero inner constant term");
	Series2 acc(outer.ring(), inner.order());
	for (int k = outer.order(); k >= 0; --k)
	{
		acc = acc * inner;
		if (!outer.coeff(k).is_zero())
		{
			MultiPoly c0 = acc.coeff(0, 0) + outer.coeff(k);
			acc.set_coeff(0, 0, std::move(c0));
		}
	}
	return acc;
}

namespace {

// rebuilds the monomial with packed key `key` of p's ring over the
// coefficient ring, matching variables by name
MultiPoly relocate_monomial(const MultiPoly &p, std::uint64_t key,
                            const RingPtr &coeff_ring, const Rational &c)
{
	std::vector<unsigned> exps(coeff_ring->arity(), 0);
	for (std::size_t i = 0; i < p.ring()->arity(); ++i)
	{
		unsigned e = p.ring()->exponent(key, i);
		if (e == 0)
			continue;
		auto idx = coeff_ring->index_of(p.ring()->var(i).name);
		if (!idx)
			throw std::invalid_argument(
			    "coefficient ring misses variable " + p.ring()->var(i).name);
		exps[*idx] = e;
	}
	return MultiPoly::monomial(coeff_ring, exps, c);
}

} // namespace

Series1 series_in_var(const MultiPoly &p, std::string_view var,
                      const RingPtr &coeff_ring, int order)
{
	auto vi = p.ring()->index_of(var);
	if (!vi)
		throw std::invalid_argument("no such variable: " + std::string(var));
	Series1 s(coeff_ring, order);
	for (const auto &[key, c] : p.terms())
	{
		unsigned e = p.ring()->exponent(key, *vi);
		if (int(e) > order)
			continue;
		std::uint64_t rest = key - p.ring()->pack_single(*vi, e);
		MultiPoly mono = relocate_monomial(p, rest, coeff_ring, c);
		s.set_coeff(int(e), s.coeff(int(e)) + mono);
	}
	return s;
}

Series2 series_in_vars(const MultiPoly &p, std::string_view var_u,
                       std::string_view var_v, const RingPtr &coeff_ring,
                       int order)
{
	auto ui = p.ring()->index_of(var_u);
	auto vi = p.ring()->index_of(var_v);
	if (!ui || !vi)
		throw std::invalid_argument("no such variable pair");
	Series2 s(coeff_ring, order);
	for (const auto &[key, c] : p.terms())
	{
		unsigned eu = p.ring()->exponent(key, *ui);
		unsigned ev = p.ring()->exponent(key, *vi);
		if (int(eu + ev) > order)
			continue;
		std::uint64_t rest = key - p.ring()->pack_single(*ui, eu) -
		                     p.ring()->pack_single(*vi, ev);
		MultiPoly mono = relocate_monomial(p, rest, coeff_ring, c);
		s.set_coeff(int(eu), int(ev), s.coeff(int(eu), int(ev)) + mono);
	}
	return s;
}

} // namespace fgl
