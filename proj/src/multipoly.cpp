#include "fgl/multipoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace fgl {

PolyRing::PolyRing(std::vector<VarSpec> vars) : vars_(std::move(vars))
{
	for (std::size_t i = 0; i < vars_.size(); ++i)
		for (std::size_t j = i + 1; j < vars_.size(); ++j)
			if (vars_[i].name == vars_[j].name)
				throw std::invalid_argument("duplicate ring variable: " +
				                            vars_[i].name);
	if (!vars_.empty())
	{
		bits_ = 64 / static_cast<unsigned>(vars_.size());
		payload_max_ = (1u << (bits_ - 1)) - 1;
		for (std::size_t i = 0; i < vars_.size(); ++i)
			guard_ |= std::uint64_t(1) << (i * bits_ + bits_ - 1);
	}
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const
{
	for (std::size_t i = 0; i < vars_.size(); ++i)
		if (vars_[i].name == name)
			return i;
	return std::nullopt;
}

std::uint64_t PolyRing::pack(std::span<const unsigned> exps) const
{
	if (exps.size() != vars_.size())
		throw std::invalid_argument("exponent vector arity mismatch");
	std::uint64_t key = 0;
	for (std::size_t i = 0; i < exps.size(); ++i)
		key |= pack_single(i, exps[i]);
	return key;
}

std::uint64_t PolyRing::pack_single(std::size_t var, unsigned exp) const
{
	if (var >= vars_.size())
		throw std::invalid_argument("variable index out of range");
	if (exp > payload_max_)
		throw std::overflow_error("monomial exponent exceeds ring capacity");
	// variable 0 occupies the most significant field
	return std::uint64_t(exp) << ((vars_.size() - 1 - var) * bits_);
}

void PolyRing::unpack(std::uint64_t key, std::span<unsigned> out) const
{
	assert(out.size() == vars_.size());
	for (std::size_t i = 0; i < vars_.size(); ++i)
		out[i] = exponent(key, i);
}

unsigned PolyRing::exponent(std::uint64_t key, std::size_t i) const
{
	const std::uint64_t mask = (std::uint64_t(1) << bits_) - 1;
	return static_cast<unsigned>(
	    (key >> ((vars_.size() - 1 - i) * bits_)) & mask);
}

unsigned PolyRing::total_degree(std::uint64_t key) const
{
	unsigned d = 0;
	for (std::size_t i = 0; i < vars_.size(); ++i)
		d += exponent(key, i);
	return d;
}

long PolyRing::weighted_degree(std::uint64_t key) const
{
	long d = 0;
	for (std::size_t i = 0; i < vars_.size(); ++i)
		d += long(exponent(key, i)) * long(vars_[i].weight);
	return d;
}

long PolyRing::weighted_degree(std::uint64_t key,
                               std::span<const long> weights) const
{
	if (weights.size() != vars_.size())
		throw std::invalid_argument("weight functional arity mismatch");
	long d = 0;
	for (std::size_t i = 0; i < vars_.size(); ++i)
		d += long(exponent(key, i)) * weights[i];
	return d;
}

std::string PolyRing::monomial_string(std::uint64_t key) const
{
	std::string s;
	for (std::size_t i = 0; i < vars_.size(); ++i)
	{
		unsigned e = exponent(key, i);
		if (e == 0)
			continue;
		if (!s.empty())
			s += "*";
		s += vars_[i].name;
		if (e > 1)
			s += "^" + std::to_string(e);
	}
	return s;
}

RingPtr make_ring(std::vector<VarSpec> vars)
{
	return std::make_shared<const PolyRing>(std::move(vars));
}

// ---------------------------------------------------------------------------

MultiPoly MultiPoly::constant(RingPtr ring, Rational c)
{
	MultiPoly p(std::move(ring));
	if (!c.is_zero())
		p.terms_.emplace_back(0, std::move(c));
	return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t var, unsigned exp)
{
	MultiPoly p(ring);
	if (exp == 0)
		return constant(std::move(ring), Rational(1));
	p.terms_.emplace_back(ring->pack_single(var, exp), Rational(1));
	return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, std::string_view name,
                              unsigned exp)
{
	auto idx = ring->index_of(name);
	if (!idx)
		throw std::invalid_argument("no such ring variable: " +
		                            std::string(name));
	return variable(std::move(ring), *idx, exp);
}

MultiPoly MultiPoly::monomial(RingPtr ring, std::span<const unsigned> exps,
                              Rational c)
{
	MultiPoly p(ring);
	if (!c.is_zero())
		p.terms_.emplace_back(ring->pack(exps), std::move(c));
	return p;
}

Rational MultiPoly::constant_value() const
{
	if (terms_.empty() || terms_[0].first != 0)
		return Rational(0);
	return terms_[0].second;
}

Rational MultiPoly::coefficient(std::span<const unsigned> exps) const
{
	return coefficient_key(ring_->pack(exps));
}

Rational MultiPoly::coefficient_key(std::uint64_t key) const
{
	auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
	                           [](const Term &t, std::uint64_t k)
	                           { return t.first < k; });
	if (it != terms_.end() && it->first == key)
		return it->second;
	return Rational(0);
}

unsigned MultiPoly::degree_in(std::size_t var) const
{
	unsigned d = 0;
	for (const auto &[key, c] : terms_)
		d = std::max(d, ring_->exponent(key, var));
	return d;
}

unsigned MultiPoly::total_degree() const
{
	unsigned d = 0;
	for (const auto &[key, c] : terms_)
		d = std::max(d, ring_->total_degree(key));
	return d;
}

MultiPoly MultiPoly::operator-() const
{
	MultiPoly r(*this);
	for (auto &[key, c] : r.terms_)
		c = -c;
	return r;
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o)
{
	if (!same_ring(ring_, o.ring_))
		throw std::invalid_argument("ring mismatch in polynomial addition");
	if (o.terms_.empty())
		return *this;
	if (terms_.empty())
	{
		terms_ = o.terms_;
		return *this;
	}
	std::vector<Term> merged;
	merged.reserve(terms_.size() + o.terms_.size());
	auto a = terms_.begin();
	auto b = o.terms_.begin();
	const auto ae = terms_.end();
	const auto be = o.terms_.end();
	while (a != ae && b != be)
	{
		if (a->first < b->first)
			merged.push_back(std::move(*a++));
		else if (b->first < a->first)
			merged.push_back(*b++);
		else
		{
			Rational c = a->second + b->second;
			if (!c.is_zero())
				merged.emplace_back(a->first, std::move(c));
			++a, ++b;
		}
	}
	merged.insert(merged.end(), a, ae);
	merged.insert(merged.end(), b, be);
	terms_ = std::move(merged);
	return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o)
{
	return *this += -o;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b)
{
	if (!same_ring(a.ring_, b.ring_))
		throw std::invalid_argument("ring mismatch in polynomial product");
	MultiPoly r(a.ring_);
	if (a.terms_.empty() || b.terms_.empty())
		return r;
	const std::uint64_t guard = a.ring_->guard_mask();
	std::vector<MultiPoly::Term> raw;
	raw.reserve(a.terms_.size() * b.terms_.size());
	for (const auto &[ka, ca] : a.terms_)
		for (const auto &[kb, cb] : b.terms_)
		{
			const std::uint64_t key = ka + kb;
			if (key & guard)
				throw std::overflow_error(
				    "monomial exponent overflow in product");
			raw.emplace_back(key, ca * cb);
		}
	r.normalize_raw(std::move(raw));
	return r;
}

MultiPoly &MultiPoly::scale(const Rational &c)
{
	if (c.is_zero())
	{
		terms_.clear();
		return *this;
	}
	for (auto &[key, v] : terms_)
		v *= c;
	return *this;
}

MultiPoly MultiPoly::pow(unsigned k) const
{
	MultiPoly r = constant(ring_, Rational(1));
	MultiPoly b = *this;
	for (; k; k >>= 1)
	{
		if (k & 1)
			r = r * b;
		if (k > 1)
			b = b * b;
	}
	return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const
{
	std::vector<Term> raw;
	raw.reserve(terms_.size());
	for (const auto &[key, c] : terms_)
	{
		unsigned e = ring_->exponent(key, var);
		if (e == 0)
			continue;
		std::uint64_t nk = key - ring_->pack_single(var, 1);
		raw.emplace_back(nk, c * Rational(long(e)));
	}
	MultiPoly r(ring_);
	r.normalize_raw(std::move(raw));
	return r;
}

MultiPoly MultiPoly::integral(std::size_t var) const
{
	std::vector<Term> raw;
	raw.reserve(terms_.size());
	for (const auto &[key, c] : terms_)
	{
		unsigned e = ring_->exponent(key, var);
		std::uint64_t nk = key + ring_->pack_single(var, 1);
		if (nk & ring_->guard_mask())
			throw std::overflow_error("monomial exponent overflow in integral");
		raw.emplace_back(nk, c / Rational(long(e) + 1));
	}
	MultiPoly r(ring_);
	r.normalize_raw(std::move(raw));
	return r;
}

bool MultiPoly::operator==(const MultiPoly &o) const
{
	return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

bool MultiPoly::has_integer_coefficients() const
{
	return std::all_of(terms_.begin(), terms_.end(),
	                   [](const Term &t) { return t.second.is_integer(); });
}

MultiPoly MultiPoly::from_raw_terms(RingPtr ring, std::vector<Term> raw)
{
	MultiPoly p(std::move(ring));
	p.normalize_raw(std::move(raw));
	return p;
}

void MultiPoly::normalize_raw(std::vector<Term> &&raw)
{
	std::sort(raw.begin(), raw.end(),
	          [](const Term &x, const Term &y) { return x.first < y.first; });
	terms_.clear();
	for (auto &t : raw)
	{
		if (!terms_.empty() && terms_.back().first == t.first)
			terms_.back().second += t.second;
		else
			terms_.push_back(std::move(t));
		if (terms_.back().second.is_zero())
			terms_.pop_back();
	}
}

std::string MultiPoly::to_string() const
{
	if (terms_.empty())
		return "0";
	// descending graded-lex: total degree first, then packed key
	std::vector<const Term *> order;
	order.reserve(terms_.size());
	for (const auto &t : terms_)
		order.push_back(&t);
	std::sort(order.begin(), order.end(),
	          [&](const Term *x, const Term *y)
	          {
		          unsigned dx = ring_->total_degree(x->first);
		          unsigned dy = ring_->total_degree(y->first);
		          if (dx != dy)
			          return dx > dy;
		          return x->first > y->first;
	          });
	std::string out;
	bool first = true;
	for (const Term *t : order)
	{
		Rational c = t->second;
		std::string mono = ring_->monomial_string(t->first);
		bool neg = c.sign() < 0;
		if (first)
		{
			if (neg)
				out += "-";
			first = false;
		}
		else
			out += neg ? " - " : " + ";
		Rational a = neg ? -c : c;
		if (mono.empty())
			out += a.to_string();
		else if (a.is_one())
			out += mono;
		else
			out += a.to_string() + "*" + mono;
	}
	return out;
}

// ---------------------------------------------------------------------------

WeightReport weight_of(const MultiPoly &p)
{
	std::vector<long> w(p.ring()->arity());
	for (std::size_t i = 0; i < w.size(); ++i)
		w[i] = long(p.ring()->var(i).weight);
	return weight_of(p, w);
}

WeightReport weight_of(const MultiPoly &p, std::span<const long> weights)
{
	WeightReport rep;
	bool have = false;
	std::uint64_t first_key = 0;
	for (const auto &[key, c] : p.terms())
	{
		long w = p.ring()->weighted_degree(key, weights);
		if (!have)
		{
			rep.weight = w;
			first_key = key;
			have = true;
		}
		else if (w != rep.weight)
		{
			rep.homogeneous = false;
			rep.detail = "terms " + p.ring()->monomial_string(first_key) +
			             " (weight " + std::to_string(rep.weight) + ") and " +
			             p.ring()->monomial_string(key) + " (weight " +
			             std::to_string(w) + ") differ";
			return rep;
		}
	}
	return rep;
}

namespace {

// powers of each binding image, memoized per call
struct PowerCache
{
	const MultiPoly *base;
	std::vector<MultiPoly> pows; // pows[k] = base^k, filled on demand

	const MultiPoly &get(unsigned e)
	{
		while (pows.size() <= e)
		{
			if (pows.empty())
				pows.push_back(
				    MultiPoly::constant(base->ring(), Rational(1)));
			else
				pows.push_back(pows.back() * *base);
		}
		return pows[e];
	}
};

MultiPoly truncate_tracked(const MultiPoly &p,
                           std::span<const std::size_t> tracked,
                           unsigned max_degree)
{
	std::vector<MultiPoly::Term> raw;
	raw.reserve(p.size());
	for (const auto &[key, c] : p.terms())
	{
		unsigned d = 0;
		for (std::size_t v : tracked)
			d += p.ring()->exponent(key, v);
		if (d <= max_degree)
			raw.emplace_back(key, c);
	}
	return MultiPoly::from_raw_terms(p.ring(), std::move(raw));
}

MultiPoly substitute_impl(const MultiPoly &p, const RingPtr &target,
                          const std::map<std::size_t, MultiPoly> &bindings,
                          std::span<const std::size_t> tracked,
                          unsigned max_degree, bool truncate)
{
	// identity images for unbound variables, by name
	std::vector<MultiPoly> images;
	images.reserve(p.ring()->arity());
	for (std::size_t i = 0; i < p.ring()->arity(); ++i)
	{
		auto it = bindings.find(i);
		if (it != bindings.end())
		{
			if (!same_ring(it->second.ring(), target))
				throw std::invalid_argument(
				    "substitution image over wrong ring");
			images.push_back(it->second);
		}
		else
		{
			auto idx = target->index_of(p.ring()->var(i).name);
			if (!idx)
				throw std::invalid_argument(
				    "unbound variable absent from target ring: " +
				    p.ring()->var(i).name);
			images.push_back(MultiPoly::variable(target, *idx));
		}
	}

	std::vector<PowerCache> cache(images.size());
	for (std::size_t i = 0; i < images.size(); ++i)
		cache[i].base = &images[i];

	MultiPoly out(target);
	for (const auto &[key, c] : p.terms())
	{
		MultiPoly term = MultiPoly::constant(target, c);
		for (std::size_t i = 0; i < images.size(); ++i)
		{
			unsigned e = p.ring()->exponent(key, i);
			if (e == 0)
				continue;
			term = term * cache[i].get(e);
			if (truncate)
				term = truncate_tracked(term, tracked, max_degree);
			if (term.is_zero())
				break;
		}
		out += term;
	}
	return out;
}

} // namespace

MultiPoly substitute(const MultiPoly &p, const RingPtr &target,
                     const std::map<std::size_t, MultiPoly> &bindings)
{
	return substitute_impl(p, target, bindings, {}, 0, false);
}

MultiPoly substitute_truncated(const MultiPoly &p, const RingPtr &target,
                               const std::map<std::size_t, MultiPoly> &bindings,
                               std::span<const std::size_t> tracked,
                               unsigned max_degree)
{
	return substitute_impl(p, target, bindings, tracked, max_degree, true);
}

MultiPoly mul_truncated(const MultiPoly &a, const MultiPoly &b,
                        std::span<const std::size_t> tracked,
                        unsigned max_degree)
{
	return truncate_tracked(a * b, tracked, max_degree);
}

// ---------------------------------------------------------------------------

RelationRing::RelationRing(RingPtr base, std::string_view var, unsigned power,
                           MultiPoly image)
    : base_(std::move(base)), power_(power), image_(std::move(image))
{
	auto idx = base_->index_of(var);
	if (!idx)
		throw std::invalid_argument("relation variable absent from ring: " +
		                            std::string(var));
	var_ = *idx;
	if (power_ == 0)
		throw std::invalid_argument("relation power must be positive");
	if (!same_ring(image_.ring(), base_))
		throw std::invalid_argument("relation image over wrong ring");
	if (image_.degree_in(var_) >= power_)
		throw std::invalid_argument(
		    "relation image must lower the rewritten exponent");
}

MultiPoly RelationRing::reduce(MultiPoly p) const
{
	if (!same_ring(p.ring(), base_))
		throw std::invalid_argument("ring mismatch in reduction");
	for (;;)
	{
		std::vector<MultiPoly::Term> done, todo;
		for (const auto &[key, c] : p.terms())
		{
			if (base_->exponent(key, var_) >= power_)
				todo.emplace_back(key, c);
			else
				done.emplace_back(key, c);
		}
		if (todo.empty())
			return p;
		MultiPoly acc = MultiPoly::from_raw_terms(base_, std::move(done));
		for (const auto &[key, c] : todo)
		{
			std::uint64_t rest = key - base_->pack_single(var_, power_);
			MultiPoly t(base_);
			t = MultiPoly::from_raw_terms(base_, {{rest, c}});
			acc += t * image_;
		}
		p = std::move(acc);
	}
}

RelationRing weierstrass_relation(const RingPtr &base)
{
	auto u = MultiPoly::variable(base, "u");
	auto g2 = MultiPoly::variable(base, "g2");
	auto g3 = MultiPoly::variable(base, "g3");
	MultiPoly image = u.pow(3) * Rational(4) - g2 * u - g3;
	return RelationRing(base, "v", 2, std::move(image));
}

} // namespace fgl
