#include "fgl/emit.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace fgl {

using nlohmann::json;

TableFormat parse_format(const std::string &name)
{
	if (name == "json")
		return TableFormat::json;
	if (name == "csv")
		return TableFormat::csv;
	if (name == "latex")
		return TableFormat::latex;
	throw std::invalid_argument("unknown format: " + name);
}

namespace {

// "a1" -> "a_{1}", "alpha" -> "\alpha", plain letters stay plain
std::string latex_var(const std::string &name)
{
	if (name == "alpha")
		return "\\alpha";
	std::size_t split = name.size();
	while (split > 0 && std::isdigit(name[split - 1]))
		--split;
	if (split == name.size() || split == 0)
		return name;
	return name.substr(0, split) + "_{" + name.substr(split) + "}";
}

std::string latex_rational(const Rational &q, bool leading)
{
	std::string sign = q.sign() < 0 ? "-" : (leading ? "" : "+");
	Rational a = q.sign() < 0 ? -q : q;
	if (a.is_integer())
		return sign + a.numerator().get_str();
	return sign + "\\tfrac{" + a.numerator().get_str() + "}{" +
	       a.denominator().get_str() + "}";
}

long weight_or_zero(const MultiPoly &p)
{
	auto rep = weight_of(p);
	return rep.homogeneous ? rep.weight : -1;
}

std::string csv_escape(const std::string &s)
{
	if (s.find_first_of(",\"\n") == std::string::npos)
		return s;
	std::string out = "\"";
	for (char c : s)
	{
		if (c == '"')
			out += '"';
		out += c;
	}
	return out + "\"";
}

} // namespace

std::string latex_poly(const MultiPoly &p)
{
	if (p.is_zero())
		return "0";
	// same canonical order as to_string: descending graded-lex
	std::vector<const MultiPoly::Term *> order;
	for (const auto &t : p.terms())
		order.push_back(&t);
	const auto &R = *p.ring();
	std::sort(order.begin(), order.end(),
	          [&](const MultiPoly::Term *x, const MultiPoly::Term *y)
	          {
		          unsigned dx = R.total_degree(x->first);
		          unsigned dy = R.total_degree(y->first);
		          if (dx != dy)
			          return dx > dy;
		          return x->first > y->first;
	          });
	std::string out;
	bool leading = true;
	for (const auto *t : order)
	{
		std::string mono;
		for (std::size_t i = 0; i < R.arity(); ++i)
		{
			unsigned e = R.exponent(t->first, i);
			if (e == 0)
				continue;
			mono += " " + latex_var(R.var(i).name);
			if (e > 1)
				mono += "^{" + std::to_string(e) + "}";
		}
		Rational c = t->second;
		if (mono.empty())
			out += latex_rational(c, leading);
		else if (c.is_one())
			out += (leading ? "" : "+") + mono;
		else if ((-c).is_one())
			out += "-" + mono;
		else
			out += latex_rational(c, leading) + mono;
		leading = false;
	}
	return out;
}

std::string emit_genus_table(const GenusTable &table, TableFormat fmt)
{
	switch (fmt)
	{
	case TableFormat::json:
	{
		json doc;
		doc["schema"] = "1";
		doc["genus"] = table.genus;
		doc["rows"] = json::array();
		for (const auto &r : table.rows)
			doc["rows"].push_back({{"generator", r.generator},
			                       {"index", r.index},
			                       {"value", r.value.to_string()},
			                       {"weight", weight_or_zero(r.value)}});
		return doc.dump(2) + "\n";
	}
	case TableFormat::csv:
	{
		std::string out = "generator,index,value,weight\n";
		for (const auto &r : table.rows)
			out += r.generator + "," + std::to_string(r.index) + "," +
			       csv_escape(r.value.to_string()) + "," +
			       std::to_string(weight_or_zero(r.value)) + "\n";
		return out;
	}
	case TableFormat::latex:
	{
		std::string out = "\\begin{tabular}{lll}\n";
		out += "generator & value & weight \\\\\n\\hline\n";
		for (const auto &r : table.rows)
		{
			std::string gen =
			    r.generator.starts_with("Theta")
			        ? "$\\Theta_{" + std::to_string(r.index) + "}$"
			        : "$\\mathbb{C}P^{" + std::to_string(r.index) + "}$";
			out += gen + " & $" + latex_poly(r.value) + "$ & $" +
			       std::to_string(weight_or_zero(r.value)) + "$ \\\\\n";
		}
		out += "\\end{tabular}\n";
		return out;
	}
	}
	throw std::logic_error("unreachable");
}

std::string emit_kernel(const KernelBasis &kb, TableFormat fmt)
{
	switch (fmt)
	{
	case TableFormat::json:
	{
		json doc;
		doc["schema"] = "1";
		doc["degree"] = kb.degree;
		doc["dimension"] = kb.dimension();
		doc["rows"] = json::array();
		for (const auto &b : kb.basis)
			doc["rows"].push_back({{"element", b.to_string()}});
		return doc.dump(2) + "\n";
	}
	case TableFormat::csv:
	{
		std::string out = "element\n";
		for (const auto &b : kb.basis)
			out += csv_escape(b.to_string()) + "\n";
		return out;
	}
	case TableFormat::latex:
	{
		std::string out = "\\begin{tabular}{l}\n";
		for (const auto &b : kb.basis)
			out += "$" + b.to_string() + "$ \\\\\n";
		out += "\\end{tabular}\n";
		return out;
	}
	}
	throw std::logic_error("unreachable");
}

std::string emit_series(const std::string &name, const Series1 &s,
                        TableFormat fmt)
{
	switch (fmt)
	{
	case TableFormat::json:
	{
		json doc;
		doc["schema"] = "1";
		doc["series"] = name;
		doc["order"] = s.order();
		doc["coeffs"] = json::array();
		for (int k = 0; k <= s.order(); ++k)
			if (!s.coeff(k).is_zero())
				doc["coeffs"].push_back(
				    {{"n", k}, {"value", s.coeff(k).to_string()}});
		return doc.dump(2) + "\n";
	}
	case TableFormat::csv:
	{
		std::string out = "n,value\n";
		for (int k = 0; k <= s.order(); ++k)
			if (!s.coeff(k).is_zero())
				out += std::to_string(k) + "," +
				       csv_escape(s.coeff(k).to_string()) + "\n";
		return out;
	}
	case TableFormat::latex:
	{
		std::string out = name + "(x) = ";
		bool first = true;
		for (int k = 0; k <= s.order(); ++k)
		{
			if (s.coeff(k).is_zero())
				continue;
			if (!first)
				out += " + ";
			out += "\\left(" + latex_poly(s.coeff(k)) + "\\right) x^{" +
			       std::to_string(k) + "}";
			first = false;
		}
		out += " + O(x^{" + std::to_string(s.order() + 1) + "})\n";
		return out;
	}
	}
	throw std::logic_error("unreachable");
}

std::string emit_suite_report(const SuiteReport &report, bool as_json,
                              bool with_timing)
{
	if (as_json)
	{
		json doc;
		doc["schema"] = "1";
		doc["suite"] = report.suite;
		doc["pass"] = report.pass();
		doc["checks"] = json::array();
		for (const auto &c : report.checks)
		{
			json jc = {{"id", c.id},
			           {"status", c.report_only
			                          ? "report-only"
			                          : (c.pass ? "pass" : "fail")},
			           {"detail", c.detail}};
			if (with_timing)
				jc["elapsed_ms"] = c.elapsed_ms;
			doc["checks"].push_back(std::move(jc));
		}
		return doc.dump(2) + "\n";
	}
	std::ostringstream os;
	for (const auto &c : report.checks)
	{
		const char *status =
		    c.report_only ? "REPORT" : (c.pass ? "PASS" : "FAIL");
		os << "[" << status << "] " << c.id;
		if (with_timing)
			os << " (" << c.elapsed_ms << " ms)";
		if (!c.detail.empty())
			os << ": " << c.detail;
		os << "\n";
	}
	os << (report.pass() ? "suite passed" : "suite FAILED") << ": "
	   << report.suite << "\n";
	return os.str();
}

} // namespace fgl
