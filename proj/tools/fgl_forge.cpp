// fgl-forge: verification suites, genus tables, and series expansions for
// the Buchstaber formal group law and its relatives, in exact arithmetic.

#include "fgl/buchstaber.hpp"
#include "fgl/cache.hpp"
#include "fgl/emit.hpp"
#include "fgl/genera.hpp"
#include "fgl/suites.hpp"
#include "fgl/twovalued.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

using namespace fgl;

GenusParams params_from_option(const std::string &spec)
{
	if (spec.empty() || spec == "symbolic")
		return GenusParams::symbolic();
	// "a1=<rational|sym>,a2=...,a3=..."
	std::map<std::string, std::string> kv;
	std::stringstream ss(spec);
	std::string item;
	while (std::getline(ss, item, ','))
	{
		auto eq = item.find('=');
		if (eq == std::string::npos)
			throw CLI::ValidationError("--params",
			                           "expected name=value pairs");
		kv[item.substr(0, eq)] = item.substr(eq + 1);
	}
	auto R = a_ring();
	GenusParams p = GenusParams::symbolic();
	auto assign = [&](const std::string &name, MultiPoly &slot)
	{
		auto it = kv.find(name);
		if (it == kv.end())
			return;
		if (it->second == "sym" || it->second == "symbolic")
			return;
		slot = MultiPoly::constant(R, Rational::parse(it->second));
	};
	assign("a1", p.a1);
	assign("a2", p.a2);
	assign("a3", p.a3);
	return p;
}

std::string cache_key(const std::string &command, const std::string &kind,
                      const std::string &params, int order,
                      const std::string &format)
{
	return command + "|" + kind + "|params=" + params +
	       "|order=" + std::to_string(order) + "|format=" + format;
}

ResultCache make_cache(const std::string &cache_dir, bool no_cache)
{
	std::filesystem::path dir;
	if (!cache_dir.empty())
		dir = cache_dir;
	else if (const char *env = std::getenv("FGL_CACHE_DIR"))
		dir = env;
	else
		dir = std::filesystem::temp_directory_path() / "fgl-forge-cache";
	return ResultCache(dir, !no_cache);
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"exact verification engine for the Buchstaber formal "
	             "group law, two-valued groups, and Hirzebruch genera"};
	app.require_subcommand(1);

	int order = 12;
	std::string params = "symbolic";
	std::string format = "text";
	std::string cache_dir;
	bool no_cache = false;
	app.add_option("--order", order, "truncation order (default 12)")
	    ->check(CLI::PositiveNumber);
	app.add_option("--params", params,
	               "a1=..,a2=..,a3=.. with exact rationals or 'sym'");
	app.add_option("--format", format, "text|json|csv|latex");
	app.add_option("--cache-dir", cache_dir,
	               "result cache directory (also FGL_CACHE_DIR)");
	app.add_flag("--no-cache", no_cache, "disable the result cache");

	auto *verify = app.add_subcommand("verify", "run a verification suite");
	std::string suite = "all";
	verify->add_option("--suite", suite,
	                   "core|buchstaber|twovalued|genera|all");

	auto *expand = app.add_subcommand("expand", "print a series expansion");
	std::string series_name = "fbc";
	expand->add_option("--series", series_name,
	                   "fbc|gbc|fkr|fwt|B|I (two-valued log pieces)");

	auto *table =
	    app.add_subcommand("genus-table", "emit a genus value table");
	std::string kind = "theta";
	table->add_option("--kind", kind, "theta|cp|krichever|witten");
	std::string genus_alias;
	table->add_option("--genus", genus_alias,
	                  "bc|kr|wt (alias for --kind theta|krichever|witten)");

	auto *kernel = app.add_subcommand(
	    "kernel", "kernel of the Krichever genus at a complex degree");
	int degree = 6;
	kernel->add_option("--degree", degree, "complex degree")
	    ->check(CLI::PositiveNumber);

	auto *modsquare = app.add_subcommand(
	    "modsquare", "two-valued Cayley table of a modulus-square group");
	std::string group_spec = "Z12";
	modsquare->add_option("--group", group_spec, "Zn or Z2xZ2^k, e.g. Z12");

	auto *hurwitz = app.add_subcommand(
	    "hurwitz", "Hurwitz integrality report for a named target");
	std::string target = "z-g2-g3";
	hurwitz->add_option("--target", target, "z-g2-g3|witten-2|witten-6");

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError &e)
	{
		app.exit(e);
		return 2;
	}

	try
	{
		ResultCache cache = make_cache(cache_dir, no_cache);

		if (verify->parsed())
		{
			SuiteReport report = run_suite(suite, order);
			std::cout << emit_suite_report(report, format == "json");
			return report.pass() ? 0 : 1;
		}

		if (expand->parsed())
		{
			TableFormat fmt =
			    format == "text" ? TableFormat::json : parse_format(format);
			std::string key =
			    cache_key("expand", series_name, params, order, format);
			if (auto hit = cache.load(key))
			{
				std::cout << *hit;
				return 0;
			}
			GenusParams p = params_from_option(params);
			Series1 s = [&]
			{
				if (series_name == "fbc")
					return exp_bc(p, order);
				if (series_name == "gbc")
					return log_bc(p, order);
				if (series_name == "fkr")
					return krichever_exp(order);
				if (series_name == "fwt")
					return witten_exp(order);
				if (series_name == "B")
					return two_valued_log(p, order).B;
				if (series_name == "I")
					return two_valued_log(p, order).I;
				throw CLI::ValidationError("--series",
				                           "unknown series " + series_name);
			}();
			std::string doc = emit_series(series_name, s, fmt);
			cache.store(key, doc);
			std::cout << doc;
			return 0;
		}

		if (table->parsed())
		{
			if (!genus_alias.empty())
			{
				if (genus_alias == "bc")
					kind = "theta";
				else if (genus_alias == "kr")
					kind = "krichever";
				else if (genus_alias == "wt")
					kind = "witten";
				else
					throw CLI::ValidationError("--genus",
					                           "unknown genus " + genus_alias);
			}
			TableFormat fmt =
			    format == "text" ? TableFormat::json : parse_format(format);
			std::string key = cache_key("genus-table", kind, params, order,
			                            format);
			if (auto hit = cache.load(key))
			{
				std::cout << *hit;
				return 0;
			}
			GenusParams p = params_from_option(params);
			GenusTable t = [&]
			{
				if (kind == "theta")
					return theta_values(p, order, ThetaMethod::reversion);
				if (kind == "cp")
					return cp_values(p, order);
				if (kind == "krichever")
				{
					GenusTable raw = krichever_table(order);
					// display in Weierstrass normal form
					const RelationRing rel =
					    weierstrass_relation(kr_ring());
					for (auto &row : raw.rows)
						row.value = rel.reduce(row.value);
					return raw;
				}
				if (kind == "witten")
					return witten_table(order);
				throw CLI::ValidationError("--kind", "unknown kind " + kind);
			}();
			std::string doc = emit_genus_table(t, fmt);
			cache.store(key, doc);
			std::cout << doc;
			return 0;
		}

		if (kernel->parsed())
		{
			TableFormat fmt =
			    format == "text" ? TableFormat::json : parse_format(format);
			std::string key = cache_key("kernel", std::to_string(degree),
			                            "-", order, format);
			if (auto hit = cache.load(key))
			{
				std::cout << *hit;
				return 0;
			}
			std::string doc = emit_kernel(kernel_basis(degree), fmt);
			cache.store(key, doc);
			std::cout << doc;
			return 0;
		}

		if (modsquare->parsed())
		{
			AbelianGroup g = AbelianGroup::parse(group_spec);
			auto classes = coset_classes(g);
			std::cout << "two-valued Cayley table of " << g.name() << " ("
			          << classes.size() << " classes)\n";
			for (const auto &a : classes)
			{
				for (const auto &b : classes)
				{
					auto prod = coset_product(g, a, b);
					std::cout << a.to_string() << "*" << b.to_string()
					          << " = {" << prod[0].to_string() << ","
					          << prod[1].to_string() << "}  ";
				}
				std::cout << "\n";
			}
			return 0;
		}

		if (hurwitz->parsed())
		{
			HurwitzReport rep;
			bool report_only = false;
			if (target == "z-g2-g3")
			{
				std::vector<HurwitzGenerator> gens{{"g2", Rational(1)},
				                                   {"g3", Rational(1)}};
				rep = hurwitz_membership(exp_bc_a1_zero(order + 1), gens,
				                         order);
			}
			else if (target == "witten-2")
			{
				std::vector<HurwitzGenerator> gens{{"g2", Rational(1, 2)},
				                                   {"g3", Rational(2)}};
				rep = hurwitz_membership(witten_exp(order + 1), gens, order);
			}
			else if (target == "witten-6")
			{
				std::vector<HurwitzGenerator> gens{{"g2", Rational(1, 2)},
				                                   {"g3", Rational(6)}};
				rep = hurwitz_membership(witten_exp(order + 1), gens, order);
				report_only = true; // Bunkova's conjecture
			}
			else
				throw CLI::ValidationError("--target",
				                           "unknown target " + target);
			std::cout << "target " << target << ": "
			          << (rep.pass ? "pass" : "fail") << " (" << rep.detail
			          << ")" << (report_only ? " [report only]" : "")
			          << "\n";
			if (report_only)
				return 0;
			return rep.pass ? 0 : 1;
		}
	}
	catch (const CLI::ValidationError &e)
	{
		std::cerr << "usage error: " << e.what() << "\n";
		return 2;
	}
	catch (const std::invalid_argument &e)
	{
		std::cerr << "usage error: " << e.what() << "\n";
		return 2;
	}
	catch (const std::exception &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	return 2;
}
