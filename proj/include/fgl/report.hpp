#pragma once

#include <string>
#include <vector>

namespace fgl {

/// Outcome of a single verification check.  Report-only checks never fail a
/// suite (used for conjectural statements).
struct CheckReport
{
	std::string id;
	bool pass = false;
	bool report_only = false;
	std::string detail; // residual summary / first divergence
	double elapsed_ms = 0.0;

	static CheckReport ok(std::string id, std::string detail = "")
	{
		return {std::move(id), true, false, std::move(detail), 0.0};
	}
	static CheckReport fail(std::string id, std::string detail)
	{
		return {std::move(id), false, false, std::move(detail), 0.0};
	}
	static CheckReport note(std::string id, bool outcome, std::string detail)
	{
		return {std::move(id), outcome, true, std::move(detail), 0.0};
	}
};

struct SuiteReport
{
	std::string suite;
	std::vector<CheckReport> checks;

	/// fail iff any non-report-only check fails
	bool pass() const
	{
		for (const auto &c : checks)
			if (!c.report_only && !c.pass)
				return false;
		return true;
	}
};

} // namespace fgl
