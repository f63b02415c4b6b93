#pragma once

#include "fgl/genera.hpp"
#include "fgl/genus_table.hpp"
#include "fgl/report.hpp"
#include "fgl/series.hpp"

namespace fgl {

enum class TableFormat
{
	json,
	csv,
	latex,
};

TableFormat parse_format(const std::string &name);

/// LaTeX math-mode rendering with the same canonical monomial order as
/// MultiPoly::to_string
std::string latex_poly(const MultiPoly &p);

std::string emit_genus_table(const GenusTable &table, TableFormat fmt);
std::string emit_kernel(const KernelBasis &kb, TableFormat fmt);
std::string emit_series(const std::string &name, const Series1 &s,
                        TableFormat fmt);
std::string emit_suite_report(const SuiteReport &report, bool as_json,
                              bool with_timing = true);

} // namespace fgl
