#pragma once

#include "fgl/report.hpp"

namespace fgl {

/// Runs one of the named verification suites at the given series order.
/// Known names: core, buchstaber, twovalued, genera, all.  Throws
/// std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string &name, int order);

} // namespace fgl
