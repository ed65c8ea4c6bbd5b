#pragma once

#include <iosfwd>

namespace ssli::lab {

/// Entry point of the ssli-lab tool. JSON report on `out`, human summary and
/// diagnostics on `err`. Returns 0 (holds / hypotheses_unmet), 2 (violation)
/// or 1 (input error).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ssli::lab
