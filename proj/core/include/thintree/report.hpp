#pragma once

#include <string>

#include "thintree/pipeline.hpp"

namespace thintree {

/// Machine-diffable rendering: alphabetical keys, two-space indent, no
/// environment-dependent content.  Identical runs give identical bytes.
std::string report_json(const PipelineResult& r);

/// Short human summary, one aspect per line, ending in PASS or FAIL.
std::string report_text(const PipelineResult& r);

}  // namespace thintree
