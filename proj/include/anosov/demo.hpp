#pragma once

// Worked examples from the corpus, reported as JSON.

#include <cstdint>
#include <string>

#include "anosov/json_io.hpp"

namespace anosov {

/// Degree-2 action of D3 on (y13, y14, y23, y24) induced by rho3 + rho3 on x1..x4.
RatMatrix d3_degree2_action(const RatMatrix& generator_image);

/// Runs the pipeline on a named example (see corpus::demo_names()). Throws
/// InvalidInput for unknown names.
json_io::Json run_demo(const std::string& name, std::uint64_t seed = 1);

}  // namespace anosov
