#pragma once

// Line-oriented stack description:
//
//     # comment
//     origin_mm=0
//     kind=barrier width_mm=3.0 kappa0_per_mm=1.0
//     kind=gap width_mm=1.0
//     kind=delta lambda_per_mm=5.0
//     kind=dielectric width_mm=2.5 n=1.61
//
// One element per line, left to right.  Unknown kinds or keys are rejected
// with the offending line number; invalid geometry raises GeometryError.

#include <string>

#include "monodromy/layer.hpp"

namespace monodromy {

LayerStack parse_stack_config(const std::string& text);
LayerStack load_stack_config(const std::string& path);
std::string serialize_stack(const LayerStack& stack);

} // namespace monodromy
