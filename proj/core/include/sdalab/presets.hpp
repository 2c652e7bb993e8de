#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sdalab::presets {

// Named experiment configurations in the JSON format read by
// model::load_target.
//   sqrt2            (1, sqrt 2)
//   sqrt2-even       (1, sqrt 2) with x_0 even
//   sqrt2-sublattice (1, sqrt 2) restricted to x_0 = x_1 mod 2 (given by a basis)
//   cubic            (1, 2^(1/3), 4^(1/3))
//   sqrt2-sqrt3      (1, sqrt 2, sqrt 3) with sqrt 3 as a 60-digit literal
std::vector<std::string> names();
std::string config(std::string_view name);

}  // namespace sdalab::presets
