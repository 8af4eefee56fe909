#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "precubical_set.hpp"

namespace precubical {

// One vertex "v" and one loop "e".
inline PrecubicalSet directed_circle() {
  return Builder{}
      .add_cell(0, "v")
      .add_cell(1, "e")
      .set_face(1, "e", 1, 0, "v")
      .set_face(1, "e", 1, 1, "v")
      .build();
}

// Directed path v0 -> v1 -> ... -> vk with edges e1..ek.
inline PrecubicalSet interval(std::size_t k) {
  Builder b;
  for (std::size_t v = 0; v <= k; ++v) {
    b.add_cell(0, "v" + std::to_string(v));
  }
  for (std::size_t e = 1; e <= k; ++e) {
    const std::string name = "e" + std::to_string(e);
    b.add_cell(1, name);
    b.set_face(1, name, 1, 0, "v" + std::to_string(e - 1));
    b.set_face(1, name, 1, 1, "v" + std::to_string(e));
  }
  return b.build();
}

// d-fold tensor power of the directed circle; torus(0) is a point.
inline PrecubicalSet torus(std::size_t d) {
  if (d == 0) {
    return Builder{}.add_cell(0, "v").build();
  }
  PrecubicalSet t = directed_circle();
  for (std::size_t k = 1; k < d; ++k) {
    t = tensor(t, directed_circle());
  }
  return t;
}

inline PrecubicalSet cylinder() { return tensor(directed_circle(), standard_cube(1)); }

// Named families: "cube n", "boundary n", "circle", "torus d", "cylinder",
// "interval k".
inline PrecubicalSet generate(const std::string& family, const std::vector<long long>& params) {
  constexpr long long max_param = 12;  // 3^12 cells for cube 12
  auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      throw std::invalid_argument("family \"" + family + "\" takes " + std::to_string(count) +
                                  " parameter" + (count == 1 ? "" : "s") + ", got " +
                                  std::to_string(params.size()));
    }
    for (long long p : params) {
      if (p < 0 || p > max_param) {
        throw std::invalid_argument("family \"" + family + "\": parameters must lie in 0.." +
                                    std::to_string(max_param));
      }
    }
  };
  if (family == "cube") {
    expect(1);
    return standard_cube(static_cast<std::size_t>(params[0]));
  }
  if (family == "boundary") {
    expect(1);
    return boundary_cube(static_cast<std::size_t>(params[0]));
  }
  if (family == "circle") {
    expect(0);
    return directed_circle();
  }
  if (family == "torus") {
    expect(1);
    return torus(static_cast<std::size_t>(params[0]));
  }
  if (family == "cylinder") {
    expect(0);
    return cylinder();
  }
  if (family == "interval") {
    expect(1);
    return interval(static_cast<std::size_t>(params[0]));
  }
  throw std::invalid_argument("unknown family \"" + family +
                              "\" (expected cube, boundary, circle, torus, cylinder or interval)");
}

}  // namespace precubical
