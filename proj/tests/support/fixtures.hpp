#pragma once

#include <string>

#include "malg/core.hpp"

namespace malg::testing {

inline const Signature& sigma_s() {
  static const Signature s{{"s", 1}};
  return s;
}

// s(-1) = {1}, s(1) = {-1}.
inline MultiAlgebra example_c() {
  return MultiAlgebra(sigma_s(), {"-1", "1"},
                      {{{"s", {"-1"}}, {"1"}}, {{"s", {"1"}}, {"-1"}}}, true);
}

// s(x) = {1} for both elements.
inline MultiAlgebra example_b() {
  return MultiAlgebra(sigma_s(), {"0", "1"},
                      {{{"s", {"0"}}, {"1"}}, {{"s", {"1"}}, {"1"}}}, true);
}

// s(x) = {abs(x)}.
inline MultiAlgebra example_m() {
  return MultiAlgebra(sigma_s(), {"-1", "0", "1"},
                      {{{"s", {"-1"}}, {"1"}}, {{"s", {"0"}}, {"0"}}, {{"s", {"1"}}, {"1"}}}, true);
}

// Finite prefix 0..n-1 of the successor chain fed by two roots a, b.
inline MultiAlgebra example_y_prefix(int n) {
  ElementSet universe{"a", "b"};
  Table table{{{"s", {"a"}}, {"0"}}, {{"s", {"b"}}, {"0"}}};
  for (int i = 0; i < n; ++i) {
    universe.insert(std::to_string(i));
    if (i + 1 < n) table[{"s", {std::to_string(i)}}] = {std::to_string(i + 1)};
  }
  return MultiAlgebra(sigma_s(), universe, table, false);
}

// Single self-producing element: disconnected, strong basis {x}, ground empty.
inline MultiAlgebra self_loop() {
  return MultiAlgebra(sigma_s(), {"x"}, {{{"s", {"x"}}, {"x"}}}, true);
}

inline std::string corpus_path(const std::string& name) {
  return std::string(MALG_CORPUS_DIR) + "/" + name;
}

}  // namespace malg::testing
