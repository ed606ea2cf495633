#pragma once

#include <string>
#include <vector>

#include "gorenstein/algebra.hpp"
#include "gorenstein/io.hpp"
#include "gorenstein/projection.hpp"

namespace gorenstein::testing {

inline Algebra load(const std::string& name) {
  return io::load_algebra(std::string(GORENSTEIN_DATA_DIR) + "/" + name + ".json");
}

/// Graded Gorenstein algebras exercised by the property checks.
inline std::vector<std::string> graded_suite() {
  return {"t3", "t4", "t5", "t7", "x2y2", "x3y2", "x3y3", "x5y2", "x2y2z2", "cusp", "fermat_xyz4"};
}

/// Every Gorenstein algebra with n >= 1, graded or not.
inline std::vector<std::string> full_suite() {
  auto s = graded_suite();
  s.push_back("t4_skew");
  return s;
}

inline Vec v(std::initializer_list<long> xs) {
  Vec out;
  for (long x : xs) out.push_back(Scalar(x));
  return out;
}

inline Vec q(std::initializer_list<const char*> xs) {
  Vec out;
  for (const char* x : xs) out.push_back(parse_scalar(x));
  return out;
}

}  // namespace gorenstein::testing
