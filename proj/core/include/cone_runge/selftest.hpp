#pragma once

// Identity suite for the algebra and cone layers, parameterized by the
// multiplication table so that a corrupted table can be fed in as a
// negative control.

#include <cstdint>
#include <string>
#include <vector>

#include "cone_runge/clifford.hpp"

namespace cone_runge {

struct SelftestCheck {
  std::string name;
  long cases = 0;
  bool passed = true;
  std::string counterexample;  // first failing case
};

struct SelftestReport {
  std::vector<SelftestCheck> checks;
  bool ok() const;
};

SelftestReport algebra_selftest(const ProductTable& table, long samples, std::uint64_t seed);

}  // namespace cone_runge
