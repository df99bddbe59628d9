#pragma once

#include <string>
#include <vector>

namespace cantorq {

/// One check of a computed quantity against its published ten-digit
/// reference value.
struct Anchor {
  std::string name;
  double computed = 0.0;
  double expected = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// The full battery of reference checks at the critical contraction ratio:
/// solved constants, closed-form and engine distortions, and cylinder
/// geometry. Reference decimals are quoted to at most ten digits, so value
/// checks use absolute tolerance 5e-7 (5e-5 where the source rounds to four
/// decimals) and solved constants 5e-9 (5e-8 for the crossing that depends
/// on engine enclosures).
std::vector<Anchor> run_reference_checks();

bool all_pass(const std::vector<Anchor>& anchors);

}  // namespace cantorq
