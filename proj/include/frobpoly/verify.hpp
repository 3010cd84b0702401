#pragma once
// Built-in example data and their golden verification suites.  Each example
// carries an algebra-spec text (identical to the copies shipped under
// data/) and a battery of named checks whose expected values are frozen
// here, so a single binary can confirm the whole pipeline end to end.

#include <string>
#include <vector>

namespace frobpoly {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;  // expected/actual on failure, the value otherwise
};

// Example ids, in the order suites report them: "c8", "a4", "p5".
const std::vector<std::string>& builtin_example_ids();

// The algebra-spec JSON for an example id; throws SpecError for unknown ids.
const std::string& builtin_algebra_text(const std::string& id);

// The canonical text of the quartic divisor of the "a4" example's emitted
// polynomial (the shipped data/a4_g.ypoly content, newline-terminated).
const std::string& builtin_divisor_text();

// One-parameter slices of that divisor (arity-1 texts, t1 as the parameter),
// used by the factorization-pattern checks.
const std::vector<std::string>& builtin_divisor_slices();

// Runs the golden suite for an example id.
std::vector<CheckResult> verify_example(const std::string& id);

}  // namespace frobpoly
