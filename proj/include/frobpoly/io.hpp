#pragma once
// File ingestion and result serialization for the command-line front end:
// the JSON algebra-spec format, basis override files, and renderers that
// turn pipeline results into either human-readable text or the stable
// structured (JSON) schema that golden tests diff against.

#include <optional>
#include <string>
#include <vector>

#include "frobpoly/algebra.hpp"
#include "frobpoly/frobenius.hpp"
#include "frobpoly/solver.hpp"

namespace frobpoly {

// Reads a whole file; throws SpecError when it cannot be opened.
std::string read_text_file(const std::string& path);

// Algebra-spec JSON: {"p": 3, "e": 1, "n": 2,
//   "generators": [[["0","2"],["1","0"]], ...], "basis": [...] (optional)}
// where matrix entries are field-element text forms.
AlgebraSpec parse_algebra_spec_text(const std::string& json_text);
AlgebraSpec load_algebra_spec(const std::string& path);

// Basis override: a JSON array of n x n matrices in the same entry format.
std::vector<FMatrix> load_basis_override(const std::string& path,
                                         const FieldCtxPtr& fq, int n);

enum class OutputFormat { kText, kStructured };

// Everything the `gen` command produces, bundled for rendering.
struct GenBundle {
  const Algebra* alg = nullptr;
  const GenericMatrix* gm = nullptr;
  const CompanionForm* cf = nullptr;
  const AdditivePolynomial* f = nullptr;
  // Filled when a divisor check was requested: the divisor's text and
  // whether the division left remainder zero.
  std::optional<bool> divisor_exact;
  std::string divisor_text;
};

std::string render_gen(const GenBundle& b, OutputFormat fmt);
std::string render_splitting(const SplittingReport& rep, OutputFormat fmt);
std::string render_additive_splitting(const AdditiveSplittingReport& rep,
                                      OutputFormat fmt);
std::string render_coverage(const CoverageReport& rep, OutputFormat fmt);
std::string render_fingerprint(const GroupFingerprint& fp, OutputFormat fmt);
std::string render_specialized(const UPoly& f, OutputFormat fmt);

// Rebuilds the emitted polynomial (with its two guard loci) from the
// structured `gen` output, so `specialize` can consume a saved file.
AdditivePolynomial parse_gen_polynomial(const std::string& json_text);

}  // namespace frobpoly
