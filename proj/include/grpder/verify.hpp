#pragma once

// Per-case verification: recompute everything two ways (closed forms against
// kernel computations) and aggregate into a deterministic JSON report.

#include "grpder/derivation.hpp"
#include "grpder/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace grpder {

struct CaseSpec {
  int n;
  std::int64_t characteristic;
};

struct CaseResult {
  CaseSpec spec;
  bool modular;  // characteristic divides n

  bool class_lists_ok;        // orbit classes == closed-form lists, count formula holds
  bool anti_centralizer_ok;   // closed bases span the kernels; inverse/word variants agree

  std::size_t dim_oracle, dim_inner, dim_closed_form;
  std::size_t expected_dim_oracle, expected_dim_inner;

  bool closed_form_all_valid;
  std::vector<ClosedFormVector> failed_vectors;
  bool valid_vectors_contained;    // every valid closed-form vector lies in the kernel space
  bool valid_vectors_independent;  // span of the valid vectors has full count
  bool closed_form_span_equals_oracle;  // only meaningful when all vectors are valid

  std::size_t basis_vectors_inner, basis_vectors_outer;  // classification of valid vectors
  bool inner_span_equals_oracle;
  std::size_t outer_codim, expected_outer;

  bool pass;
};

CaseResult run_case(const CaseSpec& spec);

struct VerificationReport {
  std::vector<CaseResult> cases;
  bool pass;
};

VerificationReport run_grid(const std::vector<CaseSpec>& specs);

Json report_to_json(const VerificationReport& report);
// Canonical serialization (2-space indent, trailing newline); byte-identical
// across repeated runs on the same grid.
std::string report_to_string(const VerificationReport& report);

}  // namespace grpder
