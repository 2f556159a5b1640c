#include "grpder/verify.hpp"

#include <algorithm>

namespace grpder {

namespace {

bool class_lists_match(const GroupParams& p) {
  const auto orbits = conjugacy_classes(p);
  std::vector<std::vector<GroupElement>> computed;
  computed.reserve(orbits.size());
  for (const ConjugacyClass& c : orbits) computed.push_back(c.members);
  std::sort(computed.begin(), computed.end());
  const auto closed = conjugacy_classes_closed_form(p);
  const std::size_t expected_count = p.n % 2 == 0 ? 2 * p.n + 6 : 2 * p.n + 3;
  return computed == closed && computed.size() == expected_count;
}

bool anti_centralizer_checks(const GroupParams& p, const FieldSpec& f) {
  const auto unit = [&](const GroupElement& g) { return AlgebraElement::unit(p, f, g); };
  const GroupElement a{1, 0}, b{0, 1};
  const AlgebraElement beta_b = unit(b);
  const AlgebraElement beta_binv = unit(inverse(b, p));
  const AlgebraElement beta_ba = unit(multiply(b, a, p));
  const AlgebraElement beta_binva = unit(multiply(inverse(b, p), a, p));
  const AlgebraElement beta_ainvb = unit(multiply(inverse(a, p), b, p));

  const Subspace cb = anti_centralizer(beta_b);
  const Subspace cainvb = anti_centralizer(beta_ainvb);
  const auto basis_b = anti_centralizer_closed_basis(AntiCentralizerTarget::B, p, f);
  const auto basis_ainvb = anti_centralizer_closed_basis(AntiCentralizerTarget::AInvB, p, f);

  bool ok = span_of(basis_b, p, f) == cb;
  ok = ok && anti_centralizer(beta_binv) == cb;
  ok = ok && span_of(basis_ainvb, p, f) == cainvb;
  const Subspace cba = anti_centralizer(beta_ba);
  ok = ok && cba == anti_centralizer(beta_binva);
  ok = ok && cba == cainvb;
  return ok;
}

}  // namespace

CaseResult run_case(const CaseSpec& spec) {
  const GroupParams p(spec.n);
  const FieldSpec f = FieldSpec::of_characteristic(spec.characteristic);

  CaseResult r{};
  r.spec = spec;
  r.modular = !f.is_rationals() && p.n % f.characteristic() == 0;

  r.class_lists_ok = class_lists_match(p);
  r.anti_centralizer_ok = anti_centralizer_checks(p, f);

  const DerivationSpace ds = derivation_space(p, f);
  const Subspace inner = inner_span(p, f);
  r.dim_oracle = ds.dim();
  r.dim_inner = inner.dim();
  r.expected_dim_oracle = expected_derivation_dim(p, f);
  r.expected_dim_inner = expected_inner_dim(p);
  r.expected_outer = expected_outer_codim(p, f);

  const auto basis = closed_form_derivation_basis(p, f);
  r.dim_closed_form = basis.size();
  r.closed_form_all_valid = true;
  std::vector<Vec> valid_rows;
  r.basis_vectors_inner = r.basis_vectors_outer = 0;
  r.valid_vectors_contained = true;
  for (const ClosedFormVector& v : basis) {
    if (!v.valid()) {
      r.closed_form_all_valid = false;
      r.failed_vectors.push_back(v);
      continue;
    }
    const Vec row = pair_to_vector(GeneratorImages(v.d_a, v.d_b));
    if (!ds.space.member(row)) r.valid_vectors_contained = false;
    if (inner.member(row))
      ++r.basis_vectors_inner;
    else
      ++r.basis_vectors_outer;
    valid_rows.push_back(row);
  }
  const Subspace valid_span = Subspace::span_of_rows(
      Matrix::from_rows(f, 2 * p.order(), valid_rows));
  r.valid_vectors_independent = valid_span.dim() == valid_rows.size();
  r.closed_form_span_equals_oracle = valid_span == ds.space;

  r.inner_span_equals_oracle = inner == ds.space;
  r.outer_codim = r.dim_oracle - r.dim_inner;

  bool pass = r.class_lists_ok && r.anti_centralizer_ok;
  pass = pass && r.dim_oracle == r.expected_dim_oracle;
  pass = pass && r.dim_inner == r.expected_dim_inner;
  pass = pass && r.dim_closed_form == r.expected_dim_oracle;
  pass = pass && r.valid_vectors_contained && r.valid_vectors_independent;
  if (r.closed_form_all_valid)
    pass = pass && r.closed_form_span_equals_oracle;
  else
    pass = pass && !r.failed_vectors.empty();
  if (r.modular)
    pass = pass && !r.inner_span_equals_oracle && r.outer_codim == r.expected_outer &&
           r.basis_vectors_outer > 0;
  else
    pass = pass && r.inner_span_equals_oracle && r.outer_codim == 0 &&
           r.basis_vectors_outer == 0 && r.closed_form_all_valid;
  r.pass = pass;
  return r;
}

VerificationReport run_grid(const std::vector<CaseSpec>& specs) {
  VerificationReport report;
  report.pass = true;
  for (const CaseSpec& s : specs) {
    report.cases.push_back(run_case(s));
    report.pass = report.pass && report.cases.back().pass;
  }
  return report;
}

namespace {

Json failed_vector_to_json(const ClosedFormVector& v) {
  Json names = Json::array();
  for (const int t : v.failed_obstructions) names.push_back(kRelatorNames[t]);
  const auto obs = relator_obstructions(GeneratorImages(v.d_a, v.d_b));
  return Json{{"family", v.family},
              {"k", v.k},
              {"item", v.item},
              {"pair", images_to_json(GeneratorImages(v.d_a, v.d_b))},
              {"failed_obstructions", std::move(names)},
              {"first_obstruction_value",
               algebra_to_json(obs[v.failed_obstructions.front()])}};
}

}  // namespace

Json report_to_json(const VerificationReport& report) {
  Json cases = Json::array();
  for (const CaseResult& r : report.cases) {
    Json failed = Json::array();
    for (const ClosedFormVector& v : r.failed_vectors)
      failed.push_back(failed_vector_to_json(v));
    Json summary{{"basis_vectors_inner", r.basis_vectors_inner},
                 {"basis_vectors_outer", r.basis_vectors_outer},
                 {"inner_span_equals_oracle", r.inner_span_equals_oracle},
                 {"outer_codimension", r.outer_codim},
                 {"expected_outer_codimension", r.expected_outer}};
    cases.push_back(Json{{"n", r.spec.n},
                         {"char", r.spec.characteristic},
                         {"dim_oracle", r.dim_oracle},
                         {"dim_inner", r.dim_inner},
                         {"dim_paper_basis", r.dim_closed_form},
                         {"paper_basis_all_valid", r.closed_form_all_valid},
                         {"failed_vectors", std::move(failed)},
                         {"classification_summary", std::move(summary)},
                         {"lemma26_ok", r.class_lists_ok},
                         {"lemma28_ok", r.anti_centralizer_ok},
                         {"expected_dim_oracle", r.expected_dim_oracle},
                         {"expected_dim_inner", r.expected_dim_inner},
                         {"pass", r.pass}});
  }
  return Json{{"cases", std::move(cases)}, {"pass", report.pass}};
}

std::string report_to_string(const VerificationReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

}  // namespace grpder
