// Acceptance gate: one line per criterion, [PASS]/[FAIL]; exit 1 on any failure.
//
// The twelve benchmark cases are every (n, characteristic) with n <= 6 and
// characteristic in {0, 3, 5, 7} for which a frozen expected dimension exists;
// three of them (3,3), (5,5), (6,3) are modular (characteristic divides n).

#include "grpder/verify.hpp"
#include "test_util.hpp"

#include <cstdio>
#include <string>
#include <vector>

using namespace grpder;

namespace {

int g_failures = 0;
std::vector<std::string> g_detail;

void note(const std::string& line) { g_detail.push_back(line); }

void criterion(int idx, const char* what, bool ok) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", idx, what);
  if (!ok) {
    ++g_failures;
    for (const std::string& line : g_detail) std::printf("       %s\n", line.c_str());
  }
  g_detail.clear();
}

std::string tag(int n, std::int64_t ch) {
  return "(n=" + std::to_string(n) + ", char=" + std::to_string(ch) + ")";
}

Subspace span_of_pair_vectors(const std::vector<Vec>& rows, const GroupParams& p,
                              const FieldSpec& f) {
  return Subspace::span_of_rows(Matrix::from_rows(f, 2 * p.order(), rows));
}

struct BenchmarkCase {
  int n;
  std::int64_t ch;
  std::size_t dim;         // frozen expected kernel dimension
  std::size_t failed;      // closed-form vectors expected to fail the relator check
  std::size_t valid_span;  // dimension spanned by the remaining valid vectors
  std::size_t outer;       // expected outer codimension
};

const BenchmarkCase kCases[] = {
    {1, 0, 3, 0, 3, 0},   {2, 0, 6, 0, 6, 0},   {3, 0, 15, 0, 15, 0},
    {4, 0, 18, 0, 18, 0}, {5, 0, 27, 0, 27, 0}, {6, 0, 30, 0, 30, 0},
    {2, 3, 6, 0, 6, 0},   {3, 5, 15, 0, 15, 0}, {4, 7, 18, 0, 18, 0},
    {3, 3, 20, 2, 18, 5}, {5, 5, 36, 3, 33, 9}, {6, 3, 40, 3, 37, 10},
};

// Everything computed once per benchmark case and reused across criteria.
struct CaseData {
  BenchmarkCase spec;
  GroupParams params;
  FieldSpec field;
  DerivationSpace space;
  Subspace inner;
  std::vector<ClosedFormVector> closed;
  std::vector<Vec> valid_rows;
  std::size_t failed_count = 0;
  bool modular;
};

CaseData compute_case(const BenchmarkCase& c) {
  const GroupParams p(c.n);
  const FieldSpec f = FieldSpec::of_characteristic(c.ch);
  CaseData d{c,
             p,
             f,
             derivation_space(p, f),
             inner_span(p, f),
             closed_form_derivation_basis(p, f),
             {},
             0,
             c.ch != 0 && c.n % c.ch == 0};
  for (const ClosedFormVector& v : d.closed) {
    if (v.valid())
      d.valid_rows.push_back(pair_to_vector(GeneratorImages(v.d_a, v.d_b)));
    else
      ++d.failed_count;
  }
  return d;
}

bool check_conjugacy_classes() {
  bool ok = true;
  for (int n = 1; n <= 6; ++n) {
    const GroupParams p(n);
    const auto orbits = conjugacy_classes(p);
    const std::size_t expected =
        n % 2 == 0 ? 2 * static_cast<std::size_t>(n) + 6 : 2 * static_cast<std::size_t>(n) + 3;
    if (orbits.size() != expected) {
      note("class count at n=" + std::to_string(n) + ": got " +
           std::to_string(orbits.size()) + ", expected " + std::to_string(expected));
      ok = false;
    }
    std::vector<std::vector<GroupElement>> computed;
    for (const ConjugacyClass& c : orbits) computed.push_back(c.members);
    std::sort(computed.begin(), computed.end());
    if (computed != conjugacy_classes_closed_form(p)) {
      note("class lists differ from the closed-form lists at n=" + std::to_string(n));
      ok = false;
    }
  }
  return ok;
}

bool check_inner_dimension() {
  bool ok = true;
  for (int n = 1; n <= 6; ++n) {
    const GroupParams p(n);
    const std::size_t classes = conjugacy_classes(p).size();
    const std::size_t formula = n % 2 == 0 ? 6 * static_cast<std::size_t>(n - 1)
                                           : 3 * static_cast<std::size_t>(2 * n - 1);
    for (const std::int64_t ch : {0, 3, 5, 7}) {
      const FieldSpec f = FieldSpec::of_characteristic(ch);
      const std::size_t got = inner_span(p, f).dim();
      if (got != 8 * static_cast<std::size_t>(n) - classes || got != formula ||
          got != expected_inner_dim(p)) {
        note("inner dimension " + tag(n, ch) + ": got " + std::to_string(got) +
             ", expected " + std::to_string(formula));
        ok = false;
      }
    }
  }
  return ok;
}

bool check_oracle_dimensions(const std::vector<CaseData>& cases) {
  bool ok = true;
  for (const CaseData& d : cases) {
    if (d.space.dim() != d.spec.dim || expected_derivation_dim(d.params, d.field) != d.spec.dim) {
      note("kernel dimension " + tag(d.spec.n, d.spec.ch) + ": got " +
           std::to_string(d.space.dim()) + ", expected " + std::to_string(d.spec.dim));
      ok = false;
    }
  }
  return ok;
}

bool check_closed_form_bases(const std::vector<CaseData>& cases) {
  bool ok = true;
  for (const CaseData& d : cases) {
    const std::string at = tag(d.spec.n, d.spec.ch);
    if (d.closed.size() != d.spec.dim) {
      note("closed-form vector count " + at + ": got " + std::to_string(d.closed.size()));
      ok = false;
    }
    if (d.failed_count != d.spec.failed) {
      note("failing closed-form vectors " + at + ": got " + std::to_string(d.failed_count) +
           ", expected " + std::to_string(d.spec.failed));
      ok = false;
    }
    bool contained = true;
    for (const Vec& row : d.valid_rows)
      if (!d.space.space.member(row)) contained = false;
    if (!contained) {
      note("a valid closed-form vector lies outside the kernel space " + at);
      ok = false;
    }
    const Subspace span = span_of_pair_vectors(d.valid_rows, d.params, d.field);
    if (span.dim() != d.valid_rows.size()) {
      note("valid closed-form vectors are dependent " + at);
      ok = false;
    }
    if (span.dim() != d.spec.valid_span) {
      note("valid closed-form span " + at + ": got " + std::to_string(span.dim()) +
           ", expected " + std::to_string(d.spec.valid_span));
      ok = false;
    }
    if (d.spec.failed == 0 && !(span == d.space.space)) {
      note("closed-form span differs from the kernel space " + at);
      ok = false;
    }
    if (d.spec.failed != 0 && d.space.dim() != d.spec.dim) {
      note("dimension agreement via the kernel oracle fails " + at);
      ok = false;
    }
  }
  return ok;
}

bool check_inner_outer_split(const std::vector<CaseData>& cases) {
  bool ok = true;
  for (const CaseData& d : cases) {
    const std::string at = tag(d.spec.n, d.spec.ch);
    const bool equal = d.inner == d.space.space;
    const bool contained = d.space.space.contains(d.inner);
    if (!contained) {
      note("inner span not contained in the kernel space " + at);
      ok = false;
    }
    if (!d.modular) {
      if (!equal) {
        note("inner span differs from the kernel space " + at);
        ok = false;
      }
      continue;
    }
    const std::size_t codim = d.space.dim() - d.inner.dim();
    if (equal || codim != d.spec.outer || codim != expected_outer_codim(d.params, d.field)) {
      note("outer codimension " + at + ": got " + std::to_string(codim) + ", expected " +
           std::to_string(d.spec.outer));
      ok = false;
    }
  }
  return ok;
}

bool check_anti_centralizers() {
  bool ok = true;
  for (int n = 1; n <= 6; ++n) {
    const GroupParams p(n);
    for (const std::int64_t ch : {0, 3, 5}) {
      const FieldSpec f = FieldSpec::of_characteristic(ch);
      const auto unit = [&](int i, int j) {
        return AlgebraElement::unit(p, f, normalized(i, j, p));
      };
      const Subspace cb = anti_centralizer(unit(0, 1));
      const Subspace cainvb = anti_centralizer(unit(-1, 1));
      bool good = span_of(anti_centralizer_closed_basis(AntiCentralizerTarget::B, p, f), p, f) == cb;
      good = good &&
             span_of(anti_centralizer_closed_basis(AntiCentralizerTarget::AInvB, p, f), p, f) ==
                 cainvb;
      good = good && anti_centralizer(unit(0, 3)) == cb;
      // b a and b^-1 a both reduce to words with the same anti-centralizer
      const GroupElement ba = multiply({0, 1}, {1, 0}, p);
      const GroupElement binva = multiply({0, 3}, {1, 0}, p);
      good = good && anti_centralizer(AlgebraElement::unit(p, f, ba)) ==
                         anti_centralizer(AlgebraElement::unit(p, f, binva));
      if (!good) {
        note("anti-centralizer check failed " + tag(n, ch));
        ok = false;
      }
    }
  }
  return ok;
}

bool check_property_suites(std::vector<CaseData>& cases) {
  bool ok = true;

  for (CaseData& d : cases) {
    testing::Rng rng(9000u + static_cast<unsigned>(100 * d.spec.n + d.spec.ch));
    const std::string at = tag(d.spec.n, d.spec.ch);

    // product rule on >= 100 random (derivation, x, y) triples
    int bad_leibniz = 0;
    for (int t = 0; t < 100; ++t) {
      const DerivationPair der = testing::random_derivation(d.space, rng);
      const AlgebraElement x = testing::random_algebra(d.params, d.field, rng);
      const AlgebraElement y = testing::random_algebra(d.params, d.field, rng);
      if (!(evaluate(der, x * y) == evaluate(der, x) * y + x * evaluate(der, y)))
        ++bad_leibniz;
    }
    if (bad_leibniz != 0) {
      note("product rule failures " + at + ": " + std::to_string(bad_leibniz) + "/100");
      ok = false;
    }

    // free-extension word rule on >= 100 random word pairs with random images
    int bad_cocycle = 0;
    for (int t = 0; t < 100; ++t) {
      const GeneratorImages im(testing::random_algebra(d.params, d.field, rng),
                               testing::random_algebra(d.params, d.field, rng));
      const FreeWord v = testing::random_word(rng);
      const FreeWord w = testing::random_word(rng);
      FreeWord vw = v;
      vw.insert(vw.end(), w.begin(), w.end());
      GroupElement gv = identity_element(), gw = identity_element();
      for (const Letter l : v)
        gv = multiply(gv,
                      l == Letter::A      ? GroupElement{1, 0}
                      : l == Letter::AInv ? normalized(-1, 0, d.params)
                      : l == Letter::B    ? GroupElement{0, 1}
                                          : GroupElement{0, 3},
                      d.params);
      for (const Letter l : w)
        gw = multiply(gw,
                      l == Letter::A      ? GroupElement{1, 0}
                      : l == Letter::AInv ? normalized(-1, 0, d.params)
                      : l == Letter::B    ? GroupElement{0, 1}
                                          : GroupElement{0, 3},
                      d.params);
      const AlgebraElement lhs = free_extension(im, vw);
      const AlgebraElement rhs =
          free_extension(im, v) * AlgebraElement::unit(d.params, d.field, gw) +
          AlgebraElement::unit(d.params, d.field, gv) * free_extension(im, w);
      if (!(lhs == rhs)) ++bad_cocycle;
    }
    if (bad_cocycle != 0) {
      note("word-rule failures " + at + ": " + std::to_string(bad_cocycle) + "/100");
      ok = false;
    }

    // d(1) = 0 for every constructed derivation
    for (const DerivationPair& der : d.space.basis_pairs()) {
      if (!evaluate(der, AlgebraElement::one(d.params, d.field)).is_zero()) {
        note("d(1) != 0 for a kernel basis derivation " + at);
        ok = false;
      }
    }
    for (const DerivationPair& der : inner_basis(d.params, d.field)) {
      if (!evaluate(der, AlgebraElement::one(d.params, d.field)).is_zero()) {
        note("d(1) != 0 for an inner basis derivation " + at);
        ok = false;
      }
    }
  }

  // group multiplication is associative, exhaustively for n <= 3
  for (int n = 1; n <= 3; ++n) {
    const GroupParams p(n);
    const auto elems = all_elements(p);
    for (const GroupElement& x : elems)
      for (const GroupElement& y : elems)
        for (const GroupElement& z : elems)
          if (multiply(multiply(x, y, p), z, p) != multiply(x, multiply(y, z, p), p)) {
            note("group multiplication is not associative at n=" + std::to_string(n));
            ok = false;
          }
  }
  return ok;
}

bool check_even_order_criterion() {
  bool ok = true;
  for (int n = 1; n <= 4; ++n) {
    const GroupParams p(n);
    for (const std::int64_t ch : {0, 3, 5}) {
      const FieldSpec f = FieldSpec::of_characteristic(ch);
      for (const GroupElement& g : all_elements(p)) {
        const Subspace cg = anti_centralizer(AlgebraElement::unit(p, f, g));
        const Subspace cginv =
            anti_centralizer(AlgebraElement::unit(p, f, inverse(g, p)));
        const bool even = element_order(g, p) % 2 == 0;
        if (even && !(cg == cginv)) {
          note("even order but asymmetric anti-centralizers at " + to_text(g) + " " +
               tag(n, ch));
          ok = false;
        }
        if (cg.dim() != 0 && cg == cginv && !even) {
          note("odd order with nonzero symmetric anti-centralizer at " + to_text(g) +
               " " + tag(n, ch));
          ok = false;
        }
      }
    }
  }
  return ok;
}

}  // namespace

int main() {
  std::vector<CaseData> cases;
  cases.reserve(std::size(kCases));
  for (const BenchmarkCase& c : kCases) cases.push_back(compute_case(c));

  criterion(1, "conjugacy class counts and explicit lists, n = 1..6",
            check_conjugacy_classes());
  criterion(2, "inner dimension 8n - #classes, n = 1..6, char in {0,3,5,7}",
            check_inner_dimension());
  criterion(3, "kernel-oracle dimensions over the twelve benchmark cases",
            check_oracle_dimensions(cases));
  criterion(4, "closed-form bases against the kernel oracle (failures documented)",
            check_closed_form_bases(cases));
  criterion(5, "inner = all away from the modular case; outer codimensions 5, 9, 10",
            check_inner_outer_split(cases));
  criterion(6, "anti-centralizer closed bases and word-variant equalities",
            check_anti_centralizers());
  criterion(7, "product rule, word rule, associativity, d(1) = 0 property sweeps",
            check_property_suites(cases));
  criterion(8, "anti-centralizer symmetry characterizes even order, n = 1..4",
            check_even_order_criterion());

  if (g_failures != 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 8 criteria passed\n");
  return 0;
}
