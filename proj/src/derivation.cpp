#include "grpder/derivation.hpp"

#include <stdexcept>
#include <utility>

namespace grpder {

const std::array<const char*, 4> kRelatorNames = {"a^2n", "b^4", "(ba)^2", "(b^-1a)^2"};

FreeWord positive_word(const GroupElement& g) {
  FreeWord w;
  w.reserve(g.i + g.j);
  for (int t = 0; t < g.i; ++t) w.push_back(Letter::A);
  for (int t = 0; t < g.j; ++t) w.push_back(Letter::B);
  return w;
}

std::array<FreeWord, 4> relator_words(const GroupParams& p) {
  FreeWord a2n(2 * p.n, Letter::A);
  FreeWord b4(4, Letter::B);
  FreeWord ba2{Letter::B, Letter::A, Letter::B, Letter::A};
  FreeWord binva2{Letter::BInv, Letter::A, Letter::BInv, Letter::A};
  return {std::move(a2n), std::move(b4), std::move(ba2), std::move(binva2)};
}

GeneratorImages::GeneratorImages(AlgebraElement fa, AlgebraElement fb)
    : f_a(std::move(fa)), f_b(std::move(fb)) {
  if (f_a.params() != f_b.params() || !(f_a.field() == f_b.field()))
    throw MismatchError("generator images over different algebras");
}

namespace {

GroupElement letter_element(Letter l, const GroupParams& p) {
  switch (l) {
    case Letter::A: return normalized(1, 0, p);
    case Letter::AInv: return normalized(-1, 0, p);
    case Letter::B: return normalized(0, 1, p);
    default: return normalized(0, -1, p);
  }
}

AlgebraElement letter_image(Letter l, const GeneratorImages& images) {
  const GroupParams& p = images.params();
  const FieldSpec& f = images.field();
  switch (l) {
    case Letter::A: return images.f_a;
    case Letter::B: return images.f_b;
    case Letter::AInv: {
      const AlgebraElement ai = AlgebraElement::unit(p, f, normalized(-1, 0, p));
      return -(ai * images.f_a * ai);
    }
    default: {
      const AlgebraElement bi = AlgebraElement::unit(p, f, normalized(0, -1, p));
      return -(bi * images.f_b * bi);
    }
  }
}

}  // namespace

AlgebraElement free_extension(const GeneratorImages& images, const FreeWord& w) {
  const GroupParams& p = images.params();
  const FieldSpec& f = images.field();
  const std::size_t len = w.size();
  // Group-element prefixes and suffixes of the word.
  std::vector<GroupElement> pre(len + 1), suf(len + 1);
  pre[0] = identity_element();
  for (std::size_t t = 0; t < len; ++t)
    pre[t + 1] = multiply(pre[t], letter_element(w[t], p), p);
  suf[len] = identity_element();
  for (std::size_t t = len; t-- > 0;)
    suf[t] = multiply(letter_element(w[t], p), suf[t + 1], p);

  AlgebraElement acc(p, f);
  for (std::size_t t = 0; t < len; ++t) {
    const AlgebraElement term = AlgebraElement::unit(p, f, pre[t]) *
                                letter_image(w[t], images) *
                                AlgebraElement::unit(p, f, suf[t + 1]);
    acc = acc + term;
  }
  return acc;
}

std::array<AlgebraElement, 4> relator_obstructions(const GeneratorImages& images) {
  const auto words = relator_words(images.params());
  return {free_extension(images, words[0]), free_extension(images, words[1]),
          free_extension(images, words[2]), free_extension(images, words[3])};
}

bool is_derivation_pair(const GeneratorImages& images) {
  for (const AlgebraElement& ob : relator_obstructions(images))
    if (!ob.is_zero()) return false;
  return true;
}

DerivationPair::DerivationPair(GeneratorImages images) : images_(std::move(images)) {
  const auto obs = relator_obstructions(images_);
  for (std::size_t t = 0; t < obs.size(); ++t)
    if (!obs[t].is_zero())
      throw std::invalid_argument(std::string("generator images do not extend to a "
                                              "derivation; relator ") +
                                  kRelatorNames[t] + " maps to " + obs[t].str());
}

bool DerivationPair::operator==(const DerivationPair& o) const {
  return d_a() == o.d_a() && d_b() == o.d_b();
}

AlgebraElement evaluate(const DerivationPair& d, const AlgebraElement& x) {
  if (x.params() != d.params() || !(x.field() == d.field()))
    throw MismatchError("evaluating a derivation outside its algebra");
  AlgebraElement acc(d.params(), d.field());
  for (const auto& [g, c] : x.terms())
    acc = acc + free_extension(d.images(), positive_word(g)).scaled(c);
  return acc;
}

DerivationPair inner_derivation(const AlgebraElement& beta) {
  const GroupParams& p = beta.params();
  const FieldSpec& f = beta.field();
  const AlgebraElement a = AlgebraElement::unit(p, f, normalized(1, 0, p));
  const AlgebraElement b = AlgebraElement::unit(p, f, normalized(0, 1, p));
  return DerivationPair(GeneratorImages(commutator(a, beta), commutator(b, beta)));
}

std::vector<DerivationPair> inner_basis(const GroupParams& p, const FieldSpec& f) {
  std::vector<DerivationPair> out;
  for (const ConjugacyClass& cls : conjugacy_classes(p)) {
    for (std::size_t t = 1; t < cls.members.size(); ++t)
      out.push_back(inner_derivation(AlgebraElement::unit(p, f, cls.members[t])));
  }
  return out;
}

Vec pair_to_vector(const GeneratorImages& images) {
  Vec v = images.f_a.to_vector();
  const Vec vb = images.f_b.to_vector();
  v.insert(v.end(), vb.begin(), vb.end());
  return v;
}

Vec pair_to_vector(const DerivationPair& d) { return pair_to_vector(d.images()); }

DerivationPair pair_from_vector(const GroupParams& p, const FieldSpec& f, const Vec& v) {
  const std::size_t half = static_cast<std::size_t>(p.order());
  if (v.size() != 2 * half)
    throw MismatchError("derivation vector length != 16n");
  const Vec va(v.begin(), v.begin() + half), vb(v.begin() + half, v.end());
  return DerivationPair(GeneratorImages(AlgebraElement::from_vector(p, f, va),
                                        AlgebraElement::from_vector(p, f, vb)));
}

std::vector<DerivationPair> DerivationSpace::basis_pairs() const {
  std::vector<DerivationPair> out;
  out.reserve(space.dim());
  for (std::size_t r = 0; r < space.dim(); ++r)
    out.push_back(pair_from_vector(params, field, space.basis().row(r)));
  return out;
}

DerivationSpace derivation_space(const GroupParams& p, const FieldSpec& f) {
  const int half = p.order();
  Matrix m(f, 4 * half, 2 * half);
  for (int c = 0; c < 2 * half; ++c) {
    AlgebraElement fa(p, f), fb(p, f);
    (c < half ? fa : fb).add_term(element_at(c % half, p), Scalar::one(f));
    const auto obs = relator_obstructions(GeneratorImages(std::move(fa), std::move(fb)));
    for (int block = 0; block < 4; ++block) {
      const Vec v = obs[block].to_vector();
      for (int r = 0; r < half; ++r) m.at(block * half + r, c) = v[r];
    }
  }
  return DerivationSpace{p, f, kernel(m)};
}

Subspace inner_span(const GroupParams& p, const FieldSpec& f) {
  std::vector<Vec> rows;
  for (const DerivationPair& d : inner_basis(p, f)) rows.push_back(pair_to_vector(d));
  return Subspace::span_of_rows(Matrix::from_rows(f, 2 * p.order(), rows));
}

std::size_t expected_derivation_dim(const GroupParams& p, const FieldSpec& f) {
  const bool modular = !f.is_rationals() && p.n % f.characteristic() == 0;
  if (p.n % 2 == 1) return (modular ? 4 : 3) * (2 * p.n - 1);
  return (modular ? 8 : 6) * (p.n - 1);
}

std::size_t expected_inner_dim(const GroupParams& p) {
  return p.n % 2 == 1 ? 3 * (2 * p.n - 1) : 6 * (p.n - 1);
}

std::size_t expected_outer_codim(const GroupParams& p, const FieldSpec& f) {
  return expected_derivation_dim(p, f) - expected_inner_dim(p);
}

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

void push_closed_form(std::vector<ClosedFormVector>& out, const std::string& family,
                      int k, int item, AlgebraElement da, AlgebraElement db) {
  ClosedFormVector v{std::move(da), std::move(db), family, k, item, {}};
  const auto obs = relator_obstructions(GeneratorImages(v.d_a, v.d_b));
  for (int t = 0; t < 4; ++t)
    if (!obs[t].is_zero()) v.failed_obstructions.push_back(t);
  out.push_back(std::move(v));
}

// Families for characteristics not dividing n (includes char 0).
std::vector<ClosedFormVector> semisimple_basis(const GroupParams& p, const FieldSpec& f) {
  const int n = p.n;
  const auto mono = [&](long long i, long long j) {
    return AlgebraElement::monomial(p, f, i, j);
  };
  const AlgebraElement z = AlgebraElement::zero(p, f);
  std::vector<ClosedFormVector> out;
  for (int k = 1; k <= (n - 1) / 2; ++k) {
    const AlgebraElement even = mono(2 * k, 0) - mono(-2 * k, 0);
    const AlgebraElement odd = mono(2 * k - 1, 0) - mono(-(2 * k + 1), 0);
    push_closed_form(out, "B1", k, 1, (mono(-2 * k, 0) - mono(2 * k, 0)) * mono(0, 1), z);
    push_closed_form(out, "B1", k, 2, odd * mono(0, 1), even);
    push_closed_form(out, "B1", k, 3, (mono(-2 * k, 0) - mono(2 * k, 0)) * mono(0, 3), z);
    push_closed_form(out, "B1", k, 4, odd * mono(0, 3), even * mono(0, 2));
    push_closed_form(out, "B1", k, 5, z, even * mono(0, 1));
    push_closed_form(out, "B1", k, 6, z, even * mono(0, 3));
  }
  for (int k = 1; k <= (n + 1) / 2; ++k) {
    push_closed_form(out, "B2", k, 1,
                     (mono(2 * k - 2, 0) - mono(-2 * k, 2)) * mono(0, 1),
                     mono(2 * k - 1, 0) - mono(-(2 * k - 1), 2));
    push_closed_form(out, "B2", k, 2, z,
                     (mono(2 * k - 1, 0) - mono(-(2 * k - 1), 2)) * mono(0, 1));
  }
  for (int k = 1; k <= ceil_div(n - 1, 2); ++k) {
    push_closed_form(out, "B3", k, 1,
                     (mono(-2 * k, 0) - mono(2 * k - 2, 2)) * mono(0, 1),
                     mono(-(2 * k - 1), 0) - mono(2 * k - 1, 2));
    push_closed_form(out, "B3", k, 2, z,
                     (mono(-(2 * k - 1), 0) - mono(2 * k - 1, 2)) * mono(0, 1));
  }
  for (int k = 1; k <= n; ++k)
    push_closed_form(out, "B4", k, 1,
                     (mono(-(2 * k - 1), 0) - mono(2 * k - 1, 2)) * mono(0, 1), z);
  return out;
}

// Families for characteristics dividing n, kept exactly as printed; the first
// item of the second family does not pass the relator criterion and is
// reported as failing rather than repaired.
std::vector<ClosedFormVector> modular_basis(const GroupParams& p, const FieldSpec& f) {
  const int n = p.n;
  const auto mono = [&](long long i, long long j) {
    return AlgebraElement::monomial(p, f, i, j);
  };
  const AlgebraElement z = AlgebraElement::zero(p, f);
  std::vector<ClosedFormVector> out;
  for (int k = 1; k <= (n - 1) / 2; ++k) {
    const AlgebraElement even = mono(2 * k, 0) - mono(-2 * k, 0);
    const AlgebraElement odd = mono(2 * k - 1, 0) - mono(-(2 * k + 1), 0);
    const AlgebraElement odd_up = mono(2 * k + 1, 0) - mono(-(2 * k - 1), 0);
    push_closed_form(out, "B1'", k, 1, odd * mono(0, 1), even);
    push_closed_form(out, "B1'", k, 2, odd_up, even * mono(0, 1));
    push_closed_form(out, "B1'", k, 3, odd * mono(0, 3), even * mono(0, 2));
    push_closed_form(out, "B1'", k, 4, odd_up * mono(0, 2), even * mono(0, 3));
    push_closed_form(out, "B1'", k, 5, (mono(-2 * k, 0) - mono(2 * k, 0)) * mono(0, 3), z);
    push_closed_form(out, "B1'", k, 6, (mono(-2 * k, 0) - mono(2 * k, 0)) * mono(0, 1), z);
    push_closed_form(out, "B1'", k, 7,
                     (mono(-(2 * k - 1), 0) - mono(2 * k + 1, 0)) * mono(0, 2), z);
    push_closed_form(out, "B1'", k, 8, mono(-(2 * k - 1), 0) - mono(2 * k + 1, 0), z);
  }
  for (int k = 1; k <= (n + 1) / 2; ++k) {
    push_closed_form(out, "B2'", k, 1,
                     (mono(2 * k - 2, 0) - mono(-2 * k, 1)) * mono(0, 2),
                     mono(2 * k - 1, 0) - mono(-(2 * k - 1), 2));
    push_closed_form(out, "B2'", k, 2, mono(2 * k, 0) - mono(-(2 * k - 2), 2),
                     (mono(2 * k - 1, 0) - mono(-(2 * k - 1), 2)) * mono(0, 1));
  }
  for (int k = 1; k <= ceil_div(n - 1, 2); ++k) {
    push_closed_form(out, "B3'", k, 1,
                     (mono(-2 * k, 0) - mono(2 * k - 2, 2)) * mono(0, 1),
                     mono(-(2 * k - 1), 0) - mono(2 * k - 1, 2));
    push_closed_form(out, "B3'", k, 2, mono(-(2 * k - 2), 0) - mono(2 * k, 2),
                     (mono(-(2 * k - 1), 0) - mono(2 * k - 1, 2)) * mono(0, 1));
  }
  for (int k = 1; k <= n; ++k) {
    push_closed_form(out, "B4'", k, 1,
                     (mono(-(2 * k - 1), 0) - mono(2 * k - 1, 2)) * mono(0, 1), z);
    push_closed_form(out, "B4'", k, 2, mono(-(2 * k - 2), 0) - mono(2 * k, 2), z);
  }
  return out;
}

}  // namespace

std::vector<ClosedFormVector> closed_form_derivation_basis(const GroupParams& p,
                                                           const FieldSpec& f) {
  const bool modular = !f.is_rationals() && p.n % f.characteristic() == 0;
  return modular ? modular_basis(p, f) : semisimple_basis(p, f);
}

Classification classify(const DerivationPair& d, const Subspace& inner) {
  return inner.member(pair_to_vector(d)) ? Classification::Inner : Classification::Outer;
}

Classification classify(const DerivationPair& d) {
  return classify(d, inner_span(d.params(), d.field()));
}

std::size_t outer_codimension(const GroupParams& p, const FieldSpec& f) {
  return derivation_space(p, f).dim() - inner_span(p, f).dim();
}

std::optional<AlgebraElement> inner_witness(const DerivationPair& d) {
  const GroupParams& p = d.params();
  const FieldSpec& f = d.field();
  const int half = p.order();
  Matrix m(f, 2 * half, half);
  for (int c = 0; c < half; ++c) {
    const Vec v = pair_to_vector(inner_derivation(AlgebraElement::unit(p, f, element_at(c, p))));
    for (int r = 0; r < 2 * half; ++r) m.at(r, c) = v[r];
  }
  const auto x = solve_particular(m, pair_to_vector(d));
  if (!x) return std::nullopt;
  return AlgebraElement::from_vector(p, f, *x);
}

}  // namespace grpder
