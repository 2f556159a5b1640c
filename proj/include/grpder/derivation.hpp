#pragma once

// Derivations of F V_8n. A derivation is determined by its images on the two
// generators; a candidate pair of images extends to a derivation exactly when
// the induced free extension vanishes on all four defining relators. The full
// derivation space is the kernel of the resulting linear obstruction map,
// inner derivations come from commutators, and closed-form bases are
// constructed per parity and characteristic.

#include "grpder/algebra.hpp"
#include "grpder/field.hpp"
#include "grpder/group.hpp"
#include "grpder/matrix.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace grpder {

enum class Letter : std::uint8_t { A, AInv, B, BInv };
using FreeWord = std::vector<Letter>;

// a^i b^j as positive letters.
FreeWord positive_word(const GroupElement& g);
// The defining relators a^{2n}, b^4, (ba)^2, (b^-1 a)^2 as words.
std::array<FreeWord, 4> relator_words(const GroupParams& p);
extern const std::array<const char*, 4> kRelatorNames;

struct GeneratorImages {
  AlgebraElement f_a, f_b;
  GeneratorImages(AlgebraElement fa, AlgebraElement fb);
  const GroupParams& params() const { return f_a.params(); }
  const FieldSpec& field() const { return f_a.field(); }
};

// The unique extension of g -> f_g satisfying the product rule
// f(vw) = f(v) w + v f(w), evaluated on a free word; inverse letters use
// f(x^-1) = -x^-1 f(x) x^-1. The empty word maps to 0.
AlgebraElement free_extension(const GeneratorImages& images, const FreeWord& w);

std::array<AlgebraElement, 4> relator_obstructions(const GeneratorImages& images);
bool is_derivation_pair(const GeneratorImages& images);

// A validated derivation: construction checks all four obstructions vanish.
class DerivationPair {
 public:
  explicit DerivationPair(GeneratorImages images);
  const AlgebraElement& d_a() const { return images_.f_a; }
  const AlgebraElement& d_b() const { return images_.f_b; }
  const GeneratorImages& images() const { return images_; }
  const GroupParams& params() const { return images_.params(); }
  const FieldSpec& field() const { return images_.field(); }
  bool operator==(const DerivationPair& o) const;

 private:
  GeneratorImages images_;
};

// d applied to an arbitrary algebra element, by linearity and the product rule.
AlgebraElement evaluate(const DerivationPair& d, const AlgebraElement& x);

// d_beta(x) = x beta - beta x.
DerivationPair inner_derivation(const AlgebraElement& beta);

// One inner derivation d_g per non-singleton conjugacy class member g other
// than the class representative; 8n - (#classes) pairs, a basis of the inner
// derivation space.
std::vector<DerivationPair> inner_basis(const GroupParams& p, const FieldSpec& f);

// Concatenated coefficient vector (d(a), d(b)) of length 16n.
Vec pair_to_vector(const GeneratorImages& images);
Vec pair_to_vector(const DerivationPair& d);
DerivationPair pair_from_vector(const GroupParams& p, const FieldSpec& f, const Vec& v);

struct DerivationSpace {
  GroupParams params;
  FieldSpec field;
  Subspace space;  // subspace of F^{16n}
  std::size_t dim() const { return space.dim(); }
  std::vector<DerivationPair> basis_pairs() const;
};

// The space of all derivations as the kernel of the relator obstruction map
// F^{16n} -> F^{32n}. This is the computational ground truth the closed-form
// bases are checked against.
DerivationSpace derivation_space(const GroupParams& p, const FieldSpec& f);

// Span of the inner basis inside F^{16n}.
Subspace inner_span(const GroupParams& p, const FieldSpec& f);

// Expected dimensions: derivation space dimension depends on whether the
// characteristic divides n; the inner dimension is 8n - (#classes).
std::size_t expected_derivation_dim(const GroupParams& p, const FieldSpec& f);
std::size_t expected_inner_dim(const GroupParams& p);
std::size_t expected_outer_codim(const GroupParams& p, const FieldSpec& f);

// One closed-form basis vector, kept verbatim even when it fails the relator
// criterion; failures carry the indices of the offending relators.
struct ClosedFormVector {
  AlgebraElement d_a, d_b;
  std::string family;  // "B1".."B4" or "B1'".."B4'"
  int k;
  int item;  // position within the per-k tuple, 1-based
  std::vector<int> failed_obstructions;
  bool valid() const { return failed_obstructions.empty(); }
};

// The closed-form basis of the derivation space: one family set when the
// characteristic does not divide n (semisimple case), another when it does.
std::vector<ClosedFormVector> closed_form_derivation_basis(const GroupParams& p,
                                                           const FieldSpec& f);

enum class Classification { Inner, Outer };
Classification classify(const DerivationPair& d, const Subspace& inner);
Classification classify(const DerivationPair& d);

std::size_t outer_codimension(const GroupParams& p, const FieldSpec& f);

// A beta with d = d_beta, when one exists (free coordinates set to 0).
std::optional<AlgebraElement> inner_witness(const DerivationPair& d);

}  // namespace grpder
