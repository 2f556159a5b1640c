#pragma once

// The group algebra F V_8n: sparse F-linear combinations of group elements,
// convolution product, augmentation, relative augmentation ideals, and
// (anti-)centralizer subspaces with their closed-form bases.

#include "grpder/field.hpp"
#include "grpder/group.hpp"
#include "grpder/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace grpder {

class AlgebraElement {
 public:
  AlgebraElement(const GroupParams& p, const FieldSpec& f);

  static AlgebraElement zero(const GroupParams& p, const FieldSpec& f);
  static AlgebraElement one(const GroupParams& p, const FieldSpec& f);
  static AlgebraElement unit(const GroupParams& p, const FieldSpec& f, const GroupElement& g);
  // c * a^ipow b^jpow, exponents reduced to normal form.
  static AlgebraElement monomial(const GroupParams& p, const FieldSpec& f,
                                 long long ipow, long long jpow);

  const GroupParams& params() const { return params_; }
  const FieldSpec& field() const { return field_; }
  const std::map<GroupElement, Scalar>& terms() const { return terms_; }

  Scalar coeff(const GroupElement& g) const;
  void add_term(const GroupElement& g, const Scalar& c);  // accumulates; zero terms dropped
  bool is_zero() const { return terms_.empty(); }

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;  // convolution
  AlgebraElement operator-() const;
  AlgebraElement scaled(const Scalar& c) const;
  bool operator==(const AlgebraElement& o) const;
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  // Coefficient vector of length 8n in lexicographic (i, j) order.
  Vec to_vector() const;
  static AlgebraElement from_vector(const GroupParams& p, const FieldSpec& f, const Vec& v);

  std::string str() const;  // e.g. "2*a^2*b + 1", "0"

 private:
  void check_compatible(const AlgebraElement& o) const;
  GroupParams params_;
  FieldSpec field_;
  std::map<GroupElement, Scalar> terms_;  // no zero coefficients
};

// Sum of coefficients (the augmentation ring homomorphism to F).
Scalar augmentation(const AlgebraElement& x);

struct SubgroupSpec {
  GroupParams params;
  std::vector<GroupElement> generators;
  std::vector<GroupElement> closure;  // sorted
  static SubgroupSpec generated_by(const GroupParams& p, std::vector<GroupElement> gens);
  static SubgroupSpec a_squared(const GroupParams& p);  // <a^2>
};

// x lies in Delta'(H): the coefficient sums over H and over its complement
// both vanish.
bool in_delta_prime(const AlgebraElement& x, const SubgroupSpec& h);

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y);       // xy - yx
AlgebraElement anti_commutator(const AlgebraElement& x, const AlgebraElement& y);  // xy + yx

// C(beta) = {alpha : alpha beta = beta alpha} and
// C~(beta) = {alpha : alpha beta = -beta alpha}, as kernels in F^{8n}.
Subspace centralizer(const AlgebraElement& beta);
Subspace anti_centralizer(const AlgebraElement& beta);

// Closed-form bases of the anti-centralizers of b and of a^{-1} b.
enum class AntiCentralizerTarget { B, AInvB };
std::vector<AlgebraElement> anti_centralizer_closed_basis(AntiCentralizerTarget which,
                                                          const GroupParams& p,
                                                          const FieldSpec& f);

// Canonical subspace spanned by a list of algebra elements.
Subspace span_of(const std::vector<AlgebraElement>& xs, const GroupParams& p,
                 const FieldSpec& f);

}  // namespace grpder
