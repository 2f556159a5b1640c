#include "grpder/algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace grpder {

AlgebraElement::AlgebraElement(const GroupParams& p, const FieldSpec& f)
    : params_(p), field_(f) {}

AlgebraElement AlgebraElement::zero(const GroupParams& p, const FieldSpec& f) {
  return AlgebraElement(p, f);
}

AlgebraElement AlgebraElement::one(const GroupParams& p, const FieldSpec& f) {
  return unit(p, f, identity_element());
}

AlgebraElement AlgebraElement::unit(const GroupParams& p, const FieldSpec& f,
                                    const GroupElement& g) {
  AlgebraElement x(p, f);
  x.add_term(g, Scalar::one(f));
  return x;
}

AlgebraElement AlgebraElement::monomial(const GroupParams& p, const FieldSpec& f,
                                        long long ipow, long long jpow) {
  return unit(p, f, normalized(ipow, jpow, p));
}

Scalar AlgebraElement::coeff(const GroupElement& g) const {
  const auto it = terms_.find(g);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void AlgebraElement::add_term(const GroupElement& g, const Scalar& c) {
  element_index(g, params_);  // validates normal form
  const auto it = terms_.find(g);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(g, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

void AlgebraElement::check_compatible(const AlgebraElement& o) const {
  if (params_ != o.params_)
    throw MismatchError("algebra elements with different group parameters");
  if (field_ != o.field_)
    throw MismatchError("algebra elements over different fields");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  check_compatible(o);
  AlgebraElement out = *this;
  for (const auto& [g, c] : o.terms_) out.add_term(g, c);
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  check_compatible(o);
  AlgebraElement out = *this;
  for (const auto& [g, c] : o.terms_) out.add_term(g, -c);
  return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  check_compatible(o);
  AlgebraElement out(params_, field_);
  for (const auto& [g, cg] : terms_)
    for (const auto& [h, ch] : o.terms_)
      out.add_term(multiply(g, h, params_), cg * ch);
  return out;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out(params_, field_);
  for (const auto& [g, c] : terms_) out.add_term(g, -c);
  return out;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
  AlgebraElement out(params_, field_);
  for (const auto& [g, cg] : terms_) out.add_term(g, cg * c);
  return out;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  return params_ == o.params_ && field_ == o.field_ && terms_ == o.terms_;
}

Vec AlgebraElement::to_vector() const {
  Vec v(params_.order(), Scalar::zero(field_));
  for (const auto& [g, c] : terms_) v[element_index(g, params_)] = c;
  return v;
}

AlgebraElement AlgebraElement::from_vector(const GroupParams& p, const FieldSpec& f,
                                           const Vec& v) {
  if (static_cast<int>(v.size()) != p.order())
    throw MismatchError("coefficient vector length != group order");
  AlgebraElement x(p, f);
  for (int idx = 0; idx < p.order(); ++idx) x.add_term(element_at(idx, p), v[idx]);
  return x;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [g, c] : terms_) {
    if (!s.empty()) s += " + ";
    const std::string cs = c.str();
    if (g == identity_element())
      s += cs;
    else if (cs == "1")
      s += to_text(g);
    else
      s += cs + "*" + to_text(g);
  }
  return s;
}

Scalar augmentation(const AlgebraElement& x) {
  Scalar s = Scalar::zero(x.field());
  for (const auto& [g, c] : x.terms()) s = s + c;
  return s;
}

SubgroupSpec SubgroupSpec::generated_by(const GroupParams& p, std::vector<GroupElement> gens) {
  std::set<GroupElement> closure{identity_element()};
  std::vector<GroupElement> stack{identity_element()};
  while (!stack.empty()) {
    const GroupElement x = stack.back();
    stack.pop_back();
    for (const GroupElement& g : gens) {
      for (const GroupElement y : {multiply(x, g, p), multiply(x, inverse(g, p), p)})
        if (closure.insert(y).second) stack.push_back(y);
    }
  }
  SubgroupSpec h{p, std::move(gens), {closure.begin(), closure.end()}};
  return h;
}

SubgroupSpec SubgroupSpec::a_squared(const GroupParams& p) {
  return generated_by(p, {normalized(2, 0, p)});
}

bool in_delta_prime(const AlgebraElement& x, const SubgroupSpec& h) {
  if (x.params() != h.params)
    throw MismatchError("algebra element and subgroup from different groups");
  Scalar in_h = Scalar::zero(x.field()), out_h = Scalar::zero(x.field());
  for (const auto& [g, c] : x.terms()) {
    if (std::binary_search(h.closure.begin(), h.closure.end(), g))
      in_h = in_h + c;
    else
      out_h = out_h + c;
  }
  return in_h.is_zero() && out_h.is_zero();
}

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) {
  return x * y - y * x;
}

AlgebraElement anti_commutator(const AlgebraElement& x, const AlgebraElement& y) {
  return x * y + y * x;
}

namespace {

Subspace commutation_kernel(const AlgebraElement& beta, bool anti) {
  const GroupParams& p = beta.params();
  const FieldSpec& f = beta.field();
  const int dim = p.order();
  Matrix m(f, dim, dim);
  for (int c = 0; c < dim; ++c) {
    const AlgebraElement g = AlgebraElement::unit(p, f, element_at(c, p));
    const AlgebraElement img = anti ? anti_commutator(g, beta) : commutator(g, beta);
    const Vec v = img.to_vector();
    for (int r = 0; r < dim; ++r) m.at(r, c) = v[r];
  }
  return kernel(m);
}

}  // namespace

Subspace centralizer(const AlgebraElement& beta) { return commutation_kernel(beta, false); }

Subspace anti_centralizer(const AlgebraElement& beta) { return commutation_kernel(beta, true); }

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

std::vector<AlgebraElement> anti_centralizer_closed_basis(AntiCentralizerTarget which,
                                                          const GroupParams& p,
                                                          const FieldSpec& f) {
  const int n = p.n;
  const auto mono = [&](long long i, long long j) {
    return AlgebraElement::monomial(p, f, i, j);
  };
  std::vector<AlgebraElement> out;
  if (which == AntiCentralizerTarget::B) {
    for (int k = 1; k <= (n - 1) / 2; ++k)
      for (int j = 0; j < 4; ++j)
        out.push_back((mono(2 * k, 0) - mono(-2 * k, 0)) * mono(0, j));
    for (int k = 1; k <= (n + 1) / 2; ++k) {
      const AlgebraElement base = mono(2 * k - 1, 0) - mono(-(2 * k - 1), 2);
      out.push_back(base);
      out.push_back(base * mono(0, 1));
    }
    for (int k = 1; k <= ceil_div(n - 1, 2); ++k) {
      const AlgebraElement base = mono(-(2 * k - 1), 0) - mono(2 * k - 1, 2);
      out.push_back(base);
      out.push_back(base * mono(0, 1));
    }
  } else {
    for (int k = 1; k <= (n - 1) / 2; ++k) {
      const AlgebraElement even = mono(2 * k, 0) - mono(-2 * k, 0);
      out.push_back(even);
      out.push_back(even * mono(0, 2));
      const AlgebraElement odd = mono(2 * k - 1, 0) - mono(-(2 * k + 1), 0);
      out.push_back(odd * mono(0, 1));
      out.push_back(odd * mono(0, 3));
    }
    for (int k = 1; k <= n; ++k) {
      out.push_back(mono(2 * k - 1, 0) - mono(-(2 * k - 1), 2));
      out.push_back((mono(2 * k - 2, 0) - mono(-2 * k, 2)) * mono(0, 1));
    }
  }
  return out;
}

Subspace span_of(const std::vector<AlgebraElement>& xs, const GroupParams& p,
                 const FieldSpec& f) {
  std::vector<Vec> rows;
  rows.reserve(xs.size());
  for (const AlgebraElement& x : xs) {
    if (x.params() != p || !(x.field() == f))
      throw MismatchError("span over mixed parameters");
    rows.push_back(x.to_vector());
  }
  return Subspace::span_of_rows(Matrix::from_rows(f, p.order(), rows));
}

}  // namespace grpder
