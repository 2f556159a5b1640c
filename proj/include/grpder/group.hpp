#pragma once

// The group V_8n = <a, b | a^{2n} = b^4 = 1, ba = a^{-1}b^{-1}, b^{-1}a = a^{-1}b>
// of order 8n, in the normal form a^i b^j with 0 <= i < 2n, 0 <= j < 4.

#include <compare>
#include <string>
#include <vector>

namespace grpder {

struct GroupParams {
  int n;
  explicit GroupParams(int n_);
  int order() const { return 8 * n; }
  int a_order() const { return 2 * n; }
  bool operator==(const GroupParams&) const = default;
};

struct GroupElement {
  int i = 0;
  int j = 0;
  auto operator<=>(const GroupElement&) const = default;  // lexicographic (i, j)
};

GroupElement normalized(long long i, long long j, const GroupParams& p);
GroupElement multiply(const GroupElement& g, const GroupElement& h, const GroupParams& p);
GroupElement inverse(const GroupElement& g, const GroupParams& p);
inline GroupElement identity_element() { return {0, 0}; }

int element_order(const GroupElement& g, const GroupParams& p);
bool is_central(const GroupElement& g, const GroupParams& p);

// Lexicographic position of g in the element list, i * 4 + j.
int element_index(const GroupElement& g, const GroupParams& p);
GroupElement element_at(int index, const GroupParams& p);
std::vector<GroupElement> all_elements(const GroupParams& p);

struct ConjugacyClass {
  GroupElement representative;          // lexicographically least member
  std::vector<GroupElement> members;    // sorted
};

// Orbit computation under conjugation; classes sorted by representative.
std::vector<ConjugacyClass> conjugacy_classes(const GroupParams& p);

// The same partition built directly from closed-form index ranges (2n+6
// classes for even n, 2n+3 for odd n); members and classes sorted as above.
std::vector<std::vector<GroupElement>> conjugacy_classes_closed_form(const GroupParams& p);

// "a^i*b^j" with zero-exponent factors omitted, exponent 1 printed as the bare
// generator, and the identity printed as "1".
std::string to_text(const GroupElement& g);
// Accepts the same forms with arbitrary integer exponents, e.g. "a^-1*b".
GroupElement element_from_text(const std::string& text, const GroupParams& p);

}  // namespace grpder
