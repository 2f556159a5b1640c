#include "grpder/group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace grpder {

GroupParams::GroupParams(int n_) : n(n_) {
  if (n < 1) throw std::invalid_argument("group parameter n must be >= 1");
}

GroupElement normalized(long long i, long long j, const GroupParams& p) {
  const long long m = p.a_order();
  long long ii = i % m, jj = j % 4;
  if (ii < 0) ii += m;
  if (jj < 0) jj += 4;
  return {static_cast<int>(ii), static_cast<int>(jj)};
}

GroupElement multiply(const GroupElement& g, const GroupElement& h, const GroupParams& p) {
  // a^i b^j a^k b^l: b^j commutes with a^k for even j; for odd j it flips the
  // sign of k and picks up b^{2(k mod 2)}.
  if (g.j % 2 == 0) return normalized(g.i + h.i, g.j + h.j, p);
  return normalized(g.i - h.i, g.j + h.j + 2 * (h.i % 2), p);
}

GroupElement inverse(const GroupElement& g, const GroupParams& p) {
  // (a^i b^j)^{-1} = b^{-j} a^{-i}
  return multiply(normalized(0, -g.j, p), normalized(-g.i, 0, p), p);
}

int element_order(const GroupElement& g, const GroupParams& p) {
  int k = 1;
  GroupElement x = g;
  while (x != identity_element()) {
    x = multiply(x, g, p);
    ++k;
  }
  return k;
}

bool is_central(const GroupElement& g, const GroupParams& p) {
  for (const GroupElement t : {GroupElement{1, 0}, GroupElement{0, 1}})
    if (multiply(g, t, p) != multiply(t, g, p)) return false;
  return true;
}

int element_index(const GroupElement& g, const GroupParams& p) {
  if (g.i < 0 || g.i >= p.a_order() || g.j < 0 || g.j >= 4)
    throw std::invalid_argument("element not in normal form");
  return g.i * 4 + g.j;
}

GroupElement element_at(int index, const GroupParams& p) {
  if (index < 0 || index >= p.order()) throw std::out_of_range("element index");
  return {index / 4, index % 4};
}

std::vector<GroupElement> all_elements(const GroupParams& p) {
  std::vector<GroupElement> out;
  out.reserve(p.order());
  for (int i = 0; i < p.a_order(); ++i)
    for (int j = 0; j < 4; ++j) out.push_back({i, j});
  return out;
}

std::vector<ConjugacyClass> conjugacy_classes(const GroupParams& p) {
  const auto els = all_elements(p);
  std::vector<char> seen(p.order(), 0);
  std::vector<ConjugacyClass> classes;
  for (const GroupElement& g : els) {
    if (seen[element_index(g, p)]) continue;
    std::set<GroupElement> orbit{g};
    std::vector<GroupElement> stack{g};
    while (!stack.empty()) {
      const GroupElement x = stack.back();
      stack.pop_back();
      for (const GroupElement t : {GroupElement{1, 0}, GroupElement{0, 1}}) {
        const GroupElement y = multiply(multiply(t, x, p), inverse(t, p), p);
        if (orbit.insert(y).second) stack.push_back(y);
      }
    }
    ConjugacyClass cls;
    cls.members.assign(orbit.begin(), orbit.end());
    cls.representative = cls.members.front();
    for (const GroupElement& m : cls.members) seen[element_index(m, p)] = 1;
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const ConjugacyClass& x, const ConjugacyClass& y) {
              return x.representative < y.representative;
            });
  return classes;
}

std::vector<std::vector<GroupElement>> conjugacy_classes_closed_form(const GroupParams& p) {
  const int n = p.n;
  const auto N = [&](long long i, long long j) { return normalized(i, j, p); };
  std::vector<std::set<GroupElement>> cl;
  if (n % 2 == 0) {
    cl.push_back({N(0, 0)});
    cl.push_back({N(n, 0)});
    cl.push_back({N(0, 2)});
    cl.push_back({N(n, 2)});
    for (int k = 1; k <= n / 2 - 1; ++k) cl.push_back({N(2 * k, 0), N(-2 * k, 0)});
    for (int k = 1; k <= n; ++k) cl.push_back({N(2 * k - 1, 0), N(-(2 * k - 1), 2)});
    for (int k = 1; k <= n / 2 - 1; ++k) cl.push_back({N(2 * k, 2), N(-2 * k, 2)});
    std::set<GroupElement> cb, cab, cb3, cab3;
    for (int k = 1; k <= n / 2; ++k) {
      cb.insert(N(4 * k, 1));
      cb.insert(N(4 * k + 2, 3));
      cab.insert(N(4 * k + 1, 1));
      cab.insert(N(4 * k + 3, 3));
      cb3.insert(N(4 * k + 2, 1));
      cb3.insert(N(4 * k, 3));
      cab3.insert(N(4 * k + 3, 1));
      cab3.insert(N(4 * k + 1, 3));
    }
    cl.push_back(cb);
    cl.push_back(cab);
    cl.push_back(cb3);
    cl.push_back(cab3);
  } else {
    cl.push_back({N(0, 0)});
    cl.push_back({N(0, 2)});
    for (int k = 1; k <= (n - 1) / 2; ++k) cl.push_back({N(2 * k, 0), N(-2 * k, 0)});
    for (int k = 1; k <= n; ++k) cl.push_back({N(2 * k - 1, 0), N(-(2 * k - 1), 2)});
    for (int k = 1; k <= (n - 1) / 2; ++k) cl.push_back({N(2 * k, 2), N(-2 * k, 2)});
    std::set<GroupElement> cb, cab;
    for (int k = 1; k <= n; ++k) {
      cb.insert(N(2 * k, 1));
      cb.insert(N(2 * k, 3));
      cab.insert(N(2 * k + 1, 1));
      cab.insert(N(2 * k + 1, 3));
    }
    cl.push_back(cb);
    cl.push_back(cab);
  }
  std::vector<std::vector<GroupElement>> out;
  out.reserve(cl.size());
  for (const auto& s : cl) out.emplace_back(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_text(const GroupElement& g) {
  if (g.i == 0 && g.j == 0) return "1";
  std::string s;
  if (g.i != 0) s += g.i == 1 ? "a" : "a^" + std::to_string(g.i);
  if (g.j != 0) {
    if (!s.empty()) s += "*";
    s += g.j == 1 ? "b" : "b^" + std::to_string(g.j);
  }
  return s;
}

namespace {

// One factor: "a", "b", "a^<int>", "b^<int>". Returns false on bad syntax.
bool parse_factor(const std::string& tok, char& gen, long long& exp) {
  if (tok.empty() || (tok[0] != 'a' && tok[0] != 'b')) return false;
  gen = tok[0];
  if (tok.size() == 1) {
    exp = 1;
    return true;
  }
  if (tok[1] != '^' || tok.size() == 2) return false;
  try {
    std::size_t used = 0;
    exp = std::stoll(tok.substr(2), &used);
    return used == tok.size() - 2;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

GroupElement element_from_text(const std::string& text, const GroupParams& p) {
  if (text.empty()) throw std::invalid_argument("empty group element literal");
  if (text == "1") return identity_element();
  GroupElement acc = identity_element();
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t star = text.find('*', pos);
    if (star == std::string::npos) star = text.size();
    char gen = 0;
    long long exp = 0;
    if (!parse_factor(text.substr(pos, star - pos), gen, exp))
      throw std::invalid_argument("bad group element literal: " + text);
    const GroupElement factor =
        gen == 'a' ? normalized(exp, 0, p) : normalized(0, exp, p);
    acc = multiply(acc, factor, p);
    pos = star + 1;
  }
  return acc;
}

}  // namespace grpder
