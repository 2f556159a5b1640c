#include "grpder/json_io.hpp"

#include <stdexcept>

namespace grpder {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("bad JSON input: " + what);
}

long long require_int(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
    bad(std::string("missing integer field \"") + key + "\"");
  return j.at(key).get<long long>();
}

}  // namespace

Json element_to_json(const GroupElement& g) { return Json{{"i", g.i}, {"j", g.j}}; }

GroupElement element_from_json(const Json& j, const GroupParams& p) {
  const GroupElement g{static_cast<int>(require_int(j, "i")),
                       static_cast<int>(require_int(j, "j"))};
  element_index(g, p);  // enforce normal form
  return g;
}

Json algebra_to_json(const AlgebraElement& x) {
  Json terms = Json::array();
  for (const auto& [g, c] : x.terms())
    terms.push_back(Json{{"i", g.i}, {"j", g.j}, {"c", c.str()}});
  return Json{{"n", x.params().n},
              {"char", x.field().characteristic()},
              {"terms", std::move(terms)}};
}

AlgebraElement algebra_from_json(const Json& j) {
  const GroupParams p(static_cast<int>(require_int(j, "n")));
  const FieldSpec f = FieldSpec::of_characteristic(require_int(j, "char"));
  if (!j.contains("terms") || !j.at("terms").is_array()) bad("missing \"terms\" array");
  AlgebraElement x(p, f);
  for (const Json& t : j.at("terms")) {
    const GroupElement g = element_from_json(t, p);
    if (!t.contains("c") || !t.at("c").is_string()) bad("term without string \"c\"");
    x.add_term(g, Scalar::parse(f, t.at("c").get<std::string>()));
  }
  return x;
}

Json images_to_json(const GeneratorImages& images) {
  return Json{{"da", algebra_to_json(images.f_a)}, {"db", algebra_to_json(images.f_b)}};
}

GeneratorImages images_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("da") || !j.contains("db"))
    bad("derivation pair needs \"da\" and \"db\"");
  return GeneratorImages(algebra_from_json(j.at("da")), algebra_from_json(j.at("db")));
}

Json pair_to_json(const DerivationPair& d) { return images_to_json(d.images()); }

}  // namespace grpder
