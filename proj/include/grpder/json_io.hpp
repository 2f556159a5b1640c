#pragma once

// JSON wire formats. Scalars are strings ("num", "num/den" over Q, a decimal
// residue over F_p); group elements are {"i":…, "j":…}; algebra elements are
// {"n":…, "char":…, "terms":[{"i":…, "j":…, "c":…}…]} with terms sorted
// lexicographically and zero terms absent; derivation pairs are
// {"da":…, "db":…}.

#include "grpder/algebra.hpp"
#include "grpder/derivation.hpp"

#include <json.hpp>

#include <string>

namespace grpder {

using Json = nlohmann::ordered_json;

Json element_to_json(const GroupElement& g);
GroupElement element_from_json(const Json& j, const GroupParams& p);

Json algebra_to_json(const AlgebraElement& x);
// The element carries its own group parameter and characteristic.
AlgebraElement algebra_from_json(const Json& j);

Json images_to_json(const GeneratorImages& images);
GeneratorImages images_from_json(const Json& j);
Json pair_to_json(const DerivationPair& d);

}  // namespace grpder
