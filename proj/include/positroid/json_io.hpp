// Canonical JSON encodings of the domain objects. Emission is bit-exact
// canonical (sorted keys, sorted basis lists, reduced fraction strings) so
// outputs can be hashed and diffed; parsing rejects non-canonical input.
#pragma once

#include <string>

#include "json.hpp"
#include "positroid/chirotope.hpp"
#include "positroid/macphersonian.hpp"
#include "positroid/matrix.hpp"
#include "positroid/matroid.hpp"
#include "positroid/poset.hpp"

namespace positroid {

using Json = nlohmann::ordered_json;

enum class InputKind { matroid, chirotope, matrix };

// Detects by keys: "bases" / "signs" / "entries". Throws parse_error.
InputKind detect_kind(const Json& j);

Json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const Json& j);

Json chirotope_to_json(const Chirotope& chi);
Chirotope chirotope_from_json(const Json& j);

Json matrix_to_json(const RationalMatrix& a);
RationalMatrix matrix_from_json(const Json& j);

Json subset_to_json(Mask m);

Json poset_to_json(const Poset& p);
std::string poset_to_dot(const Poset& p);

}  // namespace positroid
