#pragma once

#include "json.hpp"

#include "nonfree/families.hpp"
#include "nonfree/freeness.hpp"
#include "nonfree/halfrel.hpp"
#include "nonfree/mat2.hpp"
#include "nonfree/word.hpp"

// JSON forms used by the CLI. Rationals are strings "p/q"; integers are
// JSON numbers when they fit in 62 bits, otherwise decimal strings.
namespace nonfree::json_io {

using nlohmann::json;

json big(const BigInt& v);
BigInt big_from(const json& j);

json rational(const Rational& r);
Rational rational_from(const json& j);

json matrix(const Mat2& m);
json integers(const std::vector<BigInt>& v);
std::vector<BigInt> integers_from(const json& j);

json word(const ExpWord& w);
ExpWord word_from(const json& j);

json witness(const RelationWitness& w);
/// Rebuilds the witness from its serialized words alone (verified is
/// recomputed, not trusted).
RelationWitness witness_from(const json& j);

json instance(const FamilyInstance& inst);
json status(const StructureStatus& s, bool semigroup);
json classification(const TauClassification& c);

}  // namespace nonfree::json_io
