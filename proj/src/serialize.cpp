#include "nonfree/serialize.hpp"

#include <stdexcept>

namespace nonfree::json_io {

json big(const BigInt& v) {
  if (fits_int64(v)) return v.get_si();
  return v.get_str();
}

BigInt big_from(const json& j) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

json rational(const Rational& r) { return r.str(); }

Rational rational_from(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  return Rational(big_from(j));
}

json matrix(const Mat2& m) {
  return json::array({json::array({m.e11.str(), m.e12.str()}),
                      json::array({m.e21.str(), m.e22.str()})});
}

json integers(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(big(x));
  return out;
}

std::vector<BigInt> integers_from(const json& j) {
  std::vector<BigInt> out;
  for (const auto& x : j) out.push_back(big_from(x));
  return out;
}

json word(const ExpWord& w) {
  return {{"start", std::string(1, letter(w.start))},
          {"exponents", integers(w.exponents)},
          {"text", w.str()}};
}

ExpWord word_from(const json& j) {
  std::string s = j.at("start").get<std::string>();
  if (s != "g" && s != "h") throw std::invalid_argument("word start must be g or h");
  return ExpWord(s == "g" ? Gen::G : Gen::H, integers_from(j.at("exponents")));
}

json witness(const RelationWitness& w) {
  return {{"tau", rational(w.tau)},
          {"eval_tau", rational(w.eval_tau)},
          {"lhs", word(w.lhs)},
          {"rhs", word(w.rhs)},
          {"relator", word(w.relator)},
          {"kind", to_string(w.kind)},
          {"matrix", matrix(w.value())},
          {"verified", w.verified}};
}

RelationWitness witness_from(const json& j) {
  RelationWitness w;
  w.tau = rational_from(j.at("tau"));
  w.eval_tau = rational_from(j.at("eval_tau"));
  w.lhs = word_from(j.at("lhs"));
  w.rhs = word_from(j.at("rhs"));
  w.relator = word_from(j.at("relator"));
  std::string kind = j.at("kind").get<std::string>();
  for (RelationKind k : {RelationKind::GroupNontrivial, RelationKind::SemigroupAtTau,
                         RelationKind::SemigroupAtMinusTau, RelationKind::Trivial}) {
    if (to_string(k) == kind) w.kind = k;
  }
  w.verified = recheck(w);
  return w;
}

json instance(const FamilyInstance& inst) {
  json j = {{"family", to_string(inst.family)},
            {"k", inst.k},
            {"tau", rational(inst.tau)},
            {"candidate", integers(inst.candidate.a)},
            {"exceptional", inst.exceptional},
            {"kind", to_string(classify_signs(inst.candidate))}};
  if (inst.sigma) j["sigma"] = {inst.sigma->sigma0, inst.sigma->sigma1};
  if (inst.n) j["n"] = big(*inst.n);
  if (inst.x) j["x"] = big(*inst.x);
  if (inst.t) j["t"] = big(*inst.t);
  if (inst.relator) j["relator"] = word(*inst.relator);
  return j;
}

json status(const StructureStatus& s, bool semigroup) {
  json j = {{"status", semigroup ? semigroup_status_name(s.status) : group_status_name(s.status)},
            {"source", s.source}};
  if (s.witness) j["witness"] = witness(*s.witness);
  return j;
}

json classification(const TauClassification& c) {
  return {{"tau", rational(c.tau)},
          {"group", status(c.group, false)},
          {"semigroup", status(c.semigroup, true)},
          {"effort",
           {{"max_len", c.effort.max_len}, {"bound", c.effort.bound}, {"searched", c.searched}}}};
}

}  // namespace nonfree::json_io
