#include "nonfree/freeness.hpp"

#include "nonfree/search.hpp"

namespace nonfree {

std::string group_status_name(Status s) {
  switch (s) {
    case Status::FreeSchottky: return "FreeSchottky";
    case Status::NotFree: return "NonFree";
    case Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string semigroup_status_name(Status s) {
  switch (s) {
    case Status::FreeSchottky: return "FreeSchottky";
    case Status::NotFree: return "NonSemigroupFree";
    case Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

constexpr long kMaxLookupK = 1000000;

void push_if_match(std::vector<FamilyInstance>& out, const Rational& tau, Family f, long k,
                   std::optional<SigmaPair> sigma = std::nullopt) {
  if (k == 0 || k > kMaxLookupK || k < -kMaxLookupK) return;
  if (family_excluded(f, k, sigma)) return;
  FamilyInstance inst = family_instance(f, k, sigma);
  if (inst.tau == tau && inst.verified) out.push_back(std::move(inst));
}

// k with F_{k+2}/F_k = tau. The fraction is already in lowest terms, so
// |F_k| must equal the denominator; |F_k| grows with |k|.
void lookup_d(std::vector<FamilyInstance>& out, const Rational& tau) {
  const BigInt den = tau.den();
  for (long k = 1; k <= kMaxLookupK; ++k) {
    BigInt f = fib(k);
    if (f > den) break;
    if (f == den) {
      push_if_match(out, tau, Family::D, k);
      push_if_match(out, tau, Family::D, -k);
    }
  }
}

// k with H_{k+1}/P_k = tau; H_{k+1} and P_k are coprime.
void lookup_e(std::vector<FamilyInstance>& out, const Rational& tau) {
  const BigInt den = tau.den();
  BigInt h = 1, p = 1;  // (H_1, P_1)
  for (long k = 1; k <= kMaxLookupK; ++k) {
    if (p > den) break;
    if (p == den) {
      push_if_match(out, tau, Family::E, k);
      push_if_match(out, tau, Family::E, -k);
    }
    BigInt nh = h + 2 * p;
    p = h + p;
    h = std::move(nh);
  }
}

void lookup_b(std::vector<FamilyInstance>& out, const Rational& tau, const BigInt& n) {
  for (const SigmaPair& s : all_sigma_pairs()) {
    // n_value is unimodal in k with its minimum near 0.
    for (int dir : {1, -1}) {
      for (long k = dir > 0 ? 0 : -1; k <= kMaxLookupK && k >= -kMaxLookupK; k += dir) {
        BigInt v = n_value(s, k);
        if (v == n) push_if_match(out, tau, Family::B, k, s);
        if (v > n && (k > 2 || k < -2)) break;
      }
    }
  }
}

}  // namespace

std::vector<FamilyInstance> family_lookup(const Rational& tau) {
  std::vector<FamilyInstance> out;
  if (tau.is_zero()) return out;

  Rational root;
  if (rational_sqrt(tau, root)) {
    // A: sqrt(tau) = (2k-1)/(2k) in lowest terms, read as u/v with v > 0.
    BigInt u = root.num(), v = root.den();
    if (v % 2 == 0 && fits_int64(v)) {
      long half = BigInt(v / 2).get_si();
      if (u == v - 1) push_if_match(out, tau, Family::A, half);
      if (u == v + 1) push_if_match(out, tau, Family::A, -half);
    }
    // B: sqrt(tau) = (n-1)/n.
    if (u == v - 1 && v >= 2) lookup_b(out, tau, v);
  }

  // C: tau = (2k+1)/k  <=>  k = 1/(tau - 2).
  if (tau != Rational(2)) {
    Rational k = (tau - Rational(2)).inverse();
    if (k.is_integer() && fits_int64(k.num())) {
      long kk = k.num().get_si();
      for (Family f : {Family::C_general, Family::C_even, Family::C_quad}) {
        push_if_match(out, tau, f, kk);
      }
    }
  }

  lookup_d(out, tau);
  lookup_e(out, tau);
  return out;
}

std::optional<RelationWitness> group_witness(const FamilyInstance& inst, const Rational& tau) {
  if (!inst.verified) return std::nullopt;
  RelationWitness w;
  if (inst.relator) {
    w = witness_from_relator(*inst.relator, inst.tau, RelationKind::GroupNontrivial);
  } else {
    if (classify_signs(inst.candidate) == RelationKind::Trivial) return std::nullopt;
    w = build_relation(inst.candidate, inst.tau);
  }
  if (inst.tau == -tau) w = flip_witness(w);
  if (w.eval_tau != tau || !w.verified || !recheck(w)) return std::nullopt;
  return w;
}

std::optional<RelationWitness> semigroup_witness(const FamilyInstance& inst,
                                                 const Rational& tau) {
  if (!inst.verified || inst.relator) return std::nullopt;
  RelationKind kind = classify_signs(inst.candidate);
  bool usable = (inst.tau == tau && kind == RelationKind::SemigroupAtTau) ||
                (inst.tau == -tau && kind == RelationKind::SemigroupAtMinusTau);
  if (!usable) return std::nullopt;
  RelationWitness w = build_semigroup_witness(inst.candidate, inst.tau);
  if (w.eval_tau != tau || !w.verified || !recheck(w)) return std::nullopt;
  return w;
}

namespace {

std::string describe(const FamilyInstance& inst, const Rational& tau) {
  std::string s = "family " + to_string(inst.family) + " k=" + std::to_string(inst.k);
  if (inst.sigma) s += " sigma=" + inst.sigma->str();
  if (inst.tau != tau) s += " at -tau";
  return s;
}

// tau = 0: h_0 = Id, so h g = g h.
RelationWitness degenerate_witness() {
  RelationWitness w;
  w.tau = 0;
  w.eval_tau = 0;
  w.lhs = ExpWord(Gen::H, {1, 1});
  w.rhs = ExpWord(Gen::G, {1, 1});
  w.relator = concat(w.lhs, w.rhs.inverse());
  w.kind = RelationKind::SemigroupAtTau;
  w.verified = eval_word(w.lhs, 0) == eval_word(w.rhs, 0);
  return w;
}

std::optional<RelationWitness> first_search_hit(const Rational& search_tau, SignMode mode,
                                                const SearchEffort& effort,
                                                const Rational& tau) {
  SearchQuery q{search_tau, effort.max_len, effort.bound, mode, 1};
  SearchReport r = search_half_relations(q, effort.workers);
  for (const auto& hit : r.hits) {
    if (!is_half_relation(hit, search_tau)) continue;
    RelationWitness w;
    if (mode == SignMode::NonzeroAny) {
      w = build_relation(hit, search_tau);
      if (search_tau != tau) w = flip_witness(w);
    } else {
      w = build_semigroup_witness(hit, search_tau);
    }
    if (w.eval_tau == tau && w.verified && recheck(w)) return w;
  }
  return std::nullopt;
}

}  // namespace

TauClassification classify_tau(const Rational& tau, const SearchEffort& effort) {
  TauClassification out;
  out.tau = tau;
  out.effort = effort;

  const bool group_schottky = tau.abs() >= Rational(4);
  // A free group has no semigroup relations, hence tau <= -4 as well.
  const bool semigroup_schottky = tau >= Rational(1) || tau <= Rational(-4);
  if (group_schottky) {
    out.group.status = Status::FreeSchottky;
    out.group.source = "Schottky |tau| >= 4";
  }
  if (semigroup_schottky) {
    out.semigroup.status = Status::FreeSchottky;
    out.semigroup.source = tau >= Rational(1) ? "Schottky tau >= 1" : "free group, tau <= -4";
  }
  if (group_schottky && semigroup_schottky) return out;

  auto set = [](StructureStatus& st, RelationWitness w, std::string source) {
    st.status = Status::NotFree;
    st.witness = std::move(w);
    st.source = std::move(source);
  };

  if (tau.is_zero()) {
    set(out.group, degenerate_witness(), "degenerate tau=0");
    set(out.semigroup, degenerate_witness(), "degenerate tau=0");
    return out;
  }

  std::vector<FamilyInstance> at_tau = family_lookup(tau);
  std::vector<FamilyInstance> at_neg = family_lookup(-tau);

  auto need_group = [&] { return out.group.status == Status::Unknown; };
  auto need_semigroup = [&] { return out.semigroup.status == Status::Unknown; };

  for (const auto* list : {&at_tau, &at_neg}) {
    for (const auto& inst : *list) {
      if (need_semigroup()) {
        if (auto w = semigroup_witness(inst, tau)) set(out.semigroup, *w, describe(inst, tau));
      }
      if (need_group()) {
        if (auto w = group_witness(inst, tau)) set(out.group, *w, describe(inst, tau));
      }
    }
  }

  if (need_group() || need_semigroup()) {
    out.searched = true;
    if (need_semigroup()) {
      auto w = first_search_hit(tau, SignMode::AllPositive, effort, tau);
      if (!w) w = first_search_hit(-tau, SignMode::Alternating, effort, tau);
      if (w) set(out.semigroup, *w, "search");
    }
    if (need_group()) {
      if (auto w = first_search_hit(tau, SignMode::NonzeroAny, effort, tau)) {
        set(out.group, *w, "search");
      }
    }
  }

  // A semigroup relation is also a group relation.
  if (need_group() && out.semigroup.status == Status::NotFree) {
    out.group.status = Status::NotFree;
    out.group.witness = out.semigroup.witness;
    out.group.source = out.semigroup.source + " (semigroup relation)";
  }
  return out;
}

}  // namespace nonfree
