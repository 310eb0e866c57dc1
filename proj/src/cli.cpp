#include "nonfree/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nonfree/families.hpp"
#include "nonfree/freeness.hpp"
#include "nonfree/halfrel.hpp"
#include "nonfree/search.hpp"
#include "nonfree/serialize.hpp"

namespace nonfree {

namespace {

using json = nlohmann::json;
namespace jio = json_io;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

Rational parse_tau(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw InputError("invalid tau '" + text + "': " + e.what());
  }
}

HalfRelCandidate parse_seq(const std::string& text) {
  HalfRelCandidate c;
  try {
    for (const auto& part : split(text, ',')) c.a.push_back(parse_bigint(part));
  } catch (const std::exception& e) {
    throw InputError("invalid sequence '" + text + "': " + e.what());
  }
  if (c.a.empty()) throw InputError("empty sequence");
  return c;
}

std::pair<long, long> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw InputError("range must look like a..b");
  try {
    long lo = parse_bigint(text.substr(0, dots)).get_si();
    long hi = parse_bigint(text.substr(dots + 2)).get_si();
    if (hi < lo) throw InputError("empty range '" + text + "'");
    return {lo, hi};
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError("invalid range '" + text + "': " + e.what());
  }
}

json record(const std::string& command, json inputs, json result, bool verified) {
  return {{"command", command},
          {"inputs", std::move(inputs)},
          {"result", std::move(result)},
          {"verified", verified}};
}

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s;
}

/// Aligned columns for --table output.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      width.resize(std::max(width.size(), r.size()), 0);
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], display_width(r[i]));
    }
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        out << r[i];
        if (i + 1 < r.size()) out << std::string(width[i] - display_width(r[i]) + 2, ' ');
      }
      out << '\n';
    }
  }

 private:
  static std::size_t display_width(const std::string& s) {
    // count UTF-8 code points
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
  }
  std::vector<std::vector<std::string>> rows_;
};

struct Options {
  bool table = false;
  int workers = 0;

  std::string tau, seq;

  std::string family_name, k_range, sigma, variant;
  std::optional<long> k;
  std::optional<std::string> x;

  int max_len = 5;
  long bound = 10;
  std::string signs = "any";
  std::optional<std::size_t> limit;
  std::optional<int> workers_flag;

  std::optional<int> classify_max_len;
  std::optional<long> classify_bound;
};

int cmd_verify(const Options& o, std::ostream& out) {
  Rational tau = parse_tau(o.tau);
  HalfRelCandidate c = parse_seq(o.seq);
  Rational d = defect(c, tau);
  bool hr = d.is_zero();
  RelationKind kind = classify_signs(c);
  json result = {{"defect", jio::rational(d)},
                 {"half_relation", hr},
                 {"kind", to_string(kind)},
                 {"poly", jio::integers(poly_hr(c).coeffs())}};
  bool verified = hr;
  if (hr && !(tau.is_zero() && c.length() % 2 == 1)) {
    RelationWitness w = build_relation(c, tau);
    result["relation"] = jio::witness(w);
    verified = verified && w.verified;
    if (kind == RelationKind::SemigroupAtTau || kind == RelationKind::SemigroupAtMinusTau) {
      RelationWitness s = build_semigroup_witness(c, tau);
      result["semigroup_relation"] = jio::witness(s);
      verified = verified && s.verified;
    }
  }
  if (o.table) {
    Table t({"tau", "seq", "defect", "half_relation", "kind"});
    t.add({tau.str(), join(c.a), d.str(), hr ? "yes" : "no", to_string(kind)});
    t.print(out);
    if (result.contains("relation")) {
      const auto& r = result["relation"];
      out << r["lhs"]["text"].get<std::string>() << " = " << r["rhs"]["text"].get<std::string>()
          << "\n";
    }
  } else {
    out << record("verify", {{"tau", o.tau}, {"seq", o.seq}}, result, verified).dump() << '\n';
  }
  return hr ? kExitResult : kExitNoResult;
}

std::optional<SigmaPair> parse_sigma(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto parts = split(s, ',');
  if (parts.size() != 2) throw InputError("sigma must look like s0,s1");
  try {
    SigmaPair p{std::stoi(parts[0]), std::stoi(parts[1])};
    if (!p.valid()) throw InputError("sigma must be two distinct values in {1,2,3}");
    return p;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("sigma must look like s0,s1");
  }
}

json family_result(const FamilyInstance& inst, bool& verified) {
  json r = jio::instance(inst);
  verified = inst.verified;
  RelationKind kind = classify_signs(inst.candidate);
  if (inst.relator) {
    RelationWitness w = witness_from_relator(*inst.relator, inst.tau, RelationKind::GroupNontrivial);
    r["relation"] = jio::witness(w);
    verified = verified && w.verified;
  } else if (kind != RelationKind::Trivial) {
    RelationWitness w = build_relation(inst.candidate, inst.tau);
    r["relation"] = jio::witness(w);
    verified = verified && w.verified;
    if (kind == RelationKind::SemigroupAtTau || kind == RelationKind::SemigroupAtMinusTau) {
      RelationWitness s = build_semigroup_witness(inst.candidate, inst.tau);
      r["semigroup_relation"] = jio::witness(s);
      r["semigroup_claim"] = kind == RelationKind::SemigroupAtTau ? "S(1,tau)" : "S(1,-tau)";
      verified = verified && s.verified;
    }
  }
  r["verified"] = verified;
  return r;
}

int cmd_family(const Options& o, std::ostream& out, std::ostream& err) {
  auto fam = parse_family(o.family_name);
  if (!fam) throw InputError("unknown family '" + o.family_name + "'");
  Family f = *fam;
  if (f == Family::C_general && !o.variant.empty()) {
    auto v = parse_family("c-" + o.variant);
    if (!v || !is_family_c(*v)) throw InputError("unknown variant '" + o.variant + "'");
    f = *v;
  } else if (!o.variant.empty()) {
    throw InputError("--variant only applies to family c");
  }
  std::optional<SigmaPair> sigma = parse_sigma(o.sigma);
  std::optional<BigInt> x;
  if (o.x) {
    try {
      x = parse_bigint(*o.x);
    } catch (const std::exception& e) {
      throw InputError(std::string("invalid x: ") + e.what());
    }
  }
  if (o.k && !o.k_range.empty()) throw InputError("give either --k or --k-range");
  if (!o.k && o.k_range.empty()) throw InputError("--k or --k-range is required");

  const bool single = o.k.has_value();
  auto [lo, hi] = single ? std::pair<long, long>{*o.k, *o.k} : parse_range(o.k_range);
  if (f == Family::B && !sigma) throw InputError("family b requires --sigma");

  Table table({"family", "k", "tau", "n", "candidate", "exceptional", "kind", "verified"});
  json inputs = {{"name", o.family_name}};
  if (!o.variant.empty()) inputs["variant"] = o.variant;
  if (sigma) inputs["sigma"] = o.sigma;
  if (x) inputs["x"] = *o.x;

  int emitted = 0;
  for (long k = lo; k <= hi; ++k) {
    FamilyInstance inst;
    try {
      inst = family_instance(f, k, sigma, x);
    } catch (const FamilyError& e) {
      if (single) throw InputError(e.rule());
      err << "skip k=" << k << ": " << e.rule() << '\n';
      continue;
    }
    bool verified = false;
    json r = family_result(inst, verified);
    json in = inputs;
    in["k"] = k;
    if (o.table) {
      table.add({to_string(inst.family), std::to_string(k), inst.tau.str(),
                 inst.n ? inst.n->get_str() : "", join(inst.candidate.a),
                 inst.exceptional ? "yes" : "no", r["kind"].get<std::string>(),
                 verified ? "yes" : "no"});
    } else {
      out << record("family", in, r, verified).dump() << '\n';
    }
    ++emitted;
  }
  if (o.table) table.print(out);
  return emitted ? kExitResult : kExitNoResult;
}

int cmd_search(const Options& o, std::ostream& out) {
  SearchQuery q;
  q.tau = parse_tau(o.tau);
  q.max_len = o.max_len;
  q.bound = o.bound;
  auto mode = parse_sign_mode(o.signs);
  if (!mode) throw InputError("unknown sign mode '" + o.signs + "'");
  q.sign_mode = *mode;
  if (o.limit) q.result_limit = *o.limit;
  try {
    validate(q);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }

  auto start = std::chrono::steady_clock::now();
  SearchReport report = search_half_relations(q, o.workers);
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

  json inputs = {{"tau", o.tau},
                 {"max_len", q.max_len},
                 {"bound", q.bound},
                 {"signs", to_string(q.sign_mode)}};
  if (q.result_limit) inputs["limit"] = *q.result_limit;

  Table table({"length", "candidate", "kind", "verified"});
  for (const auto& hit : report.hits) {
    bool ok = is_half_relation(hit, q.tau);
    json r = {{"candidate", jio::integers(hit.a)}, {"kind", to_string(classify_signs(hit))}};
    if (ok && !(q.tau.is_zero() && hit.length() % 2 == 1)) {
      RelationWitness w = build_relation(hit, q.tau);
      r["relation"] = jio::witness(w);
      ok = ok && w.verified;
    }
    if (o.table) {
      table.add({std::to_string(hit.length()), join(hit.a), r["kind"].get<std::string>(),
                 ok ? "yes" : "no"});
    } else {
      out << record("search", inputs, r, ok).dump() << '\n';
    }
  }
  json summary = {{"summary", true},
                  {"hits", report.hits.size()},
                  {"exhausted", report.exhausted},
                  {"workers", o.workers},
                  {"elapsed_ms", ms.count()}};
  if (o.table) {
    table.print(out);
    out << report.hits.size() << " hits, exhausted=" << (report.exhausted ? "yes" : "no") << ", "
        << std::fixed << std::setprecision(1) << ms.count() << " ms\n";
  } else {
    out << record("search", inputs, summary, true).dump() << '\n';
  }
  return report.hits.empty() ? kExitNoResult : kExitResult;
}

int cmd_classify(const Options& o, std::ostream& out) {
  Rational tau = parse_tau(o.tau);
  SearchEffort effort;
  if (o.classify_max_len) effort.max_len = *o.classify_max_len;
  if (o.classify_bound) effort.bound = *o.classify_bound;
  effort.workers = o.workers;
  try {
    validate(SearchQuery{tau, effort.max_len, effort.bound, SignMode::NonzeroAny, 1});
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  TauClassification c = classify_tau(tau, effort);
  bool verified = true;
  for (const auto* s : {&c.group, &c.semigroup}) {
    if (s->witness) verified = verified && recheck(*s->witness);
  }
  if (o.table) {
    Table t({"structure", "status", "source", "witness"});
    auto row = [&](const char* name, const StructureStatus& s, bool semi) {
      std::string w = s.witness ? s.witness->lhs.str() + " = " + s.witness->rhs.str() : "";
      t.add({name, semi ? semigroup_status_name(s.status) : group_status_name(s.status), s.source,
             w});
    };
    row("group", c.group, false);
    row("semigroup", c.semigroup, true);
    t.print(out);
  } else {
    out << record("classify", {{"tau", o.tau}}, jio::classification(c), verified).dump() << '\n';
  }
  return kExitResult;
}

int cmd_poly(const Options& o, std::ostream& out) {
  HalfRelCandidate c = parse_seq(o.seq);
  UniPoly p = poly_hr(c);
  if (o.table) {
    out << "P_" << c.length() << "(" << join(c.a) << "; τ) = " << p.str() << '\n';
  } else {
    json r = {{"coefficients", jio::integers(p.coeffs())},
              {"degree", p.degree()},
              {"text", p.str()}};
    out << record("poly", {{"seq", o.seq}}, r, true).dump() << '\n';
  }
  return kExitResult;
}

}  // namespace

std::optional<int> workers_from_env() {
  const char* v = std::getenv("NONFREE_WORKERS");
  if (!v || !*v) return std::nullopt;
  try {
    int w = std::stoi(v);
    if (w > 0) return w;
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            std::optional<int> env_workers) {
  CLI::App app{"Half-relation toolkit for the parabolic groups Γ(1,τ) and semigroups S(1,τ)",
               "nonfree"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--table", o.table, "Aligned human-readable table instead of JSON lines");

  auto* verify = app.add_subcommand("verify", "Check a half-relation and its induced relation");
  verify->add_option("--tau", o.tau, "Rational p/q")->required();
  verify->add_option("--seq", o.seq, "Comma-separated exponents a_1,...,a_l")->required();

  auto* family = app.add_subcommand("family", "Generate members of a family");
  family->add_option("--name", o.family_name, "a|b|c|d|e")->required();
  family->add_option("--k", o.k, "Single index k");
  family->add_option("--k-range", o.k_range, "Index range lo..hi");
  family->add_option("--sigma", o.sigma, "Family b: s0,s1 (distinct, from 1..3)");
  family->add_option("--variant", o.variant, "Family c: general|even|quad");
  family->add_option("--x", o.x, "Last coefficient for families c (general) and e");

  auto* search = app.add_subcommand("search", "Bounded exhaustive half-relation search");
  search->add_option("--tau", o.tau, "Rational p/q")->required();
  search->add_option("--max-len", o.max_len, "Maximum length (1..12)");
  search->add_option("--bound", o.bound, "Bound on |a_i|");
  search->add_option("--signs", o.signs, "any|positive|alternating");
  search->add_option("--limit", o.limit, "Maximum number of hits reported");
  search->add_option("--workers", o.workers_flag, "Worker threads");

  auto* classify = app.add_subcommand("classify", "Classify tau for the group and semigroup");
  classify->add_option("--tau", o.tau, "Rational p/q")->required();
  classify->add_option("--max-len", o.classify_max_len, "Search effort: maximum length");
  classify->add_option("--bound", o.classify_bound, "Search effort: bound on |a_i|");
  classify->add_option("--workers", o.workers_flag, "Worker threads");

  auto* poly = app.add_subcommand("poly", "Print the half-relation polynomial P_l");
  poly->add_option("--seq", o.seq, "Comma-separated exponents")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitResult;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  o.workers = o.workers_flag.value_or(env_workers.value_or(0));
  if (o.workers < 0) {
    err << "error: --workers must be positive\n";
    return kExitInvalid;
  }

  try {
    if (*verify) return cmd_verify(o, out);
    if (*family) return cmd_family(o, out, err);
    if (*search) return cmd_search(o, out);
    if (*classify) return cmd_classify(o, out);
    if (*poly) return cmd_poly(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace nonfree
