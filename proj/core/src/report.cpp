#include "tgkz/report.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"
#include "tgkz/binomial_ideals.hpp"
#include "tgkz/groebner.hpp"
#include "tgkz/hypergeometric.hpp"
#include "tgkz/rank_duality.hpp"

namespace tgkz {

namespace {

using nlohmann::json;

constexpr const char* kModule = "cli_reporting";

[[noreturn]] void fail(ErrorCode code, const std::string& field, const std::string& message) {
  throw Error(code, kModule, field + ": " + message);
}

long parse_long(const json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(ErrorCode::Malformed, field, "expected an integer");
  return j.get<long>();
}

Integer parse_integer(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) == 0) return v;
  }
  fail(ErrorCode::Malformed, field, "expected an integer");
}

Cyclotomic parse_value(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Cyclotomic(Rational(j.get<long>()));
  if (j.is_number_float())
    fail(ErrorCode::UnsupportedCharacterValue, field, "floating-point values are not exact; use \"p/q\" or zeta(e)^k");
  if (!j.is_string()) fail(ErrorCode::Malformed, field, "expected a number or an exact expression string");
  try {
    return parse_cyclotomic(j.get<std::string>());
  } catch (const Error& e) {
    fail(e.code(), field, e.what());
  }
}

GroupElement parse_element(const json& j, const AbelianGroup& g, std::optional<std::size_t> d, const std::string& field) {
  if (!j.is_object()) fail(ErrorCode::Malformed, field, "expected {\"torsion\": [...], \"free\": [...]}");
  for (const auto& [key, value] : j.items())
    if (key != "torsion" && key != "free") fail(ErrorCode::Malformed, field + "." + key, "unknown key");
  std::vector<long> torsion;
  if (j.contains("torsion")) {
    if (!j["torsion"].is_array()) fail(ErrorCode::Malformed, field + ".torsion", "expected an array");
    for (std::size_t i = 0; i < j["torsion"].size(); ++i)
      torsion.push_back(parse_long(j["torsion"][i], field + ".torsion[" + std::to_string(i) + "]"));
  }
  if (torsion.size() != g.torsion_rank())
    fail(ErrorCode::DimensionMismatch, field + ".torsion",
         "expected " + std::to_string(g.torsion_rank()) + " entries, got " + std::to_string(torsion.size()));
  if (!j.contains("free") || !j["free"].is_array()) fail(ErrorCode::Malformed, field + ".free", "expected an array");
  IntVector free;
  for (std::size_t i = 0; i < j["free"].size(); ++i)
    free.push_back(parse_integer(j["free"][i], field + ".free[" + std::to_string(i) + "]"));
  if (d && free.size() != *d)
    fail(ErrorCode::DimensionMismatch, field + ".free",
         "expected " + std::to_string(*d) + " entries, got " + std::to_string(free.size()));
  return GroupElement::make(g, std::move(torsion), std::move(free));
}

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(tgkz::to_string(x));
  return out;
}

json to_json(const std::vector<Cyclotomic>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

json to_json(const GroupElement& t) { return json{{"torsion", t.torsion}, {"free", to_json(t.free)}}; }

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (const auto& r : m.row_list()) out.push_back(to_json(r));
  return out;
}

json to_json(const IdealBasis& ideal) {
  json out = json::array();
  for (const auto& g : ideal.generators) out.push_back(g.to_string());
  return out;
}

json to_json(const WeylElement& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) out.push_back(json{{"coefficient", c.to_string()}, {"x", m.x}, {"d", m.d}});
  return out;
}

json to_json(const Arrangement& arr) {
  json out = json::array();
  for (const auto& p : arr.pieces) out.push_back(json{{"shift", to_json(p.shift)}, {"columns", p.columns}});
  return out;
}

json to_json(const SystemPresentation& sys) {
  json gens = json::array();
  for (const auto& g : sys.generators) gens.push_back(to_json(g));
  json rels = json::array();
  for (const auto& r : sys.relations) {
    json terms = json::array();
    for (const auto& t : r.terms) terms.push_back(json{{"generator_index", t.generator}, {"operator", to_json(t.op)}});
    rels.push_back(json{{"kind", relation_kind_name(r.kind)}, {"terms", terms}, {"text", r.to_string()}});
  }
  return json{{"beta", to_json(sys.beta)},
              {"binomial_degree_bound", sys.bound},
              {"generators", gens},
              {"module", sys.module_kind ? module_kind_name(*sys.module_kind) : "face"},
              {"relation_counts",
               {{"binomial", sys.count(RelationKind::Binomial)},
                {"euler", sys.count(RelationKind::Euler)},
                {"ideal", sys.count(RelationKind::Ideal)}}},
              {"relations", rels},
              {"stabilized", sys.stabilized}};
}

bool is_torsion_example(const PointConfig& config) {
  const auto& g = config.group();
  if (g.torsion_orders() != std::vector<long>{4} || g.free_rank() != 1 || config.n() != 2) return false;
  std::vector<GroupElement> cols = config.columns();
  std::sort(cols.begin(), cols.end());
  return cols == std::vector<GroupElement>{GroupElement({1}, IntVector{1}), GroupElement({1}, IntVector{2})};
}

struct Context {
  const ProblemSpec& spec;
  PointConfig config;
  HypothesisReport hyp;
  RunOptions options;
  json notes = json::array();
  json refused = json::array();
  std::optional<std::size_t> binomial_bound;
};

json hypotheses_block(const Context& ctx) {
  const auto& h = ctx.hyp;
  return json{{"all", h.all()},
              {"delta", h.delta ? to_json(*h.delta) : json("infinite")},
              {"delta_divides_ell", h.delta_divides_ell},
              {"ell", h.ell},
              {"pointed", h.pointed},
              {"spans", h.spans}};
}

json ideals_block(Context& ctx) {
  json markov = json::array();
  for (const auto& m : markov_basis(ctx.config)) markov.push_back(to_json(m));
  auto ical = toric_ideal_IcalA(ctx.config);
  if (is_torsion_example(ctx.config))
    ctx.notes.push_back(
        "I_calA is computed from the kernel of the full column map (free and torsion parts) and equals "
        "(d1^8 - d2^4). The value (d1^4 - d2^2) sometimes quoted for this configuration misses the torsion "
        "condition: 4e1 - 2e2 has torsion part 2 mod 4, so d1^4 - d2^2 is not in I_calA; it lies in I_A only.");
  return json{{"I_A", to_json(toric_ideal_IA(ctx.config))},
              {"I_calA", to_json(ical)},
              {"markov_basis", markov},
              {"power_ideal", to_json(power_ideal(ctx.config))}};
}

json primes_block(const Context& ctx) {
  auto primes = minimal_primes_IcalA(ctx.config, ctx.options.threads);
  json list = json::array();
  for (const auto& p : primes)
    list.push_back(json{{"character", {{"lattice", to_json(p.rho.basis())}, {"values", to_json(p.rho.values())}}},
                        {"ideal", to_json(p.ideal)}});
  return json{{"count", primes.size()},
              {"intersection_equals_I_calA", verify_prime_intersection(ctx.config, primes)},
              {"primes", list}};
}

Integer slice_bound(const SemigroupModule& module, const PrimitiveSet& prim) {
  const auto& h = module.grading();
  Integer top = 0, step = 0;
  for (const auto& t : prim.elements) top = std::max(top, h_degree(h, t));
  for (std::size_t j = 0; j < module.config().n(); ++j) step = std::max(step, h_degree(h, module.config().column(j)));
  return top + step;
}

json module_block(const Context& ctx) {
  auto module = ctx.spec.module();
  auto prim = primitive_set(module);
  Integer bound = ctx.spec.bounds.h_degree.value_or(slice_bound(module, prim));
  json tprim = json::array();
  for (const auto& t : prim.elements) {
    json e = to_json(t);
    e["h"] = to_json(h_degree(module.grading(), t));
    tprim.push_back(e);
  }
  json units = json::array();
  for (const auto& u : module.unit_group()) units.push_back(to_json(u));
  json facets = json::array();
  for (const auto& f : module.facet_normals()) facets.push_back(to_json(f));
  return json{{"facet_normals", facets},
              {"grading", to_json(module.grading())},
              {"kind", module_kind_name(module.kind())},
              {"slice", {{"h_degree", to_json(bound)}, {"size", module_slice(module, bound).size()}}},
              {"T_prim", tprim},
              {"units", units}};
}

void note_bound(Context& ctx, const SystemPresentation& sys, const std::string& what) {
  ctx.notes.push_back(what + ": gluing relations are enumerated up to total degree " + std::to_string(sys.bound) +
                      " and minimized by a module Groebner basis; no finite generating bound is known, so the result "
                      "is checked against bound " +
                      std::to_string(sys.bound + 2) + (sys.stabilized ? " (stable)." : " (NOT stable)."));
}

json system_block(Context& ctx) {
  auto sys = bbgkz_primitive_presentation(ctx.spec.module(), ctx.spec.beta, ctx.binomial_bound);
  note_bound(ctx, sys, "system");
  return to_json(sys);
}

json rank_block(Context& ctx) {
  Integer rk = rank_formula(ctx.config, ModuleKind::K);
  Integer rki = rank_formula(ctx.config, ModuleKind::KInterior);
  ctx.notes.push_back("rank values are ell * normalized volume and do not depend on beta.");
  return json{{"ell", ctx.config.ell()},
              {"normalized_volume", to_json(normalized_volume(ctx.config))},
              {"rank", to_json(rk)},
              {"rank_K", to_json(rk)},
              {"rank_K_interior", to_json(rki)}};
}

json dual_block(Context& ctx) {
  auto ds = dual_system(ctx.config, ctx.spec.beta, ctx.binomial_bound);
  note_bound(ctx, ds.system, "dual");
  return json{{"beta", to_json(ds.report.beta)},
              {"dual_parameter", to_json(ds.report.dual_parameter)},
              {"epsilon", to_json(ds.report.epsilon)},
              {"rank_dual", to_json(ds.report.rank_dual)},
              {"rank_primal", to_json(ds.report.rank_primal)},
              {"system", to_json(ds.system)},
              {"twisted", ds.report.twisted}};
}

json analysis_block(Context& ctx) {
  const auto& beta = ctx.spec.beta;
  json qdeg, vanishing;
  const std::pair<const char*, ModuleSpec> specs[] = {
      {"K", ModuleSpec::full()}, {"K_interior", ModuleSpec::interior()}, {"K_mod_K_interior", ModuleSpec::boundary()}};
  for (const auto& [name, ms] : specs) {
    qdeg[name] = to_json(quasi_degrees(ms, ctx.config));
    vanishing[name] = vanishing_name(vanishing_test(ms, ctx.config, beta));
  }
  auto cert = regularity_certificate(ctx.config);
  auto split = character_split(ctx.config, ctx.spec.bounds.truncation, ctx.options.threads);
  json dets = json::array();
  for (const auto& piece : split.pieces) {
    std::string s = piece.determinant.to_string();
    if (std::find(dets.begin(), dets.end(), s) == dets.end()) dets.push_back(s);
  }
  if (!cert) ctx.notes.push_back("no homogenizing functional exists, so regularity is not certified.");
  return json{{"character_split",
               {{"certified", split.certified},
                {"characters", split.characters},
                {"determinants", dets},
                {"graded_pieces", split.pieces.size()},
                {"truncation", split.truncation}}},
              {"quasi_degrees", qdeg},
              {"regularity_certificate", cert ? to_json(cert->free_part) : json(nullptr)},
              {"vanishing", vanishing}};
}

json input_block(const ProblemSpec& spec) {
  json cols = json::array();
  for (const auto& c : spec.columns) cols.push_back(to_json(c));
  json module;
  if (spec.module_kind == ModuleKind::Explicit) {
    module = json::array();
    for (const auto& g : spec.module_generators) module.push_back(to_json(g));
  } else {
    module = module_kind_name(spec.module_kind);
  }
  return json{{"beta", to_json(spec.beta)},
              {"columns", cols},
              {"module", module},
              {"torsion_orders", spec.group.torsion_orders()}};
}

json conventions_block() {
  return json{
      {"coefficients", "exact; zeta(e)^k is exp(2*pi*i*k/e)"},
      {"euler", "E_i = sum_j a_ij x_j d_j; generator 1_u carries E_i - (beta - u)_i"},
      {"rank", "ell * normalized volume"},
      {"variables", "d1..dn are derivatives, x1..xn coordinates; Weyl terms are normally ordered (x left of d)"},
      {"volume", "normalized: volume of conv(0, free columns) with the unit simplex at 1"}};
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

PointConfig ProblemSpec::config() const { return PointConfig(group, columns); }

SemigroupModule ProblemSpec::module() const {
  switch (module_kind) {
    case ModuleKind::K:
      return SemigroupModule::full(config());
    case ModuleKind::KInterior:
      return SemigroupModule::interior(config());
    case ModuleKind::Explicit:
      break;
  }
  return SemigroupModule::generated(config(), module_generators);
}

ProblemSpec parse_spec(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Malformed, kModule, "invalid JSON at " + location(text, e.byte) + ": " + e.what());
  }
  if (!j.is_object()) fail(ErrorCode::Malformed, "spec", "expected a JSON object");
  for (const auto& [key, value] : j.items())
    if (key != "torsion_orders" && key != "columns" && key != "beta" && key != "module" && key != "bounds" &&
        key != "name")
      fail(ErrorCode::Malformed, key, "unknown key");

  ProblemSpec spec;
  spec.hash = fnv1a64(text);
  std::vector<long> orders;
  if (j.contains("torsion_orders")) {
    if (!j["torsion_orders"].is_array()) fail(ErrorCode::Malformed, "torsion_orders", "expected an array");
    for (std::size_t i = 0; i < j["torsion_orders"].size(); ++i) {
      std::string field = "torsion_orders[" + std::to_string(i) + "]";
      long o = parse_long(j["torsion_orders"][i], field);
      if (o < 2) fail(ErrorCode::Malformed, field, "torsion orders must be at least 2");
      orders.push_back(o);
    }
  }
  if (!j.contains("columns") || !j["columns"].is_array() || j["columns"].empty())
    fail(ErrorCode::Malformed, "columns", "expected a non-empty array");
  const auto& cols = j["columns"];
  if (!cols[0].is_object() || !cols[0].contains("free") || !cols[0]["free"].is_array())
    fail(ErrorCode::Malformed, "columns[0].free", "expected an array");
  const std::size_t d = cols[0]["free"].size();
  try {
    spec.group = AbelianGroup(orders, d);
  } catch (const Error& e) {
    fail(e.code(), "torsion_orders", e.what());
  }
  for (std::size_t i = 0; i < cols.size(); ++i)
    spec.columns.push_back(parse_element(cols[i], spec.group, d, "columns[" + std::to_string(i) + "]"));

  if (j.contains("beta")) {
    if (!j["beta"].is_array()) fail(ErrorCode::Malformed, "beta", "expected an array");
    for (std::size_t i = 0; i < j["beta"].size(); ++i)
      spec.beta.push_back(parse_value(j["beta"][i], "beta[" + std::to_string(i) + "]"));
    if (spec.beta.size() != d)
      fail(ErrorCode::DimensionMismatch, "beta",
           "expected " + std::to_string(d) + " entries, got " + std::to_string(spec.beta.size()));
  } else {
    spec.beta.assign(d, Cyclotomic(0));
  }

  if (j.contains("module")) {
    const auto& m = j["module"];
    if (m.is_string()) {
      auto s = m.get<std::string>();
      if (s == "K")
        spec.module_kind = ModuleKind::K;
      else if (s == "K_interior")
        spec.module_kind = ModuleKind::KInterior;
      else
        fail(ErrorCode::Malformed, "module", "expected \"K\", \"K_interior\" or a generator list");
    } else if (m.is_array() && !m.empty()) {
      spec.module_kind = ModuleKind::Explicit;
      for (std::size_t i = 0; i < m.size(); ++i)
        spec.module_generators.push_back(parse_element(m[i], spec.group, d, "module[" + std::to_string(i) + "]"));
    } else {
      fail(ErrorCode::Malformed, "module", "expected \"K\", \"K_interior\" or a non-empty generator list");
    }
  }

  if (j.contains("bounds")) {
    const auto& b = j["bounds"];
    if (!b.is_object()) fail(ErrorCode::Malformed, "bounds", "expected an object");
    for (const auto& [key, value] : b.items()) {
      std::string field = "bounds." + key;
      long v = parse_long(value, field);
      if (v < 0) fail(ErrorCode::Malformed, field, "must be non-negative");
      if (key == "h_degree")
        spec.bounds.h_degree = Integer(v);
      else if (key == "binomial_degree")
        spec.bounds.binomial_degree = static_cast<std::size_t>(v);
      else if (key == "truncation")
        spec.bounds.truncation = static_cast<std::size_t>(v);
      else
        fail(ErrorCode::Malformed, field, "unknown bound");
    }
  }
  return spec;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"check", "ideals", "primes", "module", "system", "rank", "dual", "report"};
  return names;
}

std::optional<Command> parse_command(std::string_view name) {
  const auto& names = command_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<Command>(i);
  return std::nullopt;
}

const char* command_name(Command c) { return command_names().at(static_cast<std::size_t>(c)).c_str(); }

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::HypothesisFailure:
      return kExitHypothesis;
    case ErrorCode::BudgetExceeded:
      return kExitBudget;
    case ErrorCode::Malformed:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::UnsupportedCharacterValue:
      return e.module() == kModule ? kExitParse : kExitInternal;
    default:
      return kExitInternal;
  }
}

RunResult run(const ProblemSpec& spec, Command command, const RunOptions& options) {
  Context ctx{spec, spec.config(), {}, options, json::array(), json::array(), std::nullopt};
  ctx.hyp = check_hypotheses(ctx.config);
  ctx.binomial_bound = options.bound ? options.bound : spec.bounds.binomial_degree;
  const bool module_ok = ctx.hyp.spans && ctx.hyp.pointed;

  json out;
  out["schema"] = 1;
  out["command"] = command_name(command);
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(spec.hash));
  out["spec_hash"] = std::string("fnv1a64:") + hash;
  out["input"] = input_block(spec);
  out["conventions"] = conventions_block();
  out["hypotheses"] = hypotheses_block(ctx);

  auto wants = [&](Command c) { return command == c || command == Command::Report; };
  auto gated = [&](Command c, bool ok, const char* name, auto&& block) {
    if (!wants(c)) return;
    if (ok)
      out[name] = block();
    else
      ctx.refused.push_back(name);
  };
  gated(Command::Ideals, true, "ideals", [&] { return ideals_block(ctx); });
  gated(Command::Primes, true, "primes", [&] { return primes_block(ctx); });
  gated(Command::Module, module_ok, "module", [&] { return module_block(ctx); });
  gated(Command::System, ctx.hyp.all(), "system", [&] { return system_block(ctx); });
  gated(Command::Rank, ctx.hyp.all(), "rank", [&] { return rank_block(ctx); });
  gated(Command::Dual, ctx.hyp.all(), "dual", [&] { return dual_block(ctx); });
  gated(Command::Report, ctx.hyp.all(), "analysis", [&] { return analysis_block(ctx); });

  json bounds{{"pair_budget", default_pair_budget()}, {"truncation", spec.bounds.truncation}};
  bounds["binomial_degree"] = ctx.binomial_bound ? json(*ctx.binomial_bound) : json(default_binomial_bound(ctx.config));
  bounds["h_degree"] = spec.bounds.h_degree ? to_json(*spec.bounds.h_degree) : json("auto");
  out["bounds"] = bounds;
  if (!ctx.refused.empty()) {
    ctx.notes.push_back("hypotheses fail; refused: " + ctx.refused.dump());
    out["refused"] = ctx.refused;
  }
  out["notes"] = ctx.notes;

  RunResult result;
  result.json = out.dump(2) + "\n";
  bool failed = !ctx.refused.empty() || (command == Command::Check && !ctx.hyp.all());
  result.exit_code = failed ? kExitHypothesis : kExitOk;
  return result;
}

}  // namespace tgkz
