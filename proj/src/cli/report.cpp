#include "bsw/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bsw/closure/monomial.hpp"
#include "bsw/error.hpp"
#include "bsw/loja/loja.hpp"

namespace bsw::cli {

using nlohmann::ordered_json;
using resolution::codim_to_json;

namespace {

long int_option(const Command& c, std::string_view key, long fallback) {
  auto v = c.option(key);
  return v ? std::stol(*v) : fallback;
}

unsigned positive(long v, const char* what) {
  if (v < 1) throw ValidationError(std::string(what) + " must be at least 1");
  return static_cast<unsigned>(v);
}

ordered_json generators_json(const groebner::Ideal& I) {
  ordered_json out = ordered_json::array();
  for (const auto& g : I.generators()) out.push_back(g.to_string());
  return out;
}

std::string monomial_string(const poly::Ring& ring, const poly::ExponentVector& v) {
  return poly::Polynomial::monomial(ring, v).to_string();
}

ordered_json acyclicity_json(const resolution::AcyclicityReport& a) {
  ordered_json codims = ordered_json::array();
  for (int c : a.codims) codims.push_back(codim_to_json(c));
  return {{"acyclic", a.acyclic},
          {"codims", codims},
          {"failing_k", a.failing_k ? ordered_json(*a.failing_k) : ordered_json(nullptr)}};
}

ordered_json pair_json(const std::optional<std::pair<int, int>>& p) {
  if (!p) return nullptr;
  return {{"r", p->first}, {"codim", codim_to_json(p->second)}};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ValidationError("expected a number, got '" + s + "'");
  return v;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

std::string join_dump(const ordered_json& arr) {
  std::string out = "[";
  for (std::size_t i = 0; i < arr.size(); ++i) out += (i ? "," : "") + arr[i].dump();
  return out + "]";
}

std::map<std::string, poly::Polynomial> poly_bindings(const Session& s) {
  std::map<std::string, poly::Polynomial> out;
  for (const auto& b : s.bindings)
    if (b.kind == BindingKind::Polynomial) out.emplace(b.name, *b.polynomial);
  return out;
}

std::string codim_text(const ordered_json& c) { return c.is_string() ? c.get<std::string>() : c.dump(); }

}  // namespace

Runner::Runner(const Session& session, RunOptions options) : session_(session), options_(std::move(options)) {}

const groebner::Ideal& Runner::ideal(const std::string& name) const {
  const Binding* b = session_.find(name);
  if (!b || b->kind != BindingKind::Ideal) throw ValidationError("'" + name + "' is not a bound ideal");
  return *b->ideal;
}

const resolution::FreeComplex& Runner::complex_of(const std::string& name) {
  auto& slot = complexes_[name];
  if (!slot) {
    resolution::ResolutionOptions opts;
    opts.budget.max_steps = options_.budget;
    slot = std::make_shared<resolution::FreeComplex>(resolution::free_resolution(ideal(name), opts));
  }
  return *slot;
}

const resolution::StrataReport& Runner::strata_of(const std::string& name) {
  auto& slot = strata_[name];
  if (!slot)
    slot = std::make_shared<resolution::StrataReport>(
        resolution::strata(complex_of(name), ideal(name), groebner::Budget{options_.budget}));
  return *slot;
}

constexpr const char* kCodimNote = "codimensions of strata are measured inside Z, not in affine space";

ordered_json Runner::run(const Command& c) {
  ordered_json block;
  block["command"] = c.name;
  block["line"] = c.pos.line;
  block["column"] = c.pos.column;
  block["statement"] = c.text;
  ordered_json inputs = ordered_json::object();
  if (!c.args.empty()) inputs["target"] = c.args[0];
  for (const auto& [k, v] : c.options) inputs[k] = v;
  try {
    ordered_json result = dispatch(c, inputs);
    if (c.name == "strata" || c.name == "check-cm" || c.name == "check-normal" || c.name == "check-bs")
      result["note"] = kCodimNote;
    block["inputs"] = inputs;
    block["status"] = "ok";
    block["result"] = std::move(result);
  } catch (const Error& e) {
    block["inputs"] = inputs;
    block["status"] = "error";
    block["error"] = {{"kind", kind_name(e.kind())}, {"message", e.what()}};
  } catch (const std::exception& e) {
    block["inputs"] = inputs;
    block["status"] = "error";
    block["error"] = {{"kind", "validation"}, {"message", e.what()}};
  }
  block["summary"] = block_summary(block);
  return block;
}

ordered_json Runner::dispatch(const Command& c, ordered_json& inputs) {
  const groebner::Budget budget{options_.budget};
  const std::string target = c.args.empty() ? std::string() : c.args[0];
  if (!target.empty()) inputs["generators"] = generators_json(ideal(target));

  if (c.name == "resolve") {
    const bool plain = !c.option("max_len") && !c.option("grading");
    std::shared_ptr<resolution::FreeComplex> C;
    if (plain) {
      complex_of(target);
      C = complexes_[target];
    } else {
      resolution::ResolutionOptions opts;
      opts.budget = budget;
      opts.max_len = static_cast<int>(int_option(c, "max_len", -1));
      const std::string g = c.option("grading").value_or("auto");
      if (g == "auto") opts.grading = resolution::GradingMode::Auto;
      else if (g == "graded") opts.grading = resolution::GradingMode::Graded;
      else if (g == "ungraded") opts.grading = resolution::GradingMode::Ungraded;
      else throw ValidationError("grading must be auto, graded or ungraded");
      C = std::make_shared<resolution::FreeComplex>(resolution::free_resolution(ideal(target), opts));
    }
    ordered_json out = resolution::complex_to_json(*C);
    out["minimal"] = C->is_minimal();
    out["acyclicity"] = acyclicity_json(resolution::check_acyclicity(*C, budget));
    return out;
  }
  if (c.name == "strata") return resolution::strata_to_json(strata_of(target));
  if (c.name == "check-cm") {
    const auto d = resolution::check_cm_depth(strata_of(target));
    return {{"is_cm", d.is_cm},
            {"depth_lower", d.depth_lower},
            {"depth_exact", d.depth_exact ? ordered_json(*d.depth_exact) : ordered_json(nullptr)}};
  }
  if (c.name == "check-normal") {
    const auto& S = strata_of(target);
    const bool holds = resolution::check_normality_condition(S);
    std::optional<std::pair<int, int>> witness;
    for (const auto& z : S.zr)
      if (!z.empty() && z.codim_in_z < 2 + z.r) {
        witness = std::pair{z.r, z.codim_in_z};
        break;
      }
    if (holds == witness.has_value()) throw StructuralError("normality witness disagrees with the check");
    return {{"holds", holds}, {"witness", pair_json(witness)}};
  }
  if (c.name == "check-bs") {
    const auto& S = strata_of(target);
    const int m = static_cast<int>(int_option(c, "m", 1));
    const auto& a = ideal(*c.option("ideal"));
    inputs["ideal_generators"] = generators_json(a);
    const auto bs = resolution::check_bs_condition(S, a, m, budget);
    ordered_json checked = ordered_json::array();
    for (const auto& p : bs.checked) checked.push_back(pair_json(p));
    return {{"holds", bs.holds}, {"m", m}, {"witness", pair_json(bs.witness)}, {"checked", checked}};
  }
  if (c.name == "member") {
    const auto polys = poly_bindings(session_);
    const auto p = poly::parse_polynomial(*c.option("poly"), session_.ring, &polys);
    const auto r = groebner::ideal_member(p, ideal(target), true, budget);
    ordered_json cof = nullptr;
    if (r.cofactors) {
      cof = ordered_json::array();
      for (const auto& h : *r.cofactors) cof.push_back(h.to_string());
    }
    return {{"poly", p.to_string()}, {"member", r.member}, {"cofactors", cof}};
  }
  if (c.name == "dim") {
    const int d = groebner::krull_dimension(ideal(target), budget);
    return {{"dim", d}, {"codim", codim_to_json(resolution::ambient_codim(ideal(target), budget))}};
  }
  if (c.name == "koszul") {
    const auto C = resolution::koszul_complex(ideal(target).generators());
    ordered_json out = resolution::complex_to_json(C);
    out["acyclicity"] = acyclicity_json(resolution::check_acyclicity(C, budget));
    return out;
  }
  if (c.name == "closure") {
    const auto M = closure::MonomialIdeal::from_ideal(ideal(target));
    const auto cl = closure::newton_closure(M);
    ordered_json gens = ordered_json::array(), added = ordered_json::array();
    for (const auto& g : cl.generators()) {
      gens.push_back(monomial_string(session_.ring, g));
      if (!M.contains(g)) added.push_back(monomial_string(session_.ring, g));
    }
    return {{"generators", gens}, {"added", added}, {"integrally_closed", added.empty()}};
  }
  if (c.name == "bs-verify-monomial") {
    const auto M = closure::MonomialIdeal::from_ideal(ideal(target));
    const unsigned ell = positive(int_option(c, "ell", 1), "ell");
    const long d = int_option(c, "d", 0);
    if (d < 0) throw ValidationError("d must be nonnegative");
    const auto r = closure::bs_verify_monomial(M, ell, static_cast<unsigned>(d));
    return {{"holds", r.holds},
            {"exponent", r.exponent},
            {"ell", r.ell},
            {"counterexample", r.counterexample ? ordered_json(monomial_string(session_.ring, *r.counterexample))
                                                : ordered_json(nullptr)}};
  }

  if (c.name.rfind("germ ", 0) == 0) {
    const auto& S = *session_.semigroup;
    inputs["semigroup"] = S.generators();
    auto germ_ideal = [&](const std::string& name) {
      const Binding* b = session_.find(name);
      inputs["ideal_shifts"] = b->shifts;
      return closure::SemigroupIdeal(S, b->shifts);
    };
    if (c.name == "germ member") {
      const long s = int_option(c, "value", 0);
      const auto A = germ_ideal(*c.option("ideal"));
      const bool member = closure::germ_ideal_member(s, A, S);
      ordered_json cert = nullptr;
      if (member)
        for (long k : A.shifts())
          if (S.contains(s - k)) {
            cert = {{"shift", k}, {"cofactor_value", s - k}};
            break;
          }
      return {{"value", s},
              {"member", member},
              {"certificate", cert},
              {"closure_member", closure::germ_closure_member(s, A, S)}};
    }
    if (c.name == "germ exponent") {
      const auto A = germ_ideal(*c.option("ideal"));
      const unsigned ell = positive(int_option(c, "ell", 1), "ell");
      const std::string mode = c.option("mode").value_or("power");
      closure::ExponentMode m;
      if (mode == "power") m = closure::ExponentMode::Power;
      else if (mode == "closure") m = closure::ExponentMode::ClosurePower;
      else throw ValidationError("mode must be power or closure");
      const auto e = closure::germ_bs_exponent(A, ell, S, m);
      return {{"exponent", e.exponent},
              {"ell", ell},
              {"mode", mode},
              {"witness", e.witness ? ordered_json(*e.witness) : ordered_json(nullptr)}};
    }
    // germ mu
    const long vmax = int_option(c, "vmax", 12);
    const unsigned lmax = positive(int_option(c, "lmax", 4), "lmax");
    const auto mu = closure::huneke_mu(S, vmax, lmax);
    ordered_json witness = nullptr;
    if (mu.witness_ideal) witness = {{"ideal", mu.witness_ideal->shifts()}, {"ell", mu.witness_ell}};
    return {{"mu", mu.mu},
            {"witness", witness},
            {"ideals_checked", mu.ideals_checked},
            {"note", "lower bound from the enumerated ideals with order <= vmax and ell <= lmax"}};
  }
  if (c.name == "loja") return loja(c, inputs);
  throw ValidationError("unknown command '" + c.name + "'");
}

ordered_json Runner::loja(const Command& c, ordered_json& inputs) {
  const poly::Ring& ring = session_.ring;
  const auto polys = poly_bindings(session_);
  const auto phi = poly::parse_polynomial(*c.option("phi"), ring, &polys);

  std::vector<poly::Polynomial> a;
  const std::string a_text = *c.option("a");
  if (const Binding* b = session_.find(a_text); b && b->kind == BindingKind::Ideal) {
    a = b->ideal->generators();
  } else {
    for (const auto& piece : split(a_text, ',')) a.push_back(poly::parse_polynomial(piece, ring, &polys));
  }

  loja::VarietySampler s;
  s.seed = options_.seed;
  s.samples_per_radius = static_cast<std::size_t>(positive(int_option(c, "samples", 12), "samples"));
  const std::string radii = c.option("radii").value_or("1e-1:1e-3:5");
  if (auto parts = split(radii, ':'); parts.size() == 3) {
    s.radii = loja::geometric_radii(parse_double(parts[0]), parse_double(parts[1]),
                                    static_cast<std::size_t>(positive(std::lround(parse_double(parts[2])), "count")));
  } else {
    for (const auto& r : split(radii, ',')) s.radii.push_back(parse_double(r));
  }

  ordered_json sampler;
  if (auto param = c.option("param")) {
    s.kind = loja::SamplerKind::Parametrized;
    for (const auto& e : split(*param, ',')) s.exponents.push_back(static_cast<int>(std::lround(parse_double(e))));
    if (s.exponents.size() != ring->num_vars())
      throw ValidationError("param needs one exponent per variable");
    if (auto h = c.option("hypersurface")) s.check_equations = ideal(*h).generators();
    sampler = {{"kind", "parametrized"}, {"exponents", s.exponents}};
  } else {
    const std::string source = c.option("hypersurface").value_or(c.args.empty() ? std::string() : c.args[0]);
    if (source.empty()) throw ValidationError("loja needs --param or a hypersurface");
    const auto& H = ideal(source);
    if (H.size() != 1) throw ValidationError("hypersurface '" + source + "' must have exactly one generator");
    s.kind = loja::SamplerKind::Hypersurface;
    s.equation = H.generators()[0];
    if (auto v = c.option("solve")) {
      auto idx = ring->index_of(*v);
      if (!idx) throw ValidationError("unknown variable '" + *v + "'");
      s.solve_for = *idx;
    } else {
      // heaviest variable occurring in the equation
      int best = -1;
      for (std::size_t i = 0; i < ring->num_vars(); ++i) {
        bool occurs = false;
        for (const auto& t : s.equation->terms()) occurs = occurs || t.monomial[i] > 0;
        if (occurs && ring->weights()[i] >= best) {
          best = ring->weights()[i];
          s.solve_for = i;
        }
      }
    }
    sampler = {{"kind", "hypersurface"},
               {"equation", s.equation->to_string()},
               {"solve", ring->names()[s.solve_for]}};
  }
  sampler["radii"] = s.radii;
  sampler["samples_per_radius"] = s.samples_per_radius;
  sampler["seed"] = s.seed;
  inputs["sampler"] = sampler;

  const auto pts = loja::sample_variety(s);
  const auto est = loja::loja_exponent_estimate(phi, a, pts);

  ordered_json csv = nullptr;
  if (auto path = c.option("csv")) {
    std::ofstream out(*path);
    if (!out) throw ValidationError("cannot write '" + *path + "'");
    out << "radius,index,abs_a,abs_phi,used\n";
    char line[160];
    for (const auto& p : pts) {
      double av = 0;
      for (const auto& aj : a) av += std::abs(loja::evaluate(aj, p.z));
      const double fv = std::abs(loja::evaluate(phi, p.z));
      const bool used = fv > loja::kUnderflowFloor && av > loja::kUnderflowFloor;
      std::snprintf(line, sizeof line, "%.17g,%zu,%.17g,%.17g,%d\n", p.radius, p.index, av, fv, used ? 1 : 0);
      out << line;
    }
    csv = *path;
  }
  return {{"slope", est.slope},
          {"intercept", est.intercept},
          {"residual", est.residual},
          {"n_points", est.n_points},
          {"radii_range", {est.radii_range.first, est.radii_range.second}},
          {"reliable", est.reliable},
          {"csv", csv},
          {"note", "intercept is log C fitted over the sampled radii; it is not claimed to stabilize"}};
}

ordered_json run_session(const Session& session, const RunOptions& options) {
  ordered_json report;
  report["tool"] = kToolName;
  report["version"] = kToolVersion;
  report["session"] = options.session_name;
  report["seed"] = options.seed;
  report["budget"] = options.budget;
  report["timestamp"] = options.timestamp;
  if (session.ring) {
    report["ring"] = {{"variables", session.ring->names()},
                      {"weights", session.ring->weights()},
                      {"order", std::string(poly::order_name(session.ring->order()))}};
  } else {
    report["ring"] = nullptr;
  }
  report["semigroup"] = session.semigroup ? ordered_json(session.semigroup->generators()) : ordered_json(nullptr);

  Runner runner(session, options);
  ordered_json blocks = ordered_json::array();
  std::size_t failed = 0;
  for (const auto& c : session.commands) {
    blocks.push_back(runner.run(c));
    if (blocks.back()["status"] != "ok") ++failed;
  }
  report["blocks"] = std::move(blocks);
  report["totals"] = {{"commands", session.commands.size()}, {"failed", failed}};
  return report;
}

std::string block_summary(const ordered_json& b) {
  if (b.at("status") == "error")
    return b["error"]["kind"].get<std::string>() + " error: " + b["error"]["message"].get<std::string>();
  const auto& r = b.at("result");
  const std::string cmd = b.at("command");
  auto yes = [](bool v) { return v ? "yes" : "no"; };

  if (cmd == "resolve" || cmd == "koszul") {
    std::string s = "ranks " + r["ranks"].dump();
    if (r.contains("minimal")) s += r["minimal"].get<bool>() ? ", minimal" : ", not minimal";
    const auto& a = r["acyclicity"];
    s += a["acyclic"].get<bool>() ? ", acyclic" : ", not acyclic at k=" + a["failing_k"].dump();
    return s;
  }
  if (cmd == "strata") {
    std::string s = "dim " + r["dim"].dump() + ", codim " + r["codim"].dump() + ", length " +
                    r["resolution_length"].dump() + "; nonempty strata:";
    bool any = false;
    for (const auto& z : r["Zr"])
      if (!z["empty"].get<bool>()) {
        s += " r=" + z["r"].dump() + " (codim_Z " + codim_text(z["codim_in_Z"]) + ")";
        any = true;
      }
    return any ? s : s + " none";
  }
  if (cmd == "check-cm") {
    if (r["is_cm"].get<bool>()) return "Cohen-Macaulay";
    std::string s = "not Cohen-Macaulay, depth >= " + r["depth_lower"].dump();
    if (!r["depth_exact"].is_null()) s += ", depth = " + r["depth_exact"].dump();
    return s;
  }
  if (cmd == "check-normal" || cmd == "check-bs") {
    const std::string what = cmd == "check-normal" ? "normality condition" : "BS condition (m=" + r["m"].dump() + ")";
    if (r["holds"].get<bool>()) return what + " holds";
    return what + " fails at r=" + r["witness"]["r"].dump() + " (codim_Z " + codim_text(r["witness"]["codim"]) + ")";
  }
  if (cmd == "member") {
    if (!r["member"].get<bool>()) return r["poly"].get<std::string>() + " is not a member";
    return r["poly"].get<std::string>() + " is a member, cofactors " + join_dump(r["cofactors"]);
  }
  if (cmd == "dim") return "dim " + r["dim"].dump() + ", codim " + codim_text(r["codim"]);
  if (cmd == "closure") {
    if (r["integrally_closed"].get<bool>()) return "integrally closed";
    return "closure adds " + join_dump(r["added"]);
  }
  if (cmd == "bs-verify-monomial") {
    const std::string inc = "closure(M^" + r["exponent"].dump() + ") in M^" + r["ell"].dump();
    if (r["holds"].get<bool>()) return inc + " holds";
    return inc + " fails at " + r["counterexample"].get<std::string>();
  }
  if (cmd == "germ member")
    return "t^" + r["value"].dump() + " in A: " + yes(r["member"].get<bool>()) +
           "; in closure(A): " + yes(r["closure_member"].get<bool>());
  if (cmd == "germ exponent") {
    std::string s = "N = " + r["exponent"].dump() + " for ell = " + r["ell"].dump();
    if (!r["witness"].is_null()) s += " (t^" + r["witness"].dump() + " certifies N-1 fails)";
    return s;
  }
  if (cmd == "germ mu") {
    std::string s = "mu >= " + r["mu"].dump() + " over " + r["ideals_checked"].dump() + " ideals";
    if (!r["witness"].is_null())
      s += ", witness ideal " + r["witness"]["ideal"].dump() + " with ell " + r["witness"]["ell"].dump();
    return s;
  }
  if (cmd == "loja")
    return "slope " + fmt(r["slope"].get<double>()) + ", residual " + fmt(r["residual"].get<double>()) + " over " +
           r["n_points"].dump() + " points" + (r["reliable"].get<bool>() ? "" : " (unreliable)");
  return r.dump();
}

std::string human_summary(const ordered_json& report) {
  std::string out;
  for (const auto& b : report.at("blocks"))
    out += b["line"].dump() + ":" + b["column"].dump() + " " + b["statement"].get<std::string>() + "\n    " +
           b["summary"].get<std::string>() + "\n";
  return out;
}

int exit_code(const ordered_json& report) {
  int code = 0;
  for (const auto& b : report.at("blocks")) {
    if (b["status"] == "ok") continue;
    if (b["error"]["kind"] == "budget") return 3;
    code = 2;
  }
  return code;
}

std::size_t default_budget() {
  const char* env = std::getenv(kBudgetEnv);
  if (!env || !*env) return groebner::Budget{}.max_steps;
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || env[used] != '\0' || v <= 0)
    throw ValidationError(std::string(kBudgetEnv) + " must be a positive integer");
  return static_cast<std::size_t>(v);
}

}  // namespace bsw::cli
