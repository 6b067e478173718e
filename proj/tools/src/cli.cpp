// Copyright 2026 The ngsinger Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ngsinger_cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "ngsinger/certificates.hpp"
#include "ngsinger/error.hpp"

namespace ngs::cli {

namespace {

struct Options {
  std::optional<std::uint64_t> q;
  std::uint32_t t = 0;
  std::optional<std::uint32_t> p, k;
  std::string modulus;
  std::optional<std::uint64_t> A;
  std::uint64_t seed = 0;
  std::optional<double> budget_seconds;
  std::string out;
  std::string verify;
  std::string action;
  std::vector<std::size_t> params;
  std::uint64_t samples = 0;
};

// What a command hands back to the envelope.
struct Outcome {
  bool pass = true;
  std::string reason;
  json payload = json::object();
  std::optional<json> certificate;
};

using Handler = std::function<Outcome(const Options&)>;

[[noreturn]] void usage(const std::string& what) { fail(Errc::PreconditionFailed, what); }

std::uint64_t need_q(const Options& o) {
  if (!o.q) usage("--q is required");
  return *o.q;
}

std::uint32_t degree_or(const Options& o, std::uint32_t fallback) { return o.t ? o.t : fallback; }

std::vector<std::uint32_t> parse_coeffs(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      auto v = std::stoul(item, &used);
      if (used != item.size()) usage("bad modulus coefficient '" + item + "'");
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::logic_error&) {
      usage("bad modulus coefficient '" + item + "'");
    }
  }
  if (out.empty()) usage("empty modulus");
  return out;
}

// The degree-t tower over F_q, with the user's modulus for F_{q^t} if given.
TowerPtr make_tower(const Options& o, std::uint32_t t) {
  auto pp = PrimePower::from_q(need_q(o));
  if (o.modulus.empty()) return TowerCtx::make(pp.q, t);
  auto F = make_extension(pp.p, pp.k * t, Poly(pp.p, parse_coeffs(o.modulus)));
  return TowerCtx::over(F, pp.q, t);
}

Elt element_A(const Options& o, const FieldCtx& F) {
  if (!o.A) usage("--A is required");
  require(*o.A < F.group_order(), Errc::PreconditionFailed, "--A must be below p^n - 1");
  return F.exp(*o.A);
}

json powers(const std::vector<Elt>& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(e.ctx()->discrete_log(e));
  return out;
}

json diffset_json(const DiffSetCert& r) {
  return {{"group_order", r.group_order}, {"set_size", r.set_size}, {"lambda", r.lambda},
          {"min_count", r.min_count},     {"max_count", r.max_count}, {"ok", r.ok}};
}

SixSolutionCert find_six(const PlanarField& pf) {
  const auto q = pf.tower->q();
  if (q > 2 && q % 3 == 2) return find_six_char2mod3(pf);
  if (pf.tower->p() == 3 && q >= 9) return find_six_char3(pf);
  return find_six_any(pf);
}

// ---------------------------------------------------------------------------

Outcome cmd_field(const Options& o) {
  if (!o.p || !o.k) usage("field needs --p and --k");
  std::optional<Poly> mod;
  if (!o.modulus.empty()) mod = Poly(*o.p, parse_coeffs(o.modulus));
  auto F = make_extension(*o.p, *o.k, mod);
  Outcome r;
  r.certificate = field_certificate(*F);
  r.payload = *r.certificate;
  r.payload["modulus_text"] = F->modulus().to_string();
  r.payload["x_is_primitive"] = F->is_primitive(F->x());
  return r;
}

Outcome cmd_diffset(const Options& o) {
  const auto t = degree_or(o, 3);
  auto tc = make_tower(o, t);
  auto group = norm_one_group(tc);
  Outcome r;
  if (t == 3) {
    auto pf = make_planar_field(tc);
    if (o.action == "list") {
      r.payload = {{"H1", powers(pf.sets.H1)}, {"H2", powers(pf.sets.H2)}};
    } else if (o.action == "verify") {
      auto r1 = verify_difference_set(group, pf.sets.H1, 1);
      auto r2 = verify_difference_set(group, pf.sets.H2, 1);
      r.pass = r1.ok && r2.ok;
      if (!r.pass) r.reason = "count table is not constant";
      r.certificate = diffset_certificate(*tc, "H1", pf.sets.H1, 1);
      r.payload = {{"H1", diffset_json(r1)}, {"H2", diffset_json(r2)}};
    } else {
      auto b = equivalence_to_singer(pf);
      r.payload = {{"domain", b.domain_size}, {"image", b.image_size}, {"target", b.target_size}};
    }
    return r;
  }
  auto gs = general_sets(group);
  auto sp = singer_parameters(tc->q(), t);
  if (o.action == "list") {
    r.payload = {{"D_t", powers(gs.Dt)}};
  } else if (o.action == "verify") {
    auto d = verify_difference_set(group, gs.Dt, sp.lambda);
    r.pass = d.ok;
    if (!r.pass) r.reason = "count table is not constant";
    r.certificate = diffset_certificate(*tc, "D_t", gs.Dt, sp.lambda);
    r.payload = {{"D_t", diffset_json(d)}};
  } else {
    auto b = hilbert90_bijection(*tc, gs.St, gs.Dt);
    r.payload = {{"domain", b.domain_size}, {"image", b.image_size}, {"target", b.target_size}};
  }
  return r;
}

Outcome cmd_mixedrep(const Options& o) {
  const auto t = degree_or(o, 3);
  auto tc = make_tower(o, t);
  const auto& F = tc->ambient();
  Elt A = element_A(o, F);
  Outcome r;
  if (t == 3) {
    auto m = mixed_rep_planar(*tc, A);
    r.payload = {{"A", F.discrete_log(A)},
                 {"A1", F.discrete_log(m.A1)},
                 {"A2", F.discrete_log(m.A2)}};
    return r;
  }
  json pairs = json::array();
  for (const auto& [b, c] : f_tA_mixed_reps(*tc, A))
    pairs.push_back({F.discrete_log(b), F.discrete_log(c)});
  r.payload = {{"A", F.discrete_log(A)}, {"representations", pairs}};
  return r;
}

Outcome cmd_normsys(const Options& o) {
  auto pf = make_planar_field(make_tower(o, 3));
  const auto& tc = *pf.tower;
  const auto& F = tc.ambient();
  Outcome r;
  const auto& a = o.action;
  if (a == "solve-norm1") {
    auto sols = solve_norm1(pf);
    r.payload = {{"count", sols.size()}, {"solutions", powers(sols)}};
  } else if (a == "solve-3eq") {
    Elt A = element_A(o, F);
    auto sols = solve_3eq(pf, A);
    json list = json::array();
    for (const auto& y : sols)
      list.push_back({{"power", F.discrete_log(y)}, {"membership", pf.membership(y)}});
    r.payload = {{"A", F.discrete_log(A)}, {"count", sols.size()}, {"solutions", list}};
    if (sols.size() == 6) r.certificate = to_json(make_six_solution_cert(pf, A, sols, "solve-3eq"));
  } else if (a == "find-six") {
    r.certificate = to_json(find_six(pf));
    r.payload = *r.certificate;
  } else if (a == "sigma-check") {
    auto s = sigma_checks(pf);
    r.pass = s.ok;
    if (!r.pass) r.reason = "sigma identity failed";
    r.payload = {{"sigma_group_is_zero", s.sigma_group.is_zero()},
                 {"sigma_group_minus_one_is_minus_one", s.sigma_group_minus_one == -F.one()},
                 {"h_star_products_distinct", s.h_star_products_distinct},
                 {"ok", s.ok}};
    if (s.sigma_h1_star) r.payload["sigma_h1_star_is_zero"] = s.sigma_h1_star->is_zero();
    if (s.sigma_h2_star) r.payload["sigma_h2_star_is_zero"] = s.sigma_h2_star->is_zero();
  } else if (a == "eta-sum") {
    auto v = eta_character_sum(PrimePower::from_q(tc.q()));
    r.pass = v == -1;
    if (!r.pass) r.reason = "eta sum differs from -1";
    r.payload = {{"eta_sum", v}};
  } else {
    std::size_t checked = 0;
    for (const auto& C : pf.union_sorted()) {
      if (C.is_one()) continue;
      dC_identities(pf, C);
      minimal_poly_from_trace(pf, C);
      ++checked;
    }
    r.payload = {{"checked", checked}};
  }
  return r;
}

Outcome cmd_ng(const Options& o) {
  const auto t = degree_or(o, 4);
  require(t >= 3, Errc::PreconditionFailed, "NG(q, t) needs t >= 3");
  Deadline deadline(o.budget_seconds);
  Outcome r;
  if (o.action == "k46-build") {
    require(t == 4, Errc::PreconditionFailed, "k46-build needs t = 4");
    auto pf = make_planar_field(make_tower(o, 3));
    auto cert = build_k46(pf.tower, find_six(pf));
    r.certificate = to_json(cert);
    r.payload = *r.certificate;
    return r;
  }
  NGGraph g(make_tower(o, t - 1));
  r.payload = {{"q", g.q()}, {"t", g.t()}, {"vertices", g.size()}};
  if (o.action == "k46-search") {
    const std::size_t s = o.params.size() > 0 ? o.params[0] : 6;
    const std::size_t left = o.params.size() > 1 ? o.params[1] : 4;
    g.materialize();
    auto found = search_biclique(g, s, left, deadline);
    r.payload["s"] = s;
    r.payload["left"] = left;
    r.payload["result"] = found ? "found" : "absent";
    if (found) {
      r.certificate = to_json(*found);
      r.payload["certificate"] = *r.certificate;
    }
  } else if (o.action == "free-check") {
    const std::size_t size = o.params.size() > 0 ? o.params[0] : 4;
    const std::size_t s = o.params.size() > 1 ? o.params[1] : 7;
    if (g.size() <= 5000) g.materialize();
    require(o.samples > 0 || g.materialized(), Errc::BoundExceeded,
            "graph too large for an exhaustive check; pass --samples");
    auto f = check_ktt_free(g, size, s, o.samples, o.seed, deadline);
    r.pass = f.free;
    if (!r.pass) r.reason = "a set reaches the common-neighbor threshold";
    r.payload.update({{"size", size},
                      {"s", s},
                      {"free", f.free},
                      {"mode", f.exhaustive ? "exhaustive" : "sampled"},
                      {"sets_checked", f.sets_checked},
                      {"seed", f.seed},
                      {"max_common", f.max_common},
                      {"counterexample", f.counterexample}});
  } else if (o.action == "count-k46") {
    g.materialize();
    auto c = count_k46(g, o.samples ? o.samples : 2000, o.seed, deadline);
    r.payload.update({{"label", c.exact ? "EXACT" : "ESTIMATE"},
                      {"value", c.value},
                      {"ci95", {c.ci_low, c.ci_high}},
                      {"samples", c.samples},
                      {"seed", c.seed}});
  } else {
    auto d = degree_law(g);
    const bool loops_ok = g.tower()->p() != 2 || d.loops == 0;
    r.pass = d.ok && loops_ok;
    if (!r.pass) r.reason = d.ok ? "loop in characteristic 2" : "degree law violated";
    r.payload.update({{"expected_degree", d.expected},
                      {"min_degree", d.min_degree},
                      {"max_degree", d.max_degree},
                      {"ordered_adjacent_pairs", d.ordered_adjacent_pairs},
                      {"loops", d.loops}});
  }
  return r;
}

// ---------------------------------------------------------------------------

struct CheckList {
  json items = json::array();
  bool pass = true;

  void add(const std::string& name, bool ok, json detail = nullptr) {
    items.push_back({{"name", name}, {"status", ok ? "pass" : "fail"}, {"detail", detail}});
    pass = pass && ok;
  }
  // Runs fn, recording ngs::Error (other than budget exhaustion) as a failure.
  void run(const std::string& name, const std::function<json()>& fn) {
    try {
      add(name, true, fn());
    } catch (const Error& e) {
      if (e.code() == Errc::BudgetExceeded) throw;
      add(name, false, e.what());
    }
  }
};

std::optional<json> repro_f16(CheckList& c) {
  auto F = make_extension(2, 12, Poly(2, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}));
  auto tc = TowerCtx::over(F, 16, 3);
  auto pf = make_planar_field(tc);
  const Elt U = F->x(), A = F->exp(405);
  c.add("f16: X is primitive in F_4096", F->is_primitive(U) && F->primitive() == U);
  c.add("f16: U^405 in N \\ {1}", tc->norm(A).is_one() && !A.is_one());
  auto sols = solve_3eq(pf, A);
  std::set<std::uint64_t> got;
  for (const auto& y : sols) got.insert(F->discrete_log(y));
  c.add("f16: solution powers", got == std::set<std::uint64_t>{1065, 1725, 2130, 2370, 2775, 3435},
        powers(sols));
  bool tags = true;
  for (auto k : {1725u, 2775u, 3435u}) tags = tags && (pf.membership(F->exp(k)) & 1);
  for (auto k : {1065u, 2130u, 2370u}) tags = tags && (pf.membership(F->exp(k)) & 2);
  c.add("f16: H1 / H2 membership", tags);
  c.add("f16: decompositions",
        F->exp(1065) * F->exp(3435) == A && F->exp(1725) * F->exp(2775) == A &&
            F->exp(2130) * F->exp(2370) == A);
  if (sols.size() != 6) return std::nullopt;
  return to_json(make_six_solution_cert(pf, A, sols, "solve-3eq"));
}

void repro_no_k46_small(CheckList& c, const Deadline& deadline) {
  for (std::uint64_t q : {2, 3, 4}) {
    c.run("no K_{4,6} in NG(" + std::to_string(q) + ",4)", [&] {
      auto g = ng_build(q, 4);
      g.materialize();
      auto found = search_biclique(g, 6, 4, deadline);
      if (found) fail(Errc::VerificationFailed, "search found a K_{4,6}");
      return json("absent");
    });
  }
}

void repro_rest(CheckList& c, const Deadline& deadline) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    c.run("H1 difference set and Singer equivalence, q=" + std::to_string(q), [&] {
      auto pf = make_planar_field(q);
      auto d = verify_difference_set(pf.group, pf.sets.H1, 1);
      if (!d.ok) fail(Errc::VerificationFailed, "not a planar difference set");
      equivalence_to_singer(pf);
      return json(d.set_size);
    });
  }
  for (std::uint64_t q : {5, 7, 8, 9, 11, 13, 16}) {
    deadline.check();
    c.run("K_{4,6} construction in NG(" + std::to_string(q) + ",4)", [&] {
      auto pf = make_planar_field(q);
      auto six = find_six(pf);
      build_k46(pf.tower, six);
      return json(six.method);
    });
  }
  for (std::uint64_t q : {2, 3}) {
    c.run("K_{4,7}-free NG(" + std::to_string(q) + ",4)", [&] {
      auto g = ng_build(q, 4);
      g.materialize();
      auto f = check_ktt_free(g, 4, 7, 0, 0, deadline);
      if (!f.free) fail(Errc::VerificationFailed, "four vertices with seven common neighbors");
      return json(f.max_common);
    });
  }
}

Outcome cmd_repro(const Options& o) {
  Deadline deadline(o.budget_seconds);
  CheckList c;
  Outcome r;
  if (o.action == "f16" || o.action == "all") r.certificate = repro_f16(c);
  if (o.action == "no-k46-small" || o.action == "all") repro_no_k46_small(c, deadline);
  if (o.action == "all") repro_rest(c, deadline);
  r.pass = c.pass;
  if (!r.pass) r.reason = "at least one check failed";
  r.payload = {{"checks", c.items}};
  return r;
}

Outcome cmd_verify(const Options& o) {
  const std::string path = !o.verify.empty() ? o.verify : o.action;
  if (path.empty()) usage("verify needs a certificate file");
  std::ifstream in(path);
  require(in.good(), Errc::InvalidCertificate, "cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    fail(Errc::InvalidCertificate, e.what());
  }
  auto v = verify_certificate(j);
  Outcome r;
  r.payload = {{"file", path}, {"kind", v.kind}, {"summary", v.summary}};
  return r;
}

// ---------------------------------------------------------------------------

json envelope(const std::string& command, const std::string& status, const std::string& reason,
              const json& payload, double elapsed_ms) {
  return {{"command", command},
          {"status", status},
          {"reason", reason.empty() ? json(nullptr) : json(reason)},
          {"payload", payload},
          {"elapsed_ms", elapsed_ms}};
}

}  // namespace

CliResult run(const std::vector<std::string>& args) {
  CLI::App app{"Norm graphs, Singer difference sets and K_{4,6} certificates", "ngsinger"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--q", o.q, "Base field order q");
  app.add_option("--t", o.t, "Extension degree (graph parameter for ng)");
  app.add_option("--p", o.p, "Characteristic (field)");
  app.add_option("--k", o.k, "Degree over F_p (field)");
  app.add_option("--modulus", o.modulus, "Comma-separated ascending modulus coefficients");
  app.add_option("--A", o.A, "Exponent k of A = g^k for the ambient primitive g");
  app.add_option("--seed", o.seed, "Seed for sampling modes");
  app.add_option("--samples", o.samples, "Sample count for sampling modes");
  app.add_option("--budget-seconds", o.budget_seconds, "Wall-clock budget for searches");
  app.add_option("--out", o.out, "Write the certificate to this file");
  app.add_option("--verify", o.verify, "Certificate file for verify");

  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto sub = [&](const char* name, const char* help, Handler h) {
    auto* s = app.add_subcommand(name, help)->fallthrough();
    commands.emplace_back(s, std::move(h));
    return s;
  };
  sub("field", "Build F_{p^k} and certify its primitive element", cmd_field);
  sub("diffset", "Planar or general Singer difference sets", cmd_diffset)
      ->add_option("action", o.action)
      ->required()
      ->check(CLI::IsMember({"list", "verify", "singer-equivalence"}));
  sub("mixedrep", "Mixed representation A = A1 A2", cmd_mixedrep);
  sub("normsys", "Norm equation systems over the cubic tower", cmd_normsys)
      ->add_option("action", o.action)
      ->required()
      ->check(CLI::IsMember(
          {"solve-norm1", "solve-3eq", "find-six", "sigma-check", "eta-sum", "dc-identities"}));
  auto* ng = sub("ng", "Projective norm graph NG(q, t)", cmd_ng);
  ng->add_option("action", o.action)
      ->required()
      ->check(CLI::IsMember({"k46-build", "k46-search", "free-check", "count-k46", "degree-law"}));
  ng->add_option("params", o.params, "k46-search: s [left]; free-check: size s");
  sub("repro", "Reproduce the published computations", cmd_repro)
      ->add_option("name", o.action)
      ->required()
      ->check(CLI::IsMember({"f16", "no-k46-small", "all"}));
  sub("verify", "Re-verify a certificate file", cmd_verify)->add_option("file", o.action);

  std::vector<std::string> argv_store{"ngsinger"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  CliResult result;
  std::ostringstream out, err;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    result.exit_code = app.exit(e, out, err) == 0 ? kPass : kUsage;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  std::string name;
  Handler handler;
  for (auto& [s, h] : commands)
    if (s->parsed()) name = s->get_name(), handler = h;

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  };
  json env;
  try {
    Outcome r = handler(o);
    if (!o.out.empty()) {
      require(r.certificate.has_value(), Errc::PreconditionFailed,
              "this command produced no certificate for --out");
      std::ofstream f(o.out, std::ios::binary);
      require(f.good(), Errc::PreconditionFailed, "cannot write " + o.out);
      f << r.certificate->dump(2) << "\n";
    }
    result.exit_code = r.pass ? kPass : kFail;
    env = envelope(name, r.pass ? "pass" : "fail", r.reason, r.payload, elapsed());
  } catch (const Error& e) {
    if (e.code() == Errc::BudgetExceeded)
      result.exit_code = kBudget;
    else
      result.exit_code = is_input_error(e.code()) ? kUsage : kFail;
    const char* status = result.exit_code == kBudget  ? "budget-exceeded"
                         : result.exit_code == kUsage ? "error"
                                                      : "fail";
    env = envelope(name, status,
                   std::string(errc_name(e.code())), {{"message", e.what()}}, elapsed());
  }
  result.out = env.dump(2) + "\n";
  result.err = err.str();
  return result;
}

}  // namespace ngs::cli
