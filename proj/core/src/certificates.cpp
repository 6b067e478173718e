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

#include "ngsinger/certificates.hpp"

#include <set>

#include "ngsinger/error.hpp"

namespace ngs {

namespace {

constexpr int kVersion = 1;

// Runs a json accessor, turning library exceptions into InvalidCertificate.
template <class Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    fail(Errc::InvalidCertificate, e.what());
  }
}

const json& field_of(const json& j, const char* key) {
  require(j.is_object() && j.contains(key), Errc::InvalidCertificate,
          std::string("missing field '") + key + "'");
  return j.at(key);
}

void expect_kind(const json& j, const std::string& kind) {
  require(guarded([&] { return field_of(j, "kind").get<std::string>(); }) == kind,
          Errc::InvalidCertificate, "expected a " + kind + " certificate");
}

FieldPtr field_from(const json& j) {
  return field_from_descriptor(field_descriptor_from_json(field_of(j, "field")));
}

json vertex_json(const Vertex& v) { return {{"A", to_json(v.A)}, {"a", to_json(v.a)}}; }

Vertex vertex_from_json(const FieldCtx& F, const json& j) {
  return {element_from_json(F, field_of(j, "A")), element_from_json(F, field_of(j, "a"))};
}

json optional_element(const std::optional<Elt>& e) { return e ? to_json(*e) : json(nullptr); }

std::optional<Elt> optional_element_from(const FieldCtx& F, const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return element_from_json(F, j.at(key));
}

}  // namespace

json to_json(const FieldDescriptor& d) {
  return {{"p", d.p}, {"n", d.n}, {"modulus", d.modulus}, {"primitive", d.primitive}};
}

FieldDescriptor field_descriptor_from_json(const json& j) {
  return guarded([&] {
    FieldDescriptor d;
    d.p = field_of(j, "p").get<std::uint32_t>();
    d.n = field_of(j, "n").get<std::uint32_t>();
    d.modulus = field_of(j, "modulus").get<std::vector<std::uint32_t>>();
    d.primitive = field_of(j, "primitive").get<std::vector<std::uint32_t>>();
    require(d.modulus.size() == d.n + 1 && d.primitive.size() == d.n,
            Errc::InvalidCertificate, "descriptor lengths do not match n");
    return d;
  });
}

json to_json(const Elt& e) {
  const auto& F = *e.ctx();
  json power = e.is_zero() ? json(nullptr) : json(F.discrete_log(e));
  return {{"power", power}, {"coords", e.coords()}};
}

Elt element_from_json(const FieldCtx& F, const json& j) {
  return guarded([&] {
    auto coords = field_of(j, "coords").get<std::vector<std::uint32_t>>();
    require(coords.size() == F.n(), Errc::InvalidCertificate, "wrong coordinate count");
    for (auto c : coords) require(c < F.p(), Errc::InvalidCertificate, "coordinate out of range");
    Elt e = F.from_coords(coords);
    const json& power = field_of(j, "power");
    if (power.is_null()) {
      require(e.is_zero(), Errc::InvalidCertificate, "null power for a nonzero element");
    } else {
      require(!e.is_zero() && F.exp(power.get<std::uint64_t>()) == e,
              Errc::InvalidCertificate, "power does not match coordinates");
    }
    return e;
  });
}

json field_certificate(const FieldCtx& F) {
  return {{"kind", "field"},
          {"version", kVersion},
          {"field", to_json(F.descriptor())},
          {"order", F.order()},
          {"primitive_order", F.multiplicative_order(F.primitive())}};
}

json diffset_certificate(const TowerCtx& tc, const std::string& name,
                         std::span<const Elt> elements, std::uint64_t lambda) {
  json elems = json::array();
  for (const auto& e : elements) elems.push_back(to_json(e));
  return {{"kind", "diffset"},
          {"version", kVersion},
          {"field", to_json(tc.ambient().descriptor())},
          {"q", tc.q()},
          {"t", tc.t()},
          {"name", name},
          {"group_order", tc.norm_one_order()},
          {"lambda", lambda},
          {"elements", elems}};
}

json to_json(const SixSolutionCert& cert) {
  json sols = json::array(), decs = json::array();
  for (std::size_t i = 0; i < cert.solutions.size(); ++i)
    sols.push_back({{"element", to_json(cert.solutions[i])}, {"membership", cert.membership[i]}});
  for (const auto& [b, c] : cert.decompositions) decs.push_back({to_json(b), to_json(c)});
  return {{"kind", "six-solution"},
          {"version", kVersion},
          {"field", to_json(cert.field->descriptor())},
          {"q", cert.q},
          {"A", to_json(cert.A)},
          {"solutions", sols},
          {"decompositions", decs},
          {"method", cert.method}};
}

SixSolutionCert six_solution_from_json(const json& j) {
  expect_kind(j, "six-solution");
  SixSolutionCert c;
  c.field = field_from(j);
  const auto& F = *c.field;
  guarded([&] {
    c.q = field_of(j, "q").get<std::uint64_t>();
    c.A = element_from_json(F, field_of(j, "A"));
    for (const auto& s : field_of(j, "solutions")) {
      c.solutions.push_back(element_from_json(F, field_of(s, "element")));
      c.membership.push_back(field_of(s, "membership").get<int>());
    }
    for (const auto& d : field_of(j, "decompositions")) {
      require(d.is_array() && d.size() == 2, Errc::InvalidCertificate, "bad decomposition");
      c.decompositions.emplace_back(element_from_json(F, d[0]), element_from_json(F, d[1]));
    }
    c.method = field_of(j, "method").get<std::string>();
    return 0;
  });
  return c;
}

json to_json(const BicliqueCert& cert) {
  json left = json::array(), right = json::array();
  for (const auto& v : cert.left) left.push_back(vertex_json(v));
  for (const auto& v : cert.right) right.push_back(vertex_json(v));
  return {{"kind", "biclique"},
          {"version", kVersion},
          {"field", to_json(cert.field->descriptor())},
          {"q", cert.q},
          {"t", cert.t},
          {"left", left},
          {"right", right},
          {"method", cert.method},
          {"construction",
           {{"A", optional_element(cert.A)},
            {"C", optional_element(cert.C)},
            {"D", optional_element(cert.D)}}},
          {"verified", true}};
}

BicliqueCert biclique_from_json(const json& j) {
  expect_kind(j, "biclique");
  BicliqueCert c;
  c.field = field_from(j);
  const auto& F = *c.field;
  guarded([&] {
    c.q = field_of(j, "q").get<std::uint64_t>();
    c.t = field_of(j, "t").get<std::uint32_t>();
    for (const auto& v : field_of(j, "left")) c.left.push_back(vertex_from_json(F, v));
    for (const auto& v : field_of(j, "right")) c.right.push_back(vertex_from_json(F, v));
    c.method = field_of(j, "method").get<std::string>();
    if (j.contains("construction")) {
      const auto& k = j.at("construction");
      c.A = optional_element_from(F, k, "A");
      c.C = optional_element_from(F, k, "C");
      c.D = optional_element_from(F, k, "D");
    }
    return 0;
  });
  return c;
}

VerifyOutcome verify_certificate(const json& j) {
  const auto kind = guarded([&] { return field_of(j, "kind").get<std::string>(); });
  auto check = [](bool ok, const std::string& what) {
    require(ok, Errc::VerificationFailed, what);
  };
  if (kind == "field") {
    auto F = field_from(j);
    guarded([&] {
      check(field_of(j, "order").get<std::uint64_t>() == F->order(), "order mismatch");
      check(field_of(j, "primitive_order").get<std::uint64_t>() == F->group_order(),
            "primitive order mismatch");
      return 0;
    });
    return {kind, "F_" + std::to_string(F->p()) + "^" + std::to_string(F->n()) +
                      " with primitive element of order " + std::to_string(F->group_order())};
  }
  if (kind == "diffset") {
    auto F = field_from(j);
    auto [q, t, lambda, group_order] = guarded([&] {
      return std::tuple{field_of(j, "q").get<std::uint64_t>(), field_of(j, "t").get<std::uint32_t>(),
                        field_of(j, "lambda").get<std::uint64_t>(),
                        field_of(j, "group_order").get<std::uint64_t>()};
    });
    auto tc = TowerCtx::over(F, q, t);
    auto group = norm_one_group(tc);
    check(group.size() == group_order, "group order mismatch");
    std::vector<Elt> D;
    guarded([&] {
      for (const auto& e : field_of(j, "elements")) D.push_back(element_from_json(*F, e));
      return 0;
    });
    for (const auto& e : D) check(group.contains(e), "element outside the norm-one group");
    check(std::set<Elt>(D.begin(), D.end()).size() == D.size(), "repeated element");
    auto r = verify_difference_set(group, D, lambda);
    check(r.ok, "not a difference set with the stated lambda");
    return {kind, "(" + std::to_string(r.group_order) + ", " + std::to_string(r.set_size) + ", " +
                      std::to_string(r.lambda) + ") difference set"};
  }
  if (kind == "six-solution") {
    auto c = six_solution_from_json(j);
    auto tc = TowerCtx::over(c.field, c.q, 3);
    verify_six_solution_cert(*tc, c);
    check(triple_norm_scan(*tc, c.A).size() == 6, "full scan does not give six solutions");
    return {kind, "six solutions for A = U^" + std::to_string(c.field->discrete_log(c.A))};
  }
  if (kind == "biclique") {
    auto c = biclique_from_json(j);
    check(c.t >= 3, "t must be at least 3");
    auto tc = TowerCtx::over(c.field, c.q, c.t - 1);
    verify_biclique(*tc, c);
    return {kind, "K_{" + std::to_string(c.left.size()) + "," + std::to_string(c.right.size()) +
                      "} in NG(" + std::to_string(c.q) + "," + std::to_string(c.t) + ")"};
  }
  fail(Errc::InvalidCertificate, "unknown certificate kind '" + kind + "'");
}

}  // namespace ngs
