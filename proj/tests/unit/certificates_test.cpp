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

#include <gtest/gtest.h>

#include <functional>

#include "ngsinger/certificates.hpp"
#include "ngsinger/error.hpp"

namespace ngs {
namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no ngs::Error thrown";
  return Errc::OracleMismatch;
}

TEST(ElementJsonTest, RoundTrip) {
  auto F = make_extension(3, 4);
  for (std::uint64_t c = 0; c < F->order(); c += 5) {
    auto e = F->element(c);
    EXPECT_EQ(element_from_json(*F, to_json(e)), e);
  }
  auto j = to_json(F->exp(7));
  EXPECT_EQ(j["power"], 7);
  j["power"] = 8;
  EXPECT_EQ(code_of([&] { element_from_json(*F, j); }), Errc::InvalidCertificate);
  EXPECT_TRUE(to_json(F->zero())["power"].is_null());
}

TEST(FieldCertTest, VerifiesAndDetectsWrongOrder) {
  auto F = make_extension(2, 12, Poly(2, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}));
  auto j = field_certificate(*F);
  EXPECT_EQ(j["field"]["modulus"], json({1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}));
  EXPECT_EQ(verify_certificate(j).kind, "field");
  j["order"] = 4095;
  EXPECT_EQ(code_of([&] { verify_certificate(j); }), Errc::VerificationFailed);
}

TEST(DiffsetCertTest, H1AndTamper) {
  auto pf = make_planar_field(4);
  auto j = diffset_certificate(*pf.tower, "H1", pf.sets.H1, 1);
  EXPECT_NO_THROW(verify_certificate(j));
  j["elements"].erase(j["elements"].begin());
  EXPECT_EQ(code_of([&] { verify_certificate(j); }), Errc::VerificationFailed);
}

TEST(SixSolutionCertTest, RoundTripAndTamper) {
  auto pf = make_planar_field(5);
  auto cert = find_six_char2mod3(pf);
  auto j = to_json(cert);
  auto back = six_solution_from_json(j);
  EXPECT_EQ(to_json(back), j);
  EXPECT_EQ(verify_certificate(j).kind, "six-solution");
  j["solutions"][0]["membership"] = 3 - j["solutions"][0]["membership"].get<int>();
  EXPECT_EQ(code_of([&] { verify_certificate(j); }), Errc::VerificationFailed);
}

TEST(BicliqueCertTest, RoundTripAndTamper) {
  auto pf = make_planar_field(7);
  auto b = build_k46(pf.tower, find_six_any(pf));
  auto j = to_json(b);
  EXPECT_EQ(to_json(biclique_from_json(j)), j);
  EXPECT_FALSE(j["construction"]["D"].is_null());
  EXPECT_EQ(verify_certificate(j).summary, "K_{4,6} in NG(7,4)");
  j["right"][2] = j["right"][3];
  EXPECT_EQ(code_of([&] { verify_certificate(j); }), Errc::VerificationFailed);
}

TEST(BicliqueCertTest, SerializationIsDeterministic) {
  auto make = [] {
    auto pf = make_planar_field(8);
    return to_json(build_k46(pf.tower, find_six_char2mod3(pf))).dump(2);
  };
  EXPECT_EQ(make(), make());
}

TEST(VerifyCertificateTest, Malformed) {
  EXPECT_EQ(code_of([] { verify_certificate(json::object()); }), Errc::InvalidCertificate);
  EXPECT_EQ(code_of([] { verify_certificate({{"kind", "poem"}}); }), Errc::InvalidCertificate);
  auto F = make_extension(5, 2);
  auto j = field_certificate(*F);
  j["field"]["modulus"] = {1, 0, 1};
  EXPECT_EQ(code_of([&] { verify_certificate(j); }), Errc::ReduciblePoly);
  j["field"]["modulus"] = "x";
  EXPECT_EQ(code_of([&] { verify_certificate(j); }), Errc::InvalidCertificate);
}

}  // namespace
}  // namespace ngs
