#include <gtest/gtest.h>

#include "hclab/constructions.hpp"
#include "hclab/error.hpp"
#include "hclab/io.hpp"
#include "hclab/orbit.hpp"
#include "hclab/scenario.hpp"
#include "test_support.hpp"

using namespace hclab;
using hclab::io::Json;
using hclab::testing::D;
using hclab::testing::e;
using hclab::testing::V;

TEST(Io, DyadicEncoding) {
  EXPECT_EQ(io::to_json(D("3")), Json(3));
  EXPECT_EQ(io::to_json(D("-3/2^4")), Json("-3/2^4"));
  EXPECT_EQ(io::dyadic_from_json(Json("5/2^1")), D("5/2"));
  EXPECT_EQ(io::dyadic_from_json(Json(-7)), -7);
  EXPECT_THROW(io::dyadic_from_json(Json(0.5)), ParseError);
  const Dyadic huge = Dyadic::pow2(80);
  EXPECT_EQ(io::dyadic_from_json(io::to_json(huge)), huge);
}

TEST(Io, VectorTriples) {
  const SparseVector x = V("{1:3/2^2, 4:-5}");
  EXPECT_EQ(io::to_json(x).dump(), "[[1,3,2],[4,-5,0]]");
  EXPECT_EQ(io::vector_from_json(io::to_json(x)), x);
  EXPECT_EQ(io::vector_from_json(Json("{2:1/2^1}")), V("{2:1/2^1}"));
  EXPECT_THROW(io::vector_from_json(Json::parse("[[1,2,1]]")), ParseError);  // not canonical
  EXPECT_THROW(io::vector_from_json(Json::parse("[[3,1,0],[1,1,0]]")), ParseError);
  EXPECT_THROW(io::vector_from_json(Json::parse("[[0,1,0]]")), ParseError);
  EXPECT_THROW(io::vector_from_json(Json::parse("[[1,0,0]]")), ParseError);
}

TEST(Io, OperatorRoundTrip) {
  const std::vector<Operator> ops{
      identity_op(),
      scale(2, backward_shift()),
      scale(D("1/2"), forward_shift()),
      build_S(),
      build_T(BiorthogonalSystem::odd()),
      compose(scale(2, backward_shift()), power(forward_shift(), 3)),
      weighted_forward_shift(WeightRule::constant(D("-3/4"))),
  };
  for (const auto& op : ops) {
    EXPECT_EQ(io::operator_from_json(io::to_json(op)), op) << describe(op);
    EXPECT_EQ(io::parse_operator(io::to_json(op).dump()), op);
  }
  EXPECT_EQ(io::parse_operator("F"), forward_shift());
  EXPECT_EQ(io::parse_operator(R"({"compose":["B","F","B"]})"),
            compose(backward_shift(), compose(forward_shift(), backward_shift())));
  EXPECT_THROW(io::parse_operator("Q"), ParseError);
  EXPECT_THROW(io::parse_operator(R"({"scale":[0.5,"B"]})"), ParseError);
  EXPECT_THROW(io::parse_operator(R"({"power":["B"]})"), ParseError);
}

TEST(Io, SubspaceAndSequence) {
  for (const auto& m : {SubspaceSpec::odd(NormKind::Sup), SubspaceSpec::all(NormKind::L1),
                        SubspaceSpec::progression(3, 2, NormKind::Sup),
                        SubspaceSpec::explicit_indices({2, 9}, NormKind::L1)})
    EXPECT_EQ(io::subspace_from_json(io::to_json(m)), m);
  EXPECT_EQ(io::parse_sequence("2k"), PowerSequence(2, 0));
  EXPECT_EQ(io::parse_sequence("2k+1"), PowerSequence(2, 1));
  EXPECT_EQ(io::parse_sequence("3k-1"), PowerSequence(3, -1));
  EXPECT_EQ(io::parse_sequence("k"), PowerSequence(1, 0));
  EXPECT_EQ(io::parse_sequence("4,2"), PowerSequence(4, 2));
  EXPECT_THROW(io::parse_sequence("k^2"), ParseError);
}

TEST(Io, ScenarioRoundTrip) {
  for (const auto& name : builtin_scenario_names()) {
    const Scenario s = *builtin_scenario(name);
    const Json j = scenario_to_json(s);
    EXPECT_EQ(scenario_from_json(j), s) << name;
    EXPECT_EQ(scenario_to_json(scenario_from_json(Json::parse(j.dump()))).dump(), j.dump());
  }
  EXPECT_THROW(scenario_from_json(Json::parse(R"({"name":"x"})")), ParseError);
}

TEST(Io, CertificateRoundTripIsByteIdentical) {
  const auto w = builtin_scenario("example-linf")->witness();
  const auto prefix = enumerate_prefix(w.m, 7);
  const auto cert = build_vector(w, prefix, select_subsequence(w, prefix, 6));
  const std::string text = io::certificate_to_json(cert).dump(2);
  const auto back = io::certificate_from_json(io::parse_json(text));
  EXPECT_EQ(io::certificate_to_json(back).dump(2), text);
  EXPECT_EQ(back.checks, cert.checks);
  EXPECT_EQ(back.selection, cert.selection);
}

TEST(Io, MalformedDocuments) {
  EXPECT_THROW(io::parse_json("{"), ParseError);
  EXPECT_THROW(io::certificate_from_json(Json::parse(R"({"format":"other"})")), ParseError);
  EXPECT_THROW(io::certificate_from_json(Json::parse("[]")), ParseError);
}
