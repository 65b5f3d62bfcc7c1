#include <cmath>

#include <gtest/gtest.h>

#include "orlicz/errors.hpp"
#include "orlicz/io.hpp"

using namespace orlicz;

namespace {
const std::string data = ORLICZ_TEST_DATA;
}

TEST(Io, profileRoundTrip) {
  const auto p = io::load_profile(data + "/profile_tail.json");
  EXPECT_EQ(2u, p.steps().size());
  EXPECT_EQ(ProfileTail::Kind::exponential, p.tail().kind);
  EXPECT_EQ(p, io::parse_profile(io::profile_to_json(p)));
  const auto l = io::load_profile(data + "/profile_log.json");
  EXPECT_EQ(ProfileHead::Kind::log, l.head().kind);
  EXPECT_EQ(l, io::parse_profile(io::profile_to_json(l)));
}

TEST(Io, malformedInputIsDomainError) {
  EXPECT_THROW(io::parse_profile("{\"steps\": [[1]]}"), DomainError);
  EXPECT_THROW(io::parse_profile("{"), DomainError);
  EXPECT_THROW(io::parse_profile("{\"tail\": {\"kind\": \"weird\"}}"), DomainError);
  EXPECT_THROW(io::parse_matrix("{\"dim\": 2, \"entries\": [1, 2, 3]}"), DomainError);
  EXPECT_THROW(io::load_profile(data + "/missing.json"), DomainError);
}

TEST(Io, matricesAndMaps) {
  const auto a = io::load_matrix(data + "/matrix_dense.json");
  EXPECT_EQ(std::complex<double>(0, 1), a.matrix()(1, 0));
  EXPECT_EQ(a.matrix(), io::parse_matrix(io::matrix_to_json(a)).matrix());
  EXPECT_EQ(PositiveMap::Kind::pinching, io::load_map(data + "/pinching.json").kind());
  const auto k = io::load_map(data + "/kraus.json");
  EXPECT_NEAR(1.0, k.trace_constant(), 1e-12);
  EXPECT_THROW(io::parse_map(R"({"kind": "kraus", "C": 0.5, "kraus": [{"dim": 1, "entries": [1]}]})"), DomainError);
}

TEST(Io, simpleFunctionsAndYoungSpecs) {
  const auto f = io::load_simple_function(data + "/simple.txt");
  EXPECT_EQ(3u, f.atoms().size());
  EXPECT_NEAR(3.5, f.total_weight(), 0.0);
  EXPECT_EQ(YoungKind::llog, io::load_young("llog").kind());
  const auto t = io::load_young(data + "/density.txt");
  EXPECT_EQ(YoungKind::tabulated, t.kind());
  EXPECT_NEAR(0.5, t(1.0).value(), 1e-15);
  EXPECT_THROW(io::load_young("nonsense"), DomainError);
}
