#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"
#include "zagreb/constructors.hpp"
#include "zagreb/error.hpp"
#include "zagreb/g6.hpp"
#include "zagreb/instances.hpp"

namespace zagreb {
namespace {

std::string fixture(const std::string& name) { return std::string(ZAGREB_FIXTURE_DIR) + "/" + name; }

Graph random_graph(instances::Rng& rng, std::size_t n) {
  std::vector<Edge> e;
  const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  std::bernoulli_distribution coin(p);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (coin(rng)) e.push_back(Edge{i, j});
    }
  }
  return Graph(n, std::move(e));
}

std::string malformed_detail(std::string_view record) {
  try {
    decode_g6(record);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformed);
    return e.detail();
  }
  ADD_FAILURE() << "accepted " << record;
  return {};
}

TEST(Encode, Examples) {
  EXPECT_EQ(encode_g6(complete(4)), "C~");
  EXPECT_EQ(encode_g6(Graph(1)), "@");
  EXPECT_EQ(encode_g6(Graph(0)), "?");
  EXPECT_EQ(encode_g6(cycle(5)), "Dhc");
  EXPECT_EQ(decode_g6(encode_g6(path(4))), path(4));
}

TEST(Encode, ColumnOrderBits) {
  // Single edge (0,2): second bit of x01 x02 x12 -> 010000 -> 16 + 63.
  EXPECT_EQ(encode_g6(Graph(3, {Edge{0, 2}})), std::string("B") + static_cast<char>(16 + 63));
  // Single edge (1,2): third bit -> 001000.
  EXPECT_EQ(encode_g6(Graph(3, {Edge{1, 2}})), std::string("B") + static_cast<char>(8 + 63));
}

TEST(Encode, RejectsMultiByteOrders) {
  EXPECT_EQ(testing::error_code([] { encode_g6(Graph(kMaxGraph6Order + 1)); }), ErrorCode::kTooLarge);
  EXPECT_NO_THROW(encode_g6(Graph(kMaxGraph6Order)));
}

TEST(Decode, Examples) {
  EXPECT_EQ(decode_g6("C~"), complete(4));
  EXPECT_EQ(decode_g6("@"), Graph(1));
  EXPECT_EQ(decode_g6(">>graph6<<C~"), complete(4));
}

TEST(Decode, RejectsMalformed) {
  std::string high = "C";
  high.push_back(static_cast<char>(200));
  EXPECT_FALSE(malformed_detail(high).empty());
  EXPECT_FALSE(malformed_detail("").empty());
  EXPECT_FALSE(malformed_detail("C~~").empty());   // too long
  EXPECT_FALSE(malformed_detail("D~").empty());    // too short
  EXPECT_FALSE(malformed_detail("B@").empty());    // padding bit set: 000001
  EXPECT_FALSE(malformed_detail("C ").empty());    // byte 32
  EXPECT_FALSE(malformed_detail("~").empty());     // multi-byte size header
}

TEST(Decode, RoundTripsRandomGraphs) {
  instances::Rng rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = instances::uniform(rng, 0, kMaxGraph6Order);
    const Graph g = random_graph(rng, n);
    ASSERT_EQ(decode_g6(encode_g6(g)), g);
  }
}

TEST(Stream, SkipsBlankLinesAndNamesBadLine) {
  std::istringstream ok("C~\n\r\n@\r\nDhc\n");
  const auto graphs = decode_g6_stream(ok);
  ASSERT_EQ(graphs.size(), 3u);
  EXPECT_EQ(graphs[2], cycle(5));

  std::istringstream bad("C~\n\nD~\n");
  try {
    decode_g6_stream(bad);
    FAIL() << "accepted a bad record";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformed);
    EXPECT_NE(e.detail().find("line 3"), std::string::npos) << e.detail();
  }
}

TEST(Fixtures, ValidRecordsRoundTripByteExact) {
  std::ifstream in(fixture("valid.g6"));
  ASSERT_TRUE(in) << fixture("valid.g6");
  std::string line;
  std::size_t records = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    EXPECT_EQ(encode_g6(decode_g6(line)), line);
    ++records;
  }
  EXPECT_GT(records, 10u);
}

TEST(Fixtures, EveryMalformedRecordIsRejected) {
  std::ifstream in(fixture("malformed.g6"));
  ASSERT_TRUE(in) << fixture("malformed.g6");
  std::string line;
  std::size_t records = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    EXPECT_EQ(testing::error_code([&] { decode_g6(line); }), ErrorCode::kMalformed) << line;
    ++records;
  }
  EXPECT_GT(records, 5u);
}

}  // namespace
}  // namespace zagreb
