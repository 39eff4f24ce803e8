#include <gtest/gtest.h>

#include <filesystem>

#include "qf/qf.hpp"

using namespace qf;
using qf::io::json;

TEST(IO, QuandleRoundTrip) {
  auto const Q = u_quandle(2, 3);
  auto const j = io::to_json(Q);
  auto const R = io::quandle_from_json(json::parse(j.dump()));
  EXPECT_EQ(Q, R);
  EXPECT_EQ(R.names(), Q.names());
}

TEST(IO, RejectsMalformedQuandles) {
  EXPECT_THROW(io::quandle_from_json(json::parse(R"({"table": [[0, 0], [0, 1]]})")), axiom_violation);
  EXPECT_THROW(io::quandle_from_json(json::parse(R"({"order": 3, "table": [[0]]})")), io::format_error);
  EXPECT_THROW(io::quandle_from_json(json::parse(R"({"table": [[0, -1], [1, 1]]})")), io::format_error);
  EXPECT_THROW(io::quandle_from_json(json::parse(R"({"rows": []})")), io::format_error);
  EXPECT_THROW(io::quandle_from_json(json::parse(R"({"table": [[0]], "names": ["a", "b"]})")), io::format_error);
}

TEST(IO, GroupRoundTrip) {
  auto const G = symmetric_group(3);
  auto const H = io::group_from_json(json::parse(io::to_json(G).dump()));
  EXPECT_EQ(G, H);
  EXPECT_EQ(H.labels(), G.labels());
  EXPECT_EQ(io::load_group("D5").order(), 10u);
}

TEST(IO, CertificateRoundTrip) {
  auto const Q = dihedral_quandle(6);
  auto const c = search_certificate(Q, default_catalog());
  ASSERT_TRUE(c);
  auto const j      = io::to_json(*c, io::to_json(Q));
  auto const loaded = io::certificate_from_json(json::parse(io::pretty(j)));
  ASSERT_TRUE(loaded.quandle);
  EXPECT_EQ(*loaded.quandle, Q);
  EXPECT_EQ(loaded.cert.images, c->images);
  EXPECT_EQ(loaded.cert.group, c->group);
  EXPECT_NO_THROW(injectivity_certificate(Q, {loaded.cert.group, loaded.cert.images}));
}

TEST(IO, PresentationRoundTrip) {
  auto const P = quandle_presentation_of(u_quandle(1, 2));
  auto const R = io::presentation_from_json(json::parse(io::to_json(P).dump()));
  EXPECT_EQ(P, R);
  EXPECT_THROW(io::presentation_from_json(json::parse(R"({"generators": ["x", "x"]})")), name_clash);
  EXPECT_THROW(io::presentation_from_json(json::parse(R"({"generators": ["x"], "relations": [["x"]]})")),
               io::format_error);
}

TEST(IO, PrettyKeepsRowsInline) {
  auto const s = io::pretty(io::to_json(dihedral_quandle(3)));
  EXPECT_NE(s.find("[0, 2, 1]"), std::string::npos);
}

TEST(IO, RenderTable) {
  auto const s = io::render_table(dihedral_quandle(3));
  EXPECT_NE(s.find(" 0 | 0 2 1"), std::string::npos);
}
