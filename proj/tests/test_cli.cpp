#include "glnrep/cli.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using glnrep::ArthurSummand;
using glnrep::Json;
using glnrep::Multisegment;
using glnrep::ParseError;
using glnrep::Rat;
using glnrep::Segment;
using glnrep::SupercuspidalLabel;
using glnrep::UnitaryRep;

namespace {

const std::string kFixtures = GLNREP_FIXTURES;

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "glnrep");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  auto parsed = glnrep::parse_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  int status = std::holds_alternative<int>(parsed) ? std::get<int>(parsed)
                                                   : glnrep::run(std::get<glnrep::CliConfig>(parsed), out, err);
  return {status, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("glnrep_test_" + std::to_string(::getpid()) + "_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string parse_error_field(std::string_view text) {
  try {
    glnrep::parse_rep(text);
  } catch (const ParseError& e) {
    return e.field();
  }
  return "<accepted>";
}

}  // namespace

TEST(Json, SpehParsesToOneSummand) {
  auto rep = glnrep::parse_rep(slurp(fixture("speh_1_4.json")));
  ASSERT_TRUE(std::holds_alternative<UnitaryRep>(rep));
  const auto& pi = std::get<UnitaryRep>(rep);
  ASSERT_EQ(pi.summands().size(), 1U);
  EXPECT_EQ(pi.summands()[0].d, 4);
  EXPECT_EQ(pi.N(), 4);
}

TEST(Json, KindDetection) {
  EXPECT_TRUE(std::holds_alternative<Multisegment>(glnrep::parse_rep(slurp(fixture("multisegment.json")))));
  EXPECT_TRUE(std::holds_alternative<glnrep::GenArthurParam>(glnrep::parse_rep(slurp(fixture("gen_param.json")))));
  EXPECT_TRUE(std::holds_alternative<UnitaryRep>(glnrep::parse_rep(slurp(fixture("unitary_mixed.json")))));
}

TEST(Json, RejectionsNameTheField) {
  try {
    glnrep::parse_rep(slurp(fixture("bad_twist.json")));
    FAIL() << "accepted |x| = 1/2";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.field(), "summands[0].x");
    EXPECT_NE(std::string(e.what()).find("open interval"), std::string::npos);
  }
  try {
    glnrep::parse_rep(slurp(fixture("bad_segment.json")));
    FAIL() << "accepted b - a = 1/2";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.field(), "segments[0].b");
    EXPECT_NE(std::string(e.what()).find("non-negative integer"), std::string::npos);
  }
  EXPECT_EQ(parse_error_field(slurp(fixture("bad_type.json"))), "summands[0].a");
  EXPECT_EQ(parse_error_field(slurp(fixture("bad_truncated.json"))), "$");
  EXPECT_EQ(parse_error_field(slurp(fixture("bad_unpaired.json"))), "summands");
  EXPECT_EQ(parse_error_field("[]"), "$");
  EXPECT_EQ(parse_error_field("{}"), "$");
  EXPECT_EQ(parse_error_field(R"({"summands": []})"), "summands");
  EXPECT_EQ(parse_error_field(R"({"summands": [{"a": 1, "d": 1}]})"), "summands[0].rho");
  EXPECT_EQ(parse_error_field(R"({"summands": [{"rho": {"id": "r", "dim": 0}, "a": 1, "d": 1}]})"), "summands[0].rho.dim");
  EXPECT_EQ(parse_error_field(R"({"segments": [{"rho": {"id": "r", "dim": 1}, "a": "x", "b": "1"}]})"), "segments[0].a");
  EXPECT_EQ(parse_error_field(R"({"summands": [{"n": 0, "d": 1}]})"), "summands[0].n");
}

TEST(Json, RoundTripRandomized) {
  std::mt19937_64 rng(29);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<ArthurSummand> s;
    int k = pick(1, 4);
    for (int i = 0; i < k; ++i) {
      SupercuspidalLabel r{"r" + std::to_string(pick(0, 2)), pick(1, 3)};
      ArthurSummand a{r, pick(1, 4), pick(1, 4), Rat(0)};
      if (pick(0, 1)) {
        a.x = Rat(pick(1, 13), 27);
        s.push_back(a);
        a.x = -a.x;
      }
      s.push_back(a);
    }
    UnitaryRep pi(s);
    ASSERT_EQ(std::get<UnitaryRep>(glnrep::parse_rep(glnrep::to_json(pi).dump())), pi);

    Multisegment m = glnrep::expand_to_langlands(pi);
    ASSERT_EQ(std::get<Multisegment>(glnrep::parse_rep(glnrep::to_json(m).dump())), m);

    glnrep::GenArthurParam g;
    for (int i = 0; i < k; ++i) g.summands.push_back({pick(1, 5), pick(1, 5)});
    ASSERT_EQ(std::get<glnrep::GenArthurParam>(glnrep::parse_rep(glnrep::to_json(g).dump())), g);
  }
}

TEST(Cli, DualSwapsLabels) {
  auto r = cli({"dual", "--input", fixture("speh_1_4.json")});
  ASSERT_EQ(r.status, 0) << r.err;
  auto pi = std::get<UnitaryRep>(glnrep::parse_rep(r.out));
  EXPECT_EQ(pi, UnitaryRep({ArthurSummand{SupercuspidalLabel{"rho", 1}, 4, 1, Rat(0)}}));
}

TEST(Cli, InvariantsReportsExactAndDecimal) {
  auto r = cli({"invariants", "--input", fixture("speh_1_4.json"), "--format", "json"});
  ASSERT_EQ(r.status, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["arthur_sl2"], "4");
  EXPECT_EQ(j["wavefront"], "1+1+1+1");
  EXPECT_EQ(j["t"]["exact"], "1");
  EXPECT_EQ(j["p"], "infinity");
  EXPECT_EQ(j["d_gk"]["exact"], "0");
  EXPECT_EQ(j["d_gk"]["decimal"], "0.000000000000");

  auto m = cli({"invariants", "--input", fixture("multisegment.json"), "--orbit", "2+2", "--format", "json"});
  ASSERT_EQ(m.status, 0) << m.err;
  Json mj = Json::parse(m.out);
  EXPECT_EQ(mj["wavefront"], "3+1");
  EXPECT_EQ(mj["d_gk"]["exact"], "5");
  EXPECT_EQ(mj["exponents"]["hch_orbit"]["coeff_of_ell"]["exact"], "1");
  EXPECT_EQ(mj["tempered_as_langlands_data"], false);

  auto g = cli({"invariants", "--input", fixture("gen_param.json")});
  ASSERT_EQ(g.status, 0) << g.err;
  EXPECT_NE(g.out.find("key,value,decimal\n"), std::string::npos);
  EXPECT_NE(g.out.find("\nd_gk,5,5.000000000000\n"), std::string::npos);

  auto u = cli({"invariants", "--input", fixture("unitary_mixed.json"), "--format", "json"});
  ASSERT_EQ(u.status, 0) << u.err;
  Json uj = Json::parse(u.out);
  EXPECT_EQ(uj["arthur_type"], false);
  EXPECT_EQ(uj["upper_ok"], true);
}

TEST(Cli, VerifyArthurMessage) {
  auto r = cli({"verify-arthur", "--N", "30", "--threads", "2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "checked 5604 partitions, 0 failures");
}

TEST(Cli, OtherSweeps) {
  auto u = cli({"verify-unitary", "--N", "6", "--grid", "1/10,2/10,3/10,4/10", "--max-summands", "3"});
  EXPECT_EQ(u.status, 0) << u.err;
  EXPECT_NE(u.out.find(", 0 failures"), std::string::npos);
  auto bad = cli({"verify-unitary", "--N", "6", "--grid", "1/2"});
  EXPECT_EQ(bad.status, 2);
  auto c = cli({"verify-consistency", "--N", "8", "--format", "json"});
  EXPECT_EQ(c.status, 0) << c.err;
  EXPECT_TRUE(Json::parse(c.out)["failures"].empty());
}

TEST(Cli, PartitionsStream) {
  auto r = cli({"partitions", "--N", "4"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "4\n3+1\n2+2\n2+1+1\n1+1+1+1\n");
  auto j = cli({"partitions", "--N", "6", "--format", "json"});
  EXPECT_EQ(Json::parse(j.out).size(), 11U);
}

TEST(Cli, FigureFileIsDeterministic) {
  auto a = temp_path("fig1.csv");
  auto b = temp_path("fig4.csv");
  ASSERT_EQ(cli({"figure", "--N", "20", "--out", a.string(), "--threads", "1"}).status, 0);
  ASSERT_EQ(cli({"figure", "--N", "20", "--out", b.string(), "--threads", "4"}).status, 0);
  std::string one = slurp(a);
  EXPECT_EQ(one, slurp(b));
  EXPECT_EQ(static_cast<std::uint64_t>(std::count(one.begin(), one.end(), '\n')), oracle::partition_counts(20)[20] + 1);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(Cli, ExitStatusMapping) {
  for (const char* bad : {"bad_truncated.json", "bad_twist.json", "bad_segment.json", "bad_type.json", "bad_unpaired.json"}) {
    auto r = cli({"invariants", "--input", fixture(bad)});
    EXPECT_EQ(r.status, 2) << bad;
    EXPECT_NE(r.err.find("error"), std::string::npos);
  }
  EXPECT_EQ(cli({"dual", "--input", fixture("multisegment.json")}).status, 2);
  EXPECT_EQ(cli({"invariants", "--input", fixture("speh_1_4.json"), "--orbit", "3+x"}).status, 2);
  EXPECT_EQ(cli({"invariants", "--input", fixture("speh_1_4.json"), "--orbit", "3+1+1"}).status, 2);
  EXPECT_EQ(cli({"verify-arthur"}).status, 2);
  EXPECT_EQ(cli({"verify-arthur", "--N", "1"}).status, 2);
  EXPECT_EQ(cli({"nonsense"}).status, 2);
  EXPECT_EQ(cli({}).status, 2);
  EXPECT_EQ(cli({"invariants", "--input", fixture("does_not_exist.json")}).status, 4);
  EXPECT_EQ(cli({"figure", "--N", "5", "--out", "/nonexistent-dir/fig.csv"}).status, 4);
  EXPECT_EQ(cli({"--help"}).status, 0);
}

TEST(Cli, ViolationExitsThree) {
  glnrep::SweepSummary s;
  s.N = 4;
  glnrep::InvariantReport bad = glnrep::arthur_partition_report(glnrep::Partition({2, 2}));
  bad.upper_ok = false;
  s.add(bad, Rat(0), Rat(0));
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(glnrep::detail::finish_sweep(out, err, s, "partitions", glnrep::OutputFormat::csv), 3);
  EXPECT_NE(err.str().find("FAIL"), std::string::npos);
  EXPECT_NE(err.str().find("2+2"), std::string::npos);
}
