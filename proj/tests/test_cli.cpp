#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>

using cmvar::cli::CommandResult;
using cmvar::cli::Json;
using cmvar::cli::Status;

namespace {

CommandResult call(std::vector<std::string> args, std::optional<std::string> in = std::nullopt) {
  return cmvar::cli::run(args, in);
}

}  // namespace

TEST(Cli, VarietyExample) {
  const CommandResult r = call({"variety", "--family", "R", "--d", "2", "--n", "4"});
  ASSERT_EQ(r.status, Status::Ok);
  EXPECT_EQ(r.payload.dump(), R"({"dim":4,"ambient":5,"degree":"3","genus":1,"dual_d":1})");
  EXPECT_EQ(cmvar::cli::exit_code(r.status), 0);
}

TEST(Cli, VarietyBigDegreeIsString) {
  const CommandResult r = call({"variety", "--family", "H", "--d", "1", "--n", "12", "--json"});
  ASSERT_EQ(r.status, Status::Ok);
  EXPECT_TRUE(r.payload["degree"].is_string());
  EXPECT_TRUE(r.payload["genus"].is_null());
}

TEST(Cli, RealizableExample) {
  const CommandResult r = call({"realizable"}, R"({"n":3,"s":{"1,2":1,"1,3":1,"2,3":9}})");
  ASSERT_EQ(r.status, Status::Ok);
  EXPECT_FALSE(r.payload["realizable"].get<bool>());
  EXPECT_EQ(r.payload["negative_eigenvalue_index"], 1);
}

TEST(Cli, LamanExampleFromFile) {
  const std::string path = ::testing::TempDir() + "k4.json";
  {
    std::ofstream f(path);
    f << R"({"n":4,"edges":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]})";
  }
  const CommandResult r = call({"laman", "--in", path});
  ASSERT_EQ(r.status, Status::Ok);
  EXPECT_EQ(r.payload.dump(), R"({"laman":false,"reason":"edge count 6 != 5"})");
}

TEST(Cli, ConvertAndEmbed) {
  CommandResult r = call({"convert"}, R"({"dim":2,"points":[[0,0],[1,0],[0,1]]})");
  ASSERT_EQ(r.status, Status::Ok);
  EXPECT_EQ(r.payload["cayley"]["s"].dump(), R"({"1,2":1.0,"1,3":1.0,"2,3":2.0})");
  EXPECT_EQ(r.payload["gram"].dump(), "[[1.0,0.0],[0.0,1.0]]");

  r = call({"convert"}, R"({"gram":[[4,2],[2,4]]})");
  ASSERT_EQ(r.status, Status::Ok);
  EXPECT_EQ(r.payload["cayley"]["s"].dump(), R"({"1,2":4.0,"1,3":4.0,"2,3":4.0})");

  r = call({"embed", "--d", "2"}, R"({"n":3,"s":{"1,2":1,"1,3":1,"2,3":9}})");
  EXPECT_EQ(r.status, Status::DomainError);
  EXPECT_EQ(cmvar::cli::exit_code(r.status), 3);

  r = call({"embed"}, R"({"n":3,"s":{"1,2":1,"1,3":4,"2,3":1}})");
  ASSERT_EQ(r.status, Status::Ok);
  EXPECT_EQ(r.payload["dim"], 1);
}

TEST(Cli, RankExact) {
  const CommandResult r = call({"rank", "--exact"}, R"({"n":3,"s":{"1,2":1,"1,3":1,"2,3":2}})");
  ASSERT_EQ(r.status, Status::Ok);
  EXPECT_EQ(r.payload["det_S"], "-4");
  EXPECT_EQ(r.payload["det_A"], "1");
  EXPECT_EQ(r.payload["rank_S"], 4);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(call({"realizable"}, "{not json").status, Status::InputError);
  EXPECT_EQ(call({"realizable"}, R"({"n":3,"s":{"1,2":1}})").status, Status::InputError);
  EXPECT_EQ(call({"realizable"}).status, Status::InputError);
  EXPECT_EQ(call({"variety", "--family", "X", "--d", "1", "--n", "3"}).status, Status::InputError);
  EXPECT_EQ(call({"nonsense"}).status, Status::InputError);
  EXPECT_EQ(call({}).status, Status::InputError);
  EXPECT_EQ(call({"--tol", "-1", "variety", "--d", "1", "--n", "3"}).status, Status::InputError);
  EXPECT_EQ(cmvar::cli::exit_code(Status::InputError), 2);
}

TEST(Cli, DomainErrors) {
  EXPECT_EQ(call({"variety", "--family", "R", "--d", "4", "--n", "4"}).status, Status::DomainError);
  EXPECT_EQ(call({"octic", "--r", "1.5", "--torus", "0,0,0"}).status, Status::DomainError);
  EXPECT_EQ(call({"polygon", "--q", "0,1,1"}).status, Status::DomainError);
}

TEST(Cli, Help) {
  const CommandResult r = call({"--help"});
  EXPECT_EQ(r.status, Status::Ok);
  EXPECT_NE(r.help.find("variety"), std::string::npos);
}

TEST(Cli, Dual) {
  const CommandResult r = call({"dual", "--family", "H", "--d", "2", "--n", "4"});
  EXPECT_EQ(r.payload.dump(), R"({"family":"H","d":1,"n":4})");
}

TEST(Cli, Minors) {
  CommandResult r = call({"minors", "--family", "R", "--d", "1", "--n", "3", "--list"});
  ASSERT_EQ(r.status, Status::Ok);
  EXPECT_EQ(r.payload["count"], "1");
  EXPECT_EQ(r.payload["minors"].dump(), R"([{"rows":[1,2],"cols":[1,2]}])");
  r = call({"minors", "--d", "1", "--n", "3", "--evaluate"}, R"({"dim":1,"points":[[0],[1],[2]]})");
  ASSERT_EQ(r.status, Status::Ok);
  EXPECT_TRUE(r.payload["vanish"].get<bool>());
  r = call({"minors", "--d", "1", "--n", "3", "--source", "cayley", "--evaluate"},
           R"({"dim":2,"points":[[0,0],[1,0],[0,1]]})");
  EXPECT_FALSE(r.payload["vanish"].get<bool>());
}

TEST(Cli, Cone) {
  CommandResult r = call({"cone"}, R"({"gram":[[1,2],[2,4]]})");
  EXPECT_EQ(r.payload["region"], "LightCone");
  EXPECT_TRUE(r.payload["extremal_candidate"].get<bool>());
  r = call({"cone"}, R"([[1,0],[0,-1]])");
  EXPECT_EQ(r.payload["region"], "PositiveRegion");
  r = call({"cone"}, R"({"n":3,"s":{"1,2":1,"1,3":1,"2,3":1}})");
  EXPECT_EQ(r.payload["region"], "NegativeCone");
}

TEST(Cli, BoundAndRealize) {
  EXPECT_EQ(call({"bound", "--n", "6"}).payload.dump(), R"({"n":6,"bound":"35"})");
  const std::string two = R"({"n":4,"edges":[[1,2],[1,3],[2,3],[2,4],[3,4]],)"
                          R"("sigma":{"1,2":1,"1,3":2,"2,3":1.5,"2,4":1.2,"3,4":0.8}})";
  const CommandResult a = call({"realize", "--seed", "9"}, two);
  ASSERT_EQ(a.status, Status::Ok);
  EXPECT_EQ(a.payload["count"], 2);
  EXPECT_EQ(a.payload["bound"], "3");
  EXPECT_EQ(a.payload["congruence"], "O(2), reflections identified");
  const CommandResult b = call({"realize", "--seed", "9"}, two);
  EXPECT_EQ(a.payload.dump(), b.payload.dump());

  setenv("CMVAR_THREADS", "3", 1);
  const CommandResult c = call({"realize", "--seed", "9"}, two);
  unsetenv("CMVAR_THREADS");
  EXPECT_EQ(a.payload.dump(), c.payload.dump());

  const CommandResult tiny = call({"realize", "--budget", "1"}, two);
  EXPECT_EQ(tiny.status, Status::SolverIncomplete);
  EXPECT_EQ(cmvar::cli::exit_code(tiny.status), 4);

  const CommandResult k4 =
      call({"realize"}, R"({"n":4,"edges":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]],"sigma":{"1,2":1,"1,3":1,"1,4":1,"2,3":1,"2,4":1,"3,4":1}})");
  EXPECT_EQ(k4.status, Status::DomainError);
}

TEST(Cli, Polygon) {
  CommandResult r = call({"polygon", "--q", "0.25,0.25,0.25,0.25"});
  ASSERT_EQ(r.status, Status::Ok);
  EXPECT_TRUE(r.payload["on_wall"].get<bool>());
  EXPECT_EQ(r.payload["witnesses"].size(), 3u);
  EXPECT_EQ(r.payload["dimension"], 1);
  EXPECT_TRUE(r.payload.contains("collinear_witness"));
  r = call({"polygon", "--q", "0.35,0.25,0.22,0.18"});
  EXPECT_FALSE(r.payload["on_wall"].get<bool>());
  EXPECT_TRUE(r.payload["admissible"].get<bool>());
}

TEST(Cli, Octic) {
  const CommandResult r = call({"octic", "--r", "1", "--point", "2,0,1,0"});
  ASSERT_EQ(r.status, Status::Ok);
  EXPECT_EQ(r.payload["value"], 0.0);
  EXPECT_EQ(call({"octic"}).status, Status::InputError);
}

TEST(Cli, Algebra) {
  CommandResult r = call({"algebra", "--op", "quat-mul"}, R"({"x":[0,1,0,0],"y":[0,0,1,0]})");
  EXPECT_EQ(r.payload["product"].dump(), "[0.0,0.0,0.0,1.0]");
  r = call({"algebra", "--op", "oct-mul"}, R"({"x":[[0,0,0,0],[1,0,0,0]],"y":[[0,0,0,0],[1,0,0,0]]})");
  EXPECT_EQ(r.payload["product"].dump(), "[[-1.0,0.0,0.0,0.0],[0.0,0.0,0.0,0.0]]");
  r = call({"algebra", "--op", "det2"}, R"({"alpha":2,"beta":3,"x":[[0,0,0,0],[0,0,1,0]]})");
  EXPECT_EQ(r.payload["det"], 5.0);
  const std::string diag = R"({"alpha":0.5,"beta":3,"gamma":-7,"x":[[0,0,0,0],[0,0,0,0]],)"
                           R"("y":[[0,0,0,0],[0,0,0,0]],"z":[[0,0,0,0],[0,0,0,0]]})";
  r = call({"algebra", "--op", "det3", "--exact"}, diag);
  EXPECT_EQ(r.payload["det"], "-21/2");
  r = call({"algebra", "--op", "sigma"}, R"({"gram":[[1,0],[0,1]]})");
  EXPECT_EQ(r.payload["pfaffian_rank"], 4);
  r = call({"algebra", "--op", "pfaffian-rank"}, R"({"matrix":[[0,1],[-1,0]]})");
  EXPECT_EQ(r.payload["rank"], 2);
  r = call({"algebra", "--op", "hermitian-gram"}, R"({"points":[[0],[1],[[0,1]]]})");
  EXPECT_EQ(r.payload["gram"].dump(), "[[[1.0,0.0],[0.0,-1.0]],[[0.0,1.0],[1.0,0.0]]]");
  r = call({"algebra", "--op", "hyper-gram"}, R"({"points":[[0],[1],[[0,0,1,0]]]})");
  EXPECT_EQ(r.payload["gram"][0][1].dump(), "[0.0,0.0,-1.0,0.0]");
  r = call({"algebra", "--op", "associator"},
           R"({"x":[[0,1,0,0],[0,0,0,0]],"y":[[0,0,1,0],[0,0,0,0]],"z":[[0,0,0,0],[1,0,0,0]]})");
  EXPECT_GT(r.payload["norm"].get<double>(), 1.0);
  EXPECT_EQ(call({"algebra", "--op", "bogus"}, "{}").status, Status::InputError);
}

TEST(Cli, TolIsThreaded) {
  const std::string near_line = R"({"gram":[[1,2],[2,4.000001]]})";
  EXPECT_EQ(call({"cone"}, near_line).payload["region"], "NegativeCone");
  EXPECT_EQ(call({"--tol", "1e-3", "cone"}, near_line).payload["region"], "LightCone");
}
