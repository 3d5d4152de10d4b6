#include <doctest.h>

#include <sstream>

#include "weyldual/cli.hpp"
#include "weyldual/serialize.hpp"
#include "weyldual/verify.hpp"

using namespace weyldual;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("derham through the command line") {
  const auto r = cli({"derham", "--recipe", "E(n=2)"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["totals"]["0"]["dim"] == 0);
  CHECK(j["totals"]["1"]["dim"] == 0);
  CHECK(j["totals"]["2"]["dim"] == 1);
  CHECK(j["totals"]["2"]["complete"] == true);

  const auto w = cli({"derham", "--recipe", "R(n=1)", "--window", "-3..3"});
  REQUIRE(w.code == 0);
  const auto jw = Json::parse(w.out);
  CHECK(jw["totals"]["0"]["dim"] == 1);
  CHECK(jw["totals"]["1"]["dim"] == 0);
  CHECK(jw["window"]["lo"] == Json::array({-3}));

  const auto k = cli({"derham", "--recipe", "R(n=2)", "--koszul", "--out", "csv"});
  CHECK(k.code == 0);
  CHECK(k.out.rfind("label,i,dim,certified\n", 0) == 0);
  CHECK(k.out.find("2,2,1,true") != std::string::npos);
}

TEST_CASE("verify through the command line") {
  const auto r = cli({"verify", "--theorem", "duality", "--recipe", "XD"});
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j[0]["verdict"] == "PASS");
  const auto t = cli({"verify", "--recipe", "E(n=1)", "--out", "text"});
  CHECK(t.code == 0);
  CHECK(t.out.find("PASS  surjections  E(n=1)") != std::string::npos);
  const auto inc = cli({"verify", "--theorem", "duality", "--recipe", "XD", "--window", "3..6"});
  CHECK(inc.code == 1);
  CHECK(Json::parse(inc.out)[0]["verdict"] == "INCONCLUSIVE");
  const auto eul = cli({"verify", "--theorem", "eulerian", "--recipe", "shift(R(n=1),1)"});
  CHECK(eul.code == 1);
}

TEST_CASE("other subcommands") {
  const auto b = cli({"build", "--recipe", "Hvars(n=2,S=1)", "--window", "-2..1 x 0..2"});
  REQUIRE(b.code == 0);
  CHECK(Json::parse(b.out)["spec"]["mode"] == "fine");
  const auto d = cli({"dual", "--recipe", "R(n=1)", "--out", "text"});
  CHECK(d.code == 0);
  CHECK(d.out.find("dual(x1)") != std::string::npos);
  const auto e = cli({"eulerian", "--recipe", "shift(R(n=1),1)"});
  CHECK(e.code == 0);
  CHECK(Json::parse(e.out)["eulerian"] == false);
  const auto z = cli({"zoo"});
  CHECK(z.code == 0);
  CHECK(Json::parse(z.out).size() == zoo_recipes().size());
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"derham"}).code == 2);
  CHECK(cli({"derham", "--recipe", "Q(n=1)"}).code == 2);
  CHECK(cli({"derham", "--recipe", "R(n=1)", "--window", "5..1"}).code == 2);
  CHECK(cli({"derham", "--recipe", "R(n=1)", "--out", "xml"}).code == 2);
  CHECK(cli({"derham", "--recipe", "XD", "--mode", "fine"}).code == 2);
  CHECK(cli({"verify", "--theorem", "bogus", "--recipe", "XD"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"derham", "--recipe", "Hvars(n=3,S=1,2)", "--parallel", "3"};
  const auto a = cli(args);
  const auto b = cli(args);
  CHECK(a.out == b.out);
  const auto c = cli({"derham", "--recipe", "Hvars(n=3,S=1,2)"});
  CHECK(a.out == c.out);
}
