#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + QUINTIC_CLI + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json js(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("classify") {
  Run r = run("classify --a -5 --b 12");
  REQUIRE(r.code == 0);
  auto j = js(r);
  CHECK(j["t"] == "-3125/20736");
  CHECK(j["class"]["kind"] == "generic");
  CHECK(j["discriminant"] == "64000000");
  CHECK(j["irreducible"] == true);
  CHECK(j["galois"]["group"] == "D10");
  CHECK(js(run("classify --a 1 --b 1"))["galois"].is_null());
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("classify --a 1/0 --b 1").code == 2);
  CHECK(run("classify --a x --b 1").code == 2);
  CHECK(run("classify --a 1").code == 2);
  CHECK(run("nonsense").code == 2);
  CHECK(run("curve --t 0").code == 2);
  CHECK(run("curve --g 1,2,3").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("curve and search") {
  auto c = js(run("curve --t 6/5"));
  CHECK(c["quadric"]["str"] == "-5*a^2 + 50*a*b + (192/5)*b*d + (96/5)*c^2 + 48*c*d");
  CHECK(c["eliminated"] == "e");
  auto g = js(run("curve --g -18,0,0,0,0,1"));
  CHECK(g["eliminated"] == "a");

  Run s = run("search --t 6/5 --height 200");
  REQUIRE(s.code == 0);
  std::istringstream lines(s.out);
  std::string line;
  std::vector<nlohmann::json> recs;
  while (std::getline(lines, line)) recs.push_back(nlohmann::json::parse(line));
  REQUIRE(recs.size() >= 5);
  CHECK(recs[0]["point"] == nlohmann::json{"0", "1", "0", "0"});
  CHECK(recs[0]["class"]["value"] == "6/5");
  CHECK(recs[0]["rho"] == nlohmann::json{"6", "5"});
  int pure18 = 0;
  for (const auto& rec : recs) pure18 += rec["class"]["kind"] == "pure" && rec["class"]["value"] == "18";
  CHECK(pure18 == 1);
}

TEST_CASE("search output does not depend on the thread count") {
  Run one = run("search --t 6/5 --height 60", "QUINTIC_THREADS=1");
  Run three = run("search --t 6/5 --height 60", "QUINTIC_THREADS=3");
  CHECK(one.code == 0);
  CHECK(one.out == three.out);
}

TEST_CASE("root in field") {
  Run r = run("root-in-field --g -18,0,0,0,0,1 --f -324,0,0,0,0,1");
  CHECK(r.code == 0);
  CHECK(js(r)["result"]["status"] == "certificate");
  Run absent = run("root-in-field --g -18,0,0,0,0,1 --f 12,-5,0,0,0,1");
  CHECK(absent.code == 0);
  CHECK(js(absent)["result"]["status"] == "proven-absent");
  Run weak = run("root-in-field --g 105,75,0,0,0,1 --f 86685375,-3410625,0,0,0,1 --denominator-bound 10");
  CHECK(weak.code == 3);
  CHECK(js(weak)["result"]["status"] == "inconclusive");
}

TEST_CASE("families") {
  auto p = js(run("family pair --param 2"));
  CHECK(p["verified"] == true);
  CHECK(p["f"]["str"] == "40*x^5 - 10*x - 4");
  CHECK(p["h"]["str"] == "20*x^5 + 145*x - 394");
  CHECK(js(run("family weber --param 2"))["trinomial"] == nlohmann::json{{"a", "15/32"}, {"b", "21/16"}});
  CHECK(js(run("family sw2 --param 2"))["radicand"] == "24");
  CHECK(run("family dihedral --param 0").code == 2);
  CHECK(run("family pair --param -8").code == 2);
}

TEST_CASE("surface and elliptic") {
  auto s = js(run("surface check --point 10,1,-3/5,0"));
  CHECK(s["on_surface"] == true);
  CHECK(s["point"] == nlohmann::json{"50", "5", "-3", "0"});
  CHECK(js(run("surface check --point 1,1,1,1"))["on_surface"] == false);
  auto c = js(run("surface curve --name R3 --s 0"));
  CHECK(c["on_surface"] == true);
  CHECK(js(run("surface check --point 1,21,-24,32"))["t"] == "inf");
  auto e = js(run("elliptic info --curve 0,0,0,-675,-79650"));
  CHECK(e["j"] == "-25/2");
  auto t = js(run("elliptic twist --curve -675,-79650 --other 0,-1,0,-833,109537"));
  CHECK(t["twist_factor"] == "-10");
}

TEST_CASE("config file and output path") {
  const std::string cfg = "cli_test.conf", out = "cli_test.out";
  {
    std::ofstream f(cfg);
    f << "height-bound = 1\nthreads = 2\n";
  }
  Run r = run("--config " + cfg + " --output " + out + " search --t 6/5");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  std::string first;
  std::getline(in, first);
  CHECK(nlohmann::json::parse(first)["point"] == nlohmann::json{"0", "1", "0", "0"});
  std::string second;
  CHECK_FALSE(std::getline(in, second));
}
