#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "zc/cli.hpp"
#include "zc/json_io.hpp"

using zc::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = zc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name) {
  std::filesystem::create_directories(ZC_SCRATCH_DIR);
  return std::string(ZC_SCRATCH_DIR) + "/" + name;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("chow report") {
  Result r = run({"chow", "report"});
  CHECK(r.code == 0);
  Json j = r.json();
  CHECK(j["deg_D2"] == 216);
  CHECK(j["deg_D2_prime"] == 72);
  CHECK(j["strict_inequality"] == true);
  CHECK(run({"chow", "report", "--degrees", "1,2,3"}).json()["deg_D2"] == 6);
  CHECK(run({"chow", "report", "--degrees", "1,2"}).code == 1);
}

TEST_CASE("chow pencil") {
  Json j = run({"chow", "pencil", "--u", "2,3"}).json();
  CHECK(j["rank"] == 2);
  CHECK(j["diagonal"] == true);
  CHECK(run({"chow", "pencil", "--u", "1,2", "--v", "1,3", "--w", "1,1"}).json()["rank"] == 3);
  Result s = run({"chow", "pencil", "--samples", "50", "--seed", "9"});
  CHECK(s.code == 0);
  CHECK(s.json()["diagonal_rank2"] == 50);
  CHECK(s.json()["off_diagonal_rank3"] == 50);
}

TEST_CASE("geom third-point on the Fermat cubic") {
  Result r = run({"geom", "third-point", "--x", "1,-1,0,0", "--y", "[\"0\", \"1\", \"-1\", \"0\"]"});
  CHECK(r.code == 0);
  CHECK(r.json()["point"] == Json::array({"1", "0", "-1", "0"}));
}

TEST_CASE("geom with a surface file") {
  std::string path = scratch("weierstrass.json");
  // X1^2 X2 - X0^3 + X0 X2^2 + X3^3: the plane X3 = 0 cuts y^2 = x^3 - x.
  write_file(path, R"({"vars": 4, "degree": 3, "monomials": [
    {"exp": [0,2,1,0], "coeff": "1"}, {"exp": [3,0,0,0], "coeff": "-1"},
    {"exp": [1,0,2,0], "coeff": "1"}, {"exp": [0,0,0,3], "coeff": "1"}]})");
  Result r = run({"geom", "third-point", "--surface", path, "--x", "-1,0,1,0", "--y", "0,0,1,0"});
  CHECK(r.code == 0);
  CHECK(r.json()["point"] == Json::array({"1", "0", "1", "0"}));
  Result t = run({"geom", "tangent-residual", "--surface", path, "--point", "0,1,0,0", "--axis", "1,0,0,0;0,0,1,0"});
  CHECK(t.code == 0);
  CHECK(t.json()["point"] == Json::array({"0", "1", "0", "0"}));
  Result d = run({"geom", "delta", "--surface", path, "--line", "1,2,0,0;0,0,1,3"});
  CHECK(d.code == 0);
  CHECK(d.json()["degree"] == 3);
  Result p = run({"geom", "psi", "--surface", path, "--axis", "1,0,0,0;0,1,0,0", "--line", "1,2,0,0;0,0,1,3"});
  CHECK(p.code == 0);
  CHECK(p.json().contains("components"));
}

TEST_CASE("domain errors carry the cause") {
  Result r = run({"geom", "third-point", "--x", "1,0,0,0", "--y", "0,1,-1,0"});
  CHECK(r.code == 1);
  CHECK(r.json()["error"]["code"] == "NotOnSurface");
  Result l = run({"geom", "delta", "--line", "1,-1,0,0;0,0,1,-1"});
  CHECK(l.code == 1);
  CHECK(l.json()["error"]["code"] == "LineInSurface");
  Result g = run({"descent", "certify", "--degree", "5", "--goal", "nope"});
  CHECK(g.code == 1);
  CHECK(g.json()["error"]["code"] == "InvalidInput");
  std::string bad = scratch("bad.json");
  write_file(bad, "{not json");
  Result b = run({"descent", "verify", bad});
  CHECK(b.code == 1);
  CHECK(b.json()["error"]["code"] == "InvalidInput");
}

TEST_CASE("usage errors name the flag") {
  Result r = run({"descent", "suite", "--dS", "4"});
  CHECK(r.code == 2);
  CHECK(r.json()["error"]["message"].get<std::string>().find("--dS") != std::string::npos);
  Result u = run({"points", "enum", "--bogus"});
  CHECK(u.code == 2);
  CHECK(u.json()["error"]["message"].get<std::string>().find("--bogus") != std::string::npos);
  Result m = run({"geom", "third-point", "--x", "1,-1,0,0"});
  CHECK(m.code == 2);
  CHECK(m.json()["error"]["message"].get<std::string>().find("--y") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"points", "enum", "--surface", scratch("missing.json")}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("descent certify, verify and corrupt") {
  Result r = run({"descent", "certify", "--dS", "3", "--degree", "10", "--goal", "coray"});
  CHECK(r.code == 0);
  std::ifstream g(std::string(ZC_GOLDEN_DIR) + "/coray_d10.json");
  CHECK(r.json() == Json::parse(g));

  std::string path = scratch("cert.json");
  Result w = run({"descent", "certify", "--degree", "10", "--goal", "coray", "--out", path});
  CHECK(w.code == 0);
  CHECK(Json::parse(read_file(path)) == r.json());
  Result v = run({"descent", "verify", path});
  CHECK(v.code == 0);
  CHECK(v.json()["ok"] == true);

  Json bad = r.json();
  bad["moves"][2]["witness"]["h0_l1"] = 20;
  write_file(path, bad.dump());
  Result v2 = run({"descent", "verify", path});
  CHECK(v2.code == 1);
  CHECK(v2.json()["ok"] == false);
  CHECK(v2.json()["step"] == 2);

  Result a = run({"descent", "certify", "--degree", "-5", "--abstract", "--goal", "cubic-positive"});
  CHECK(a.code == 0);
  CHECK(a.json()["moves"][0]["kind"] == "EntryRR");
}

TEST_CASE("descent suite, cubic, ceiling 200") {
  Result r = run({"descent", "suite", "--dS", "3", "--ceiling", "200"});
  CHECK(r.code == 0);
  Json j = r.json();
  CHECK(j["rows"].size() == 200);
  for (const auto& row : j["rows"]) CHECK(row["final_degree"].get<long>() <= 18);
  CHECK(j["all_ok"] == true);
}

TEST_CASE("descent threshold") {
  Result r = run({"descent", "threshold", "--dS", "2", "--threshold", "12", "--even-only", "--ceiling", "40"});
  CHECK(r.code == 0);
  CHECK(r.json()["ok"] == true);
}

TEST_CASE("points enum and saturate") {
  Result r = run({"points", "enum", "--height", "2"});
  CHECK(r.code == 0);
  Json pts = r.json();
  CHECK(pts.is_array());
  CHECK(pts.size() >= 6);
  std::string seeds = scratch("seeds.json");
  Result w = run({"points", "enum", "--height", "1", "--out", seeds});
  CHECK(w.code == 0);
  Result s = run({"points", "saturate", "--seeds", seeds, "--rounds", "1", "--cap", "50"});
  CHECK(s.code == 0);
  CHECK(s.json().size() <= 50);
  CHECK(s.json().size() >= 6);
}

TEST_CASE("outputs are byte-identical across runs") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"points", "enum", "--height", "4", "--threads", "1"},
           {"descent", "suite", "--dS", "1", "--ceiling", "60", "--threads", "3"},
           {"chow", "pencil", "--samples", "20", "--seed", "4"}}) {
    Result a = run(args), b = run(args);
    CHECK(a.out == b.out);
    CHECK(Json::accept(a.out));
  }
  Result t1 = run({"points", "enum", "--height", "4", "--threads", "1"});
  Result t3 = run({"points", "enum", "--height", "4", "--threads", "3"});
  CHECK(t1.out == t3.out);
}
