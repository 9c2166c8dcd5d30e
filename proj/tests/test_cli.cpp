#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qhyp/json_io.hpp"

using qhyp::io::json;

namespace {

namespace fs = std::filesystem;

const fs::path& workdir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("qhyp_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string path(const std::string& name) { return (workdir() / name).string(); }

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string out = path("stdout.txt");
  const std::string cmd = std::string(QHYP_CLI) + " " + args + " > " + out + " 2> " + path("stderr.txt");
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

void write(const std::string& name, const json& j) { qhyp::io::write_file(path(name), j); }

}  // namespace

TEST_CASE("random, invariants, check pipeline") {
  REQUIRE(run("--seed 9 random --n 2 --m 5 -o " + path("p.json")).code == 0);
  REQUIRE(run("invariants " + path("p.json") + " -o " + path("w.json")).code == 0);
  const Run chk = run("check " + path("w.json") + " --n 2");
  CHECK(chk.code == 0);
  CHECK(json::parse(chk.out)["member"] == true);
}

TEST_CASE("invariants of T0") {
  write("t0.json", json::parse(R"({"n": 2, "form": "H1", "points": [
    [[1,0,0,0],[0,0,0,0],[1,0,0,0]], [[-1,0,0,0],[0,0,0,0],[1,0,0,0]], [[0,0,0,0],[1,0,0,0],[1,0,0,0]]]})"));
  const Run r = run("invariants " + path("t0.json"));
  REQUIRE(r.code == 0);
  const json w = json::parse(r.out);
  CHECK(w["cartan"].get<double>() == doctest::Approx(0.0));
  CHECK(w["r"].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("m = 4 has one cross-ratio in each list") {
  REQUIRE(run("--seed 3 random --n 2 --m 4 -o " + path("p4.json")).code == 0);
  const Run r = run("invariants " + path("p4.json"));
  REQUIRE(r.code == 0);
  const json w = json::parse(r.out);
  CHECK(w["x2"].size() == 1);
  CHECK(w["x3"].size() == 1);
  CHECK(w["xk"].empty());
}

TEST_CASE("reconstruct then strict congruence against the source") {
  REQUIRE(run("--seed 11 random --n 3 --m 6 -o " + path("src.json")).code == 0);
  REQUIRE(run("invariants " + path("src.json") + " -o " + path("src_w.json")).code == 0);
  REQUIRE(run("reconstruct " + path("src_w.json") + " --n 3 -o " + path("rec.json")).code == 0);
  CHECK(run("congruent " + path("src.json") + " " + path("rec.json")).code == 0);
  CHECK(run("congruent " + path("src.json") + " " + path("rec.json") + " --mode gauge").code == 0);
  REQUIRE(run("--seed 12 random --n 3 --m 6 -o " + path("other.json")).code == 0);
  CHECK(run("congruent " + path("src.json") + " " + path("other.json") + " --mode gauge").code == 1);
}

TEST_CASE("exit codes for bad input") {
  {
    std::ofstream(path("bad.json")) << "{bad";
  }
  CHECK(run("invariants " + path("bad.json")).code == 2);
  CHECK(run("invariants " + path("missing.json")).code == 2);

  REQUIRE(run("--seed 4 random --n 2 --m 5 -o " + path("p5.json")).code == 0);
  REQUIRE(run("invariants " + path("p5.json") + " -o " + path("w5.json")).code == 0);
  json w = qhyp::io::read_file(path("w5.json"));
  w["r"] = -0.5;
  write("neg_r.json", w);
  CHECK(run("check " + path("neg_r.json") + " --n 2").code == 2);

  CHECK(run("--max-m 4 invariants " + path("p5.json")).code == 2);
  CHECK(run("--tol 1 check " + path("w5.json") + " --n 2").code == 2);
}

TEST_CASE("flipped cross-ratio gives a negative verdict with violations") {
  int negatives = 0;
  for (int seed = 20; seed < 30; ++seed) {
    REQUIRE(run("--seed " + std::to_string(seed) + " random --n 2 --m 5 -o " + path("f.json")).code == 0);
    REQUIRE(run("invariants " + path("f.json") + " -o " + path("fw.json")).code == 0);
    json w = qhyp::io::read_file(path("fw.json"));
    for (auto& q : w["x2"])
      for (auto& c : q) c = -c.get<double>();
    write("flipped.json", w);
    const Run r = run("check " + path("flipped.json") + " --n 2");
    if (r.code == 1) {
      ++negatives;
      CHECK_FALSE(json::parse(r.out)["violations"].empty());
    }
  }
  CHECK(negatives >= 7);
}

TEST_CASE("coincident points exit 3") {
  write("dup.json", json::parse(R"({"n": 2, "form": "H1", "points": [
    [[1,0,0,0],[0,0,0,0],[1,0,0,0]], [[2,0,0,0],[0,0,0,0],[2,0,0,0]], [[0,0,0,0],[1,0,0,0],[1,0,0,0]]]})"));
  CHECK(run("invariants " + path("dup.json")).code == 3);
}

TEST_CASE("moore-det of the hyperbolic block prints -1") {
  write("j.json", json::parse(R"({"rows":2,"cols":2,"entries":[[[0,0,0,0],[1,0,0,0]],[[1,0,0,0],[0,0,0,0]]]})"));
  const Run r = run("moore-det " + path("j.json"));
  CHECK(r.code == 0);
  CHECK(std::stod(r.out) == doctest::Approx(-1.0));
}

TEST_CASE("loxodromic commands") {
  REQUIRE(run("lox build --r 2 --beta 0.5 --theta 1.0 -o " + path("l.json")).code == 0);
  const Run c = run("lox classify " + path("l.json"));
  REQUIRE(c.code == 0);
  const json cls = json::parse(c.out);
  CHECK(cls["r"].get<double>() == doctest::Approx(2.0));
  CHECK(cls["beta"].get<double>() == doctest::Approx(0.5));
  CHECK(cls["theta"].get<double>() == doctest::Approx(1.0));

  write("id.json", qhyp::io::to_json(qhyp::QMatrix::identity(3)));
  CHECK(run("lox classify " + path("id.json")).code == 1);

  REQUIRE(run("--seed 5 lox random --k 2 -o " + path("g.json")).code == 0);
  const Run rc = run("lox rep-coords " + path("g.json"));
  REQUIRE(rc.code == 0);
  CHECK(json::parse(rc.out)["coordinates"]["m"] == 4);
  CHECK(run("lox build --r 1").code == 2);
}

TEST_CASE("outputs are deterministic under a seed") {
  const Run a = run("--seed 77 random --n 3 --m 5");
  const Run b = run("--seed 77 random --n 3 --m 5");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("--seed 78 random --n 3 --m 5").out != a.out);
}
