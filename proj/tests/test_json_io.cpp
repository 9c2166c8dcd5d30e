#include <doctest.h>

#include "oracles.hpp"
#include "qhyp/error.hpp"
#include "qhyp/json_io.hpp"

using namespace qhyp;
using qhyp::io::json;

TEST_CASE("quaternion and matrix round trip") {
  const Quaternion q(1.0, -2.0, 0.5, 3.0);
  CHECK(io::quaternion_from_json(io::to_json(q)) == q);
  CHECK(io::to_json(q) == json::array({1.0, -2.0, 0.5, 3.0}));
  Rng rng(71);
  const QMatrix m = oracle::random_matrix(2, 3, rng);
  const json j = io::to_json(m);
  CHECK(j["rows"] == 2);
  CHECK(j["cols"] == 3);
  CHECK(io::matrix_from_json(j) == m);
  CHECK(io::matrix_from_json(io::parse(j.dump())) == m);
}

TEST_CASE("points round trip keeps the form") {
  Rng rng(72);
  const auto pts = random_boundary_tuple(3, 4, rng, FormTag::H3);
  const json j = io::points_to_json(pts);
  CHECK(j["form"] == "H3");
  CHECK(j["n"] == 3);
  const auto back = io::points_from_json(io::parse(j.dump()));
  REQUIRE(back.size() == 4);
  CHECK(back[2].form() == pts[2].form());
  CHECK(back[2].coords() == pts[2].coords());
}

TEST_CASE("coordinates round trip") {
  Rng rng(73);
  const ModuliCoordinates w = coordinates(random_boundary_tuple(2, 6, rng));
  const json j = io::to_json(w);
  CHECK(j["xk"].size() == 3);
  CHECK(j["xk"][0][0] == 4);
  CHECK(j["xk"][0][1] == 5);
  CHECK(j["u"][0] == 0.0);
  const ModuliCoordinates back = io::coordinates_from_json(io::parse(j.dump()));
  CHECK(coordinate_distance(w, back) == 0.0);
}

TEST_CASE("gram and membership documents") {
  const SpecialGram g = gram_from_tuple(oracle::t0());
  const json j = io::gram_to_json(g);
  CHECK(j["m"] == 3);
  CHECK(io::gram_from_json(j).matrix().matrix() == g.matrix().matrix());
  MembershipReport r;
  r.member = false;
  r.rank = 2;
  r.violations.push_back({{{1, 2}}, 0.5, Requirement::zero});
  const json rj = io::to_json(r);
  CHECK(rj["member"] == false);
  CHECK(rj["violations"][0]["I"] == json::array({1, 2}));
  CHECK(rj["violations"][0]["need"] == "=0");
}

TEST_CASE("malformed documents raise InvalidArgument") {
  CHECK_THROWS_AS(io::parse("{bad"), InvalidArgument);
  CHECK_THROWS_AS(io::quaternion_from_json(json::array({1, 2, 3})), InvalidArgument);
  CHECK_THROWS_AS(io::matrix_from_json(json{{"rows", 1}}), InvalidArgument);
  CHECK_THROWS_AS(io::points_from_json(json{{"n", 2}, {"form", "H9"}, {"points", json::array()}}), InvalidArgument);
  Rng rng(74);
  json w = io::to_json(coordinates(random_boundary_tuple(2, 4, rng)));
  w["r"] = -1.0;
  CHECK_THROWS_AS(io::coordinates_from_json(w), InvalidArgument);
}

TEST_CASE("generators round trip") {
  Rng rng(75);
  const std::vector<QMatrix> gens{random_loxodromic(rng), random_loxodromic(rng)};
  const json j = io::generators_to_json(gens);
  CHECK(j["k"] == 2);
  const auto back = io::generators_from_json(io::parse(j.dump()));
  REQUIRE(back.size() == 2);
  CHECK(back[1] == gens[1]);
  const json rc = io::to_json(rep_coordinates(gens));
  CHECK(rc["radii"].size() == 2);
  CHECK(rc["angles"].size() == 4);
  CHECK(rc["coordinates"]["m"] == 4);
}
