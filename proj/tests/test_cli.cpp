#include <cstdlib>
#include <fstream>

#include "doctest.h"
#include "eqehr/errors.hpp"
#include "eqehr/fixtures.hpp"
#include "eqehr/instance.hpp"
#include "eqehr/triangulate.hpp"

using namespace eqehr;

TEST_CASE("instance json round trip") {
  for (auto inst : {square_swap(), klein_four_cube(), z3_prism(), circuit_d4({1, 1, 1})}) {
    Json j = instance_to_json("x", inst.P, inst.G);
    InstanceFile parsed = parse_instance(j);
    CHECK(parsed.P.vertices == inst.P.vertices);
    CHECK(parsed.G.order() == inst.G.order());
    CHECK(parsed.G.num_classes() == inst.G.num_classes());
  }
}

TEST_CASE("ambient lattice instances") {
  // the Klein-four cube described in ambient coordinates over the lattice of
  // odd points
  Json j;
  j["name"] = "cube-ambient";
  j["dim"] = 3;
  j["ambient"] = Json{{"basis", Json::array({Json::array({2, 0, 0}), Json::array({0, 2, 0}),
                                             Json::array({0, 0, 2})})},
                      {"offset", Json::array({1, 1, 1})}};
  Json verts = Json::array();
  for (long a : {-1, 1})
    for (long b : {-1, 1})
      for (long c : {-1, 1}) verts.push_back(Json::array({a, b, c}));
  j["vertices"] = verts;
  j["generators"] = Json::array(
      {Json{{"linear", Json::array({Json::array({0, 1, 0}), Json::array({1, 0, 0}),
                                    Json::array({0, 0, -1})})},
            {"translation", Json::array({0, 0, 0})}},
       Json{{"linear", Json::array({Json::array({0, -1, 0}), Json::array({-1, 0, 0}),
                                    Json::array({0, 0, -1})})},
            {"translation", Json::array({0, 0, 0})}}});
  InstanceFile parsed = parse_instance(j);
  auto direct = klein_four_cube();
  CHECK(parsed.G.order() == 4);
  auto h1 = hstar(parsed.P, parsed.G);
  auto h2 = hstar(direct.P, direct.G);
  REQUIRE(h1.polynomial);
  CHECK(h1.degree == h2.degree);
  for (long m = 0; m <= h1.degree; ++m) {
    // same multiset of class values up to class reordering
    std::multiset<std::vector<Rat>> a, b;
    for (const auto& v : h1.coefficient(m).values) a.insert(v.coeffs());
    for (const auto& v : h2.coefficient(m).values) b.insert(v.coeffs());
    CHECK(a == b);
  }
}

TEST_CASE("series and class function round trips") {
  auto inst = z3_prism();
  auto h = hstar(inst.P, inst.G);
  SUBCASE("hstar series") {
    Json j = hstar_to_json(h);
    HStarSeries back = hstar_from_json(j, inst.G);
    REQUIRE(back.per_class.size() == h.per_class.size());
    for (std::size_t c = 0; c < h.per_class.size(); ++c) CHECK(back.per_class[c] == h.per_class[c]);
    CHECK(back.polynomial == h.polynomial);
    CHECK(back.coeffs.size() == h.coeffs.size());
    for (std::size_t m = 0; m < h.coeffs.size(); ++m) CHECK(back.coeffs[m] == h.coeffs[m]);
  }
  SUBCASE("class functions with irrational values") {
    auto T = char_table_auto(inst.G);
    for (const auto& irr : T.irreducibles) {
      Json j = class_function_to_json(irr);
      CHECK(class_function_from_json(j, inst.G) == irr);
    }
  }
  SUBCASE("rational functions") {
    for (const auto& f : h.per_class) {
      Json j = ratfunc_to_json(f);
      CHECK(ratfunc_from_json(j) == f);
    }
  }
}

TEST_CASE("triangulation json round trip") {
  auto inst = z3_prism();
  auto res = invariant_triangulation(inst.P, inst.G, 3);
  REQUIRE(res.ok);
  Json j = complex_to_json(res.complex, 3);
  PolyComplex back = complex_from_json(j);
  CHECK(complexes_equal(back, res.complex));
}

TEST_CASE("character table json round trip") {
  auto inst = p5_reflexive();
  auto T = char_table_auto(inst.G);
  std::vector<AffineMap> gens = {inst.G.elements[1]};
  Json j = char_table_to_json(T, gens);
  CharacterTable back = char_table_from_json(j, inst.G, gens);
  REQUIRE(back.size() == T.size());
  for (std::size_t i = 0; i < T.size(); ++i) CHECK(back.irreducibles[i] == T.irreducibles[i]);
}

TEST_CASE("instance with an embedded character table") {
  auto inst = p5_reflexive();
  auto T = char_table_auto(inst.G);
  std::vector<AffineMap> gens = {inst.G.elements[1]};
  Json j = instance_to_json("p5", inst.P, inst.G);
  // rebuild the generator list to match the table's word alphabet
  j["generators"] = Json::array();
  {
    Json g;
    Json lin = Json::array();
    for (std::size_t i = 0; i < 4; ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < 4; ++k) row.push_back(gens[0].linear.at(i, k).get_si());
      lin.push_back(row);
    }
    g["linear"] = lin;
    g["translation"] = Json::array({0, 0, 0, 0});
    j["generators"].push_back(g);
  }
  j["character_table"] = char_table_to_json(T, gens);
  InstanceFile parsed = parse_instance(j);
  REQUIRE(parsed.table.has_value());
  auto h = hstar(parsed.P, parsed.G);
  CHECK(is_effective(h.coefficient(1), *parsed.table));
  // a corrupted value must fail verification
  j["character_table"]["values"][1][1]["c"][0] = "2";
  CHECK_THROWS_AS(parse_instance(j), TableInvalid);
}

TEST_CASE("gen-corpus output matches the committed corpus") {
  std::string bin = "./tools/eqehr";
  std::ifstream check(bin);
  if (!check.good()) {
    MESSAGE("CLI binary not found; skipping");
    return;
  }
  REQUIRE(std::system((bin + " gen-corpus corpus_regen > /dev/null").c_str()) == 0);
  int rc = std::system("diff -r corpus_regen ../corpus > /dev/null 2>&1");
  CHECK(WEXITSTATUS(rc) == 0);
}

TEST_CASE("cli exit codes") {
  // run the built binary end to end; it sits next to the test binary's dir
  std::string bin = "./tools/eqehr";
  std::ifstream check(bin);
  if (!check.good()) {
    MESSAGE("CLI binary not found next to the test run directory; skipping");
    return;
  }
  auto run = [&](const std::string& args) {
    int rc = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
  };
  // success
  std::ofstream("cli_square.json") << instance_to_json("sq", square_swap().P, square_swap().G).dump();
  CHECK(run("hstar cli_square.json") == 0);
  CHECK(run("verify cli_square.json") == 0);
  // input error: missing file
  CHECK(run("hstar no-such-file.json") == 2);
  // input error: non-invariant polytope
  {
    Json j = instance_to_json("bad", hull({RatVector(std::vector<Rat>{Rat(0), Rat(0)}),
                                           RatVector(std::vector<Rat>{Rat(2), Rat(0)}),
                                           RatVector(std::vector<Rat>{Rat(0), Rat(1)})}),
                              square_swap().G);
    std::ofstream("cli_bad.json") << j.dump();
    CHECK(run("hstar cli_bad.json") == 2);
  }
  // verification failure exit: triangulate refusal on the cube at N = 1
  {
    auto c = klein_four_cube();
    std::ofstream("cli_cube.json") << instance_to_json("cube", c.P, c.G).dump();
    CHECK(run("triangulate cli_cube.json --N 1") == 1);
    CHECK(run("triangulate cli_cube.json --N 4") == 0);
  }
}
