#include "doctest.h"
#include "eqehr/fixtures.hpp"
#include "eqehr/verify.hpp"

using namespace eqehr;

namespace {

InstanceFile as_instance(const std::string& name, Instance inst) {
  InstanceFile f;
  f.name = name;
  f.P = std::move(inst.P);
  f.G = std::move(inst.G);
  return f;
}

}  // namespace

TEST_CASE("identity ledger passes on worked examples") {
  for (auto& [name, inst] :
       std::vector<std::pair<std::string, Instance>>{{"square", square_swap()},
                                                     {"cube", klein_four_cube()},
                                                     {"prism", z3_prism()},
                                                     {"circuit", circuit_d4({1, 1, 1})},
                                                     {"cross", cross_polytope_2()}}) {
    auto rep = verify_instance(as_instance(name, std::move(inst)), /*deep=*/true);
    for (const auto& line : rep.lines) {
      INFO(name << ":" << line.check << " " << line.detail);
      CHECK(line.pass);
    }
  }
}

TEST_CASE("ledger catches a broken det identity scenario") {
  // sanity: a non-polynomial h* instance still passes the ledger (the checks
  // are identities, not polynomiality assertions)
  auto rep = verify_instance(as_instance("a112", circuit_d4({1, 1, 2})), false);
  for (const auto& line : rep.lines) {
    INFO(line.check << " " << line.detail);
    CHECK(line.pass);
  }
}
