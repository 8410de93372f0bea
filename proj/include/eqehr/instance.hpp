#pragma once

#include <string>

#include "eqehr/complex.hpp"
#include "eqehr/hstar.hpp"

#include "json.hpp"

namespace eqehr {

using Json = nlohmann::json;

// A parsed instance: invariant lattice polytope + finite group, with an
// optional user-supplied character table and labels. Matrices are row-major
// integer arrays, rationals are "p/q" strings (or plain JSON integers).
struct InstanceFile {
  std::string name;
  RationalPolytope P;
  FiniteGroup G;
  std::optional<CharacterTable> table;  // verified on parse
  Json labels;

  CharacterTable character_table() const;  // supplied or automatic
};

InstanceFile parse_instance(const Json& j);
InstanceFile load_instance(const std::string& path);
Json instance_to_json(const std::string& name, const RationalPolytope& P, const FiniteGroup& G);

// serialization of values (exact round trip)
Json cyclo_to_json(const Cyclo& v);
Cyclo cyclo_from_json(const Json& j);
Json class_function_to_json(const ClassFunction& cf);
ClassFunction class_function_from_json(const Json& j, const FiniteGroup& G);
Json ratfunc_to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const Json& j);
Json hstar_to_json(const HStarSeries& h);
HStarSeries hstar_from_json(const Json& j, const FiniteGroup& G);
Json complex_to_json(const PolyComplex& T, unsigned long N,
                     const FiniteGroup* G = nullptr);
PolyComplex complex_from_json(const Json& j);
std::string complex_to_off(const PolyComplex& T);

Json char_table_to_json(const CharacterTable& T, const std::vector<AffineMap>& generators);
CharacterTable char_table_from_json(const Json& j, const FiniteGroup& G,
                                    const std::vector<AffineMap>& generators);

}  // namespace eqehr
