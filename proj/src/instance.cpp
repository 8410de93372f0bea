#include "eqehr/instance.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "eqehr/errors.hpp"
#include "eqehr/lattice.hpp"

namespace eqehr {

namespace {

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw InputError("expected an integer or a \"p/q\" string");
}

Json rat_to_json(const Rat& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
  return Json(rat_to_string(q));
}

RatVector vector_from_json(const Json& j) {
  RatVector v;
  for (const auto& c : j) v.x.push_back(rat_from_json(c));
  return v;
}

Json vector_to_json(const RatVector& v) {
  Json j = Json::array();
  for (const auto& c : v.x) j.push_back(rat_to_json(c));
  return j;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("expected a non-empty matrix");
  IntMatrix m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].size() != m.cols) throw InputError("ragged matrix");
    for (std::size_t k = 0; k < m.cols; ++k) {
      Rat q = rat_from_json(j[i][k]);
      if (!is_integer(q)) throw InputError("matrix entries must be integers");
      m.at(i, k) = q.get_num();
    }
  }
  return m;
}

Json matrix_to_json(const IntMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols; ++k) row.push_back(Json(m.at(i, k).get_si()));
    j.push_back(row);
  }
  return j;
}

}  // namespace

Json cyclo_to_json(const Cyclo& v) {
  Json j;
  j["n"] = v.conductor();
  Json c = Json::array();
  for (const auto& q : v.coeffs()) c.push_back(rat_to_json(q));
  j["c"] = c;
  return j;
}

Cyclo cyclo_from_json(const Json& j) {
  unsigned long n = j.at("n").get<unsigned long>();
  std::vector<Rat> c;
  for (const auto& q : j.at("c")) c.push_back(rat_from_json(q));
  return Cyclo::from_powers(n, c);
}

Json class_function_to_json(const ClassFunction& cf) {
  Json vals = Json::array();
  for (const auto& v : cf.values) vals.push_back(cyclo_to_json(v));
  return Json{{"values", vals}};
}

ClassFunction class_function_from_json(const Json& j, const FiniteGroup& G) {
  std::vector<Cyclo> vals;
  for (const auto& v : j.at("values")) vals.push_back(cyclo_from_json(v));
  if (vals.size() != G.num_classes()) throw InputError("class function arity mismatch");
  return ClassFunction(G, std::move(vals));
}

Json ratfunc_to_json(const RatFunc& f) {
  Json num = Json::array();
  for (const auto& c : f.numerator_raw().c) num.push_back(cyclo_to_json(c));
  Json den = Json::array();
  for (const auto& [fac, m] : f.den_factors())
    den.push_back(Json{{"zeta", cyclo_to_json(fac.zeta)}, {"k", fac.k}, {"mult", m}});
  return Json{{"num", num}, {"den", den}};
}

RatFunc ratfunc_from_json(const Json& j) {
  std::vector<Cyclo> num;
  for (const auto& c : j.at("num")) num.push_back(cyclo_from_json(c));
  std::vector<std::pair<DenFactor, unsigned>> den;
  for (const auto& d : j.at("den"))
    den.emplace_back(DenFactor{cyclo_from_json(d.at("zeta")), d.at("k").get<unsigned long>()},
                     d.at("mult").get<unsigned>());
  return RatFunc(Poly(std::move(num)), std::move(den));
}

Json hstar_to_json(const HStarSeries& h) {
  Json per = Json::array();
  for (const auto& f : h.per_class) per.push_back(ratfunc_to_json(f));
  Json coeffs = Json::array();
  for (const auto& c : h.coeffs) coeffs.push_back(class_function_to_json(c));
  Json flags = Json::array();
  for (bool b : h.class_polynomial) flags.push_back(b);
  return Json{{"per_class", per},
              {"class_polynomial", flags},
              {"polynomial", h.polynomial},
              {"degree", h.degree},
              {"truncated", h.truncated},
              {"truncation", h.truncation},
              {"coefficients", coeffs}};
}

HStarSeries hstar_from_json(const Json& j, const FiniteGroup& G) {
  HStarSeries h;
  h.group = &G;
  for (const auto& f : j.at("per_class")) h.per_class.push_back(ratfunc_from_json(f));
  for (const auto& b : j.at("class_polynomial")) h.class_polynomial.push_back(b.get<bool>());
  h.polynomial = j.at("polynomial").get<bool>();
  h.degree = j.at("degree").get<long>();
  h.truncated = j.at("truncated").get<bool>();
  h.truncation = j.at("truncation").get<std::size_t>();
  for (const auto& c : j.at("coefficients"))
    h.coeffs.push_back(class_function_from_json(c, G));
  return h;
}

Json complex_to_json(const PolyComplex& T, unsigned long N, const FiniteGroup* G) {
  Json verts = Json::array();
  for (const auto& v : T.verts) verts.push_back(vector_to_json(v));
  auto facet_list = T.facets();
  Json facets = Json::array();
  for (const auto& f : facet_list) {
    Json ff = Json::array();
    for (auto v : f) ff.push_back(v);
    facets.push_back(ff);
  }
  Json out{{"vertices", verts}, {"facets", facets}, {"denominator", N}};
  if (G) {
    // orbit label per facet
    std::map<std::vector<uint32_t>, int> label;
    int next = 0;
    for (const auto& f : facet_list) {
      if (label.count(f)) continue;
      for (const auto& g : G->elements) label.emplace(T.map_face(f, g), next);
      ++next;
    }
    Json labels = Json::array();
    for (const auto& f : facet_list) labels.push_back(label[f]);
    out["facet_orbits"] = labels;
  }
  return out;
}

PolyComplex complex_from_json(const Json& j) {
  std::vector<RatVector> verts;
  for (const auto& v : j.at("vertices")) verts.push_back(vector_from_json(v));
  std::vector<std::vector<RatVector>> cells;
  for (const auto& f : j.at("facets")) {
    std::vector<RatVector> cell;
    for (const auto& idx : f) cell.push_back(verts.at(idx.get<std::size_t>()));
    cells.push_back(cell);
  }
  return complex_from_facets(cells);
}

std::string complex_to_off(const PolyComplex& T) {
  std::ostringstream os;
  auto facets = T.facets();
  os << "# vertices " << T.verts.size() << " facets " << facets.size() << "\n";
  for (const auto& v : T.verts) os << "v " << v.str() << "\n";
  for (const auto& f : facets) {
    os << "f";
    for (auto i : f) os << " " << i;
    os << "\n";
  }
  return os.str();
}

Json char_table_to_json(const CharacterTable& T, const std::vector<AffineMap>& generators) {
  const FiniteGroup& G = *T.group;
  Json sizes = Json::array(), reps = Json::array(), values = Json::array(),
       names = Json::array();
  // represent each class by a word in the generators (breadth-first search)
  std::vector<std::vector<unsigned>> word(G.order());
  std::vector<bool> seen(G.order(), false);
  seen[0] = true;
  std::vector<uint32_t> frontier = {0};
  std::vector<uint32_t> gen_idx;
  for (const auto& g : generators) gen_idx.push_back(G.index_of(g));
  while (!frontier.empty()) {
    std::vector<uint32_t> next;
    for (uint32_t e : frontier)
      for (unsigned gi = 0; gi < gen_idx.size(); ++gi) {
        uint32_t img = G.mult[gen_idx[gi]][e];
        if (seen[img]) continue;
        seen[img] = true;
        word[img] = word[e];
        word[img].push_back(gi);
        next.push_back(img);
      }
    frontier = std::move(next);
  }
  for (std::size_t c = 0; c < G.num_classes(); ++c) {
    sizes.push_back(G.classes[c].size());
    Json w = Json::array();
    for (unsigned gi : word[G.class_rep(c)]) w.push_back(gi);
    reps.push_back(w);
  }
  for (const auto& irr : T.irreducibles) {
    Json row = Json::array();
    for (const auto& v : irr.values) row.push_back(cyclo_to_json(v));
    values.push_back(row);
  }
  for (const auto& n : T.names) names.push_back(n);
  return Json{{"class_sizes", sizes}, {"class_reps", reps}, {"values", values}, {"names", names}};
}

CharacterTable char_table_from_json(const Json& j, const FiniteGroup& G,
                                    const std::vector<AffineMap>& generators) {
  CharacterTable T;
  T.group = &G;
  const auto& reps = j.at("class_reps");
  const auto& sizes = j.at("class_sizes");
  if (reps.size() != G.num_classes()) throw InputError("character table class count mismatch");
  // map words to classes
  std::vector<std::size_t> class_order;  // file class index -> group class index
  for (std::size_t c = 0; c < reps.size(); ++c) {
    AffineMap e = AffineMap::identity(G.dim());
    for (const auto& gi : reps[c]) e = generators.at(gi.get<std::size_t>()).compose(e);
    uint32_t idx = G.index_of(e);
    class_order.push_back(G.class_of[idx]);
    if (sizes[c].get<std::size_t>() != G.classes[G.class_of[idx]].size())
      throw InputError("character table class size mismatch");
  }
  for (std::size_t r = 0; r < j.at("values").size(); ++r) {
    std::vector<Cyclo> vals(G.num_classes());
    const auto& row = j.at("values")[r];
    if (row.size() != G.num_classes()) throw InputError("character table row arity");
    for (std::size_t c = 0; c < row.size(); ++c) vals[class_order[c]] = cyclo_from_json(row[c]);
    T.irreducibles.emplace_back(G, std::move(vals));
  }
  if (j.contains("names"))
    for (const auto& n : j.at("names")) T.names.push_back(n.get<std::string>());
  else
    for (std::size_t i = 0; i < T.irreducibles.size(); ++i)
      T.names.push_back("chi_" + std::to_string(i));
  verify_table(T);
  T.verified = true;
  return T;
}

CharacterTable InstanceFile::character_table() const {
  if (table) return *table;
  return char_table_auto(G);
}

InstanceFile parse_instance(const Json& j) {
  InstanceFile inst;
  inst.name = j.value("name", "instance");
  std::size_t dim = j.at("dim").get<std::size_t>();

  struct Amb {
    IntMatrix basis;
    RatVector offset;
  };
  std::optional<Amb> amb;
  if (j.contains("ambient")) {
    Amb a;
    a.basis = matrix_from_json(j.at("ambient").at("basis"));
    a.offset = vector_from_json(j.at("ambient").at("offset"));
    if (a.basis.rows != dim) throw InputError("ambient basis rank must equal dim");
    amb = std::move(a);
  }

  std::vector<RatVector> verts;
  for (const auto& v : j.at("vertices")) verts.push_back(vector_from_json(v));
  std::vector<AffineMap> gens;
  for (const auto& g : j.at("generators")) {
    IntMatrix lin = matrix_from_json(g.at("linear"));
    std::vector<Int> tr;
    for (const auto& c : g.at("translation")) {
      Rat q = rat_from_json(c);
      if (!is_integer(q) && !amb) throw InputError("translations must be integral");
      tr.push_back(q.get_num());
    }
    gens.emplace_back(std::move(lin), std::move(tr));
  }

  if (amb) {
    // convert ambient data to lattice coordinates
    std::vector<RatVector> conv;
    for (const auto& v : verts) {
      RatVector w = v - amb->offset;
      auto c = coords_in_basis(amb->basis, w);
      if (!c) throw InputError("vertex outside the ambient lattice span");
      conv.push_back(*c);
    }
    verts = std::move(conv);
    std::vector<AffineMap> cgens;
    for (const auto& g : gens) {
      // conjugate: same construction as fixtures::AffineCoords
      std::size_t D = amb->offset.dim(), d = dim;
      RatVector img(D);
      for (std::size_t i = 0; i < D; ++i) {
        Rat s(g.translation[i]);
        for (std::size_t l = 0; l < D; ++l) s += Rat(g.linear.at(i, l)) * amb->offset[l];
        img[i] = s - amb->offset[i];
      }
      auto t = coords_in_basis(amb->basis, img);
      if (!t || !t->is_integral()) throw InputError("generator does not preserve the lattice");
      IntMatrix lin(d, d);
      for (std::size_t col = 0; col < d; ++col) {
        RatVector w(D);
        for (std::size_t i = 0; i < D; ++i) {
          Rat s(0);
          for (std::size_t l = 0; l < D; ++l)
            s += Rat(g.linear.at(i, l)) * Rat(amb->basis.at(col, l));
          w[i] = s;
        }
        auto c = coords_in_basis(amb->basis, w);
        if (!c || !c->is_integral()) throw InputError("generator does not preserve the lattice");
        for (std::size_t i = 0; i < d; ++i) lin.at(i, col) = (*c)[i].get_num();
      }
      std::vector<Int> tr(d);
      for (std::size_t i = 0; i < d; ++i) tr[i] = (*t)[i].get_num();
      cgens.emplace_back(std::move(lin), std::move(tr));
    }
    gens = std::move(cgens);
  }

  for (const auto& v : verts)
    if (v.dim() != dim) throw InputError("vertex dimension mismatch");
  inst.P = hull(verts);
  std::size_t max_order = j.value("max_order", static_cast<std::size_t>(4096));
  inst.G = close_group(gens, dim, max_order);
  if (!is_invariant(inst.P, inst.G)) throw NotInvariant("instance polytope is not invariant");
  if (j.contains("character_table"))
    inst.table = char_table_from_json(j.at("character_table"), inst.G, gens);
  if (j.contains("labels")) inst.labels = j.at("labels");
  return inst;
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError(std::string("bad JSON: ") + e.what());
  }
  return parse_instance(j);
}

Json instance_to_json(const std::string& name, const RationalPolytope& P, const FiniteGroup& G) {
  Json j;
  j["name"] = name;
  j["dim"] = P.ambient_dim();
  Json verts = Json::array();
  for (const auto& v : P.vertices) verts.push_back(vector_to_json(v));
  j["vertices"] = verts;
  Json gens = Json::array();
  // emit every non-identity element as a generator; compact and unambiguous
  // for desk-scale groups
  for (std::size_t i = 1; i < G.order(); ++i) {
    Json g;
    g["linear"] = matrix_to_json(G.elements[i].linear);
    Json tr = Json::array();
    for (const auto& c : G.elements[i].translation) tr.push_back(Json(c.get_si()));
    g["translation"] = tr;
    gens.push_back(g);
  }
  if (G.order() == 1) {
    Json g;
    g["linear"] = matrix_to_json(IntMatrix::identity(P.ambient_dim()));
    Json tr = Json::array();
    for (std::size_t i = 0; i < P.ambient_dim(); ++i) tr.push_back(0);
    g["translation"] = tr;
    gens.push_back(g);
  }
  j["generators"] = gens;
  return j;
}

}  // namespace eqehr
