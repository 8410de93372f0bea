#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "eqehr/errors.hpp"
#include "eqehr/fixtures.hpp"
#include "eqehr/instance.hpp"
#include "eqehr/sr.hpp"
#include "eqehr/triangulate.hpp"
#include "eqehr/verify.hpp"

using namespace eqehr;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;

std::size_t truncation_from_env() {
  if (const char* env = std::getenv("EQEHRHART_TRUNCATE")) {
    long v = std::atol(env);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 0;  // library default
}

std::string series_pretty(const HStarSeries& h, const CharacterTable& table) {
  std::ostringstream os;
  for (std::size_t m = 0; m < h.coeffs.size(); ++m) {
    if (h.coeffs[m].is_zero()) continue;
    std::string c = format_class_function(h.coeffs[m], table);
    if (os.tellp() > 0) os << " + ";
    bool needs_parens = c.find(' ') != std::string::npos;
    if (m == 0) {
      os << c;
    } else {
      if (c == "1")
        ;
      else if (needs_parens)
        os << "(" << c << ")" << "*";
      else
        os << c << "*";
      os << "t";
      if (m > 1) os << "^" << m;
    }
  }
  if (h.truncated) os << " + O(t^" << h.coeffs.size() << ")";
  if (os.tellp() == 0) os << "0";
  return os.str();
}

int cmd_ehrhart(const std::string& path, long dilates, bool as_json) {
  InstanceFile inst = load_instance(path);
  CharacterTable table = inst.character_table();
  Json out;
  out["instance"] = inst.name;
  Json rows = Json::array();
  for (long m = 1; m <= dilates; ++m) {
    ClassFunction L = equivariant_L(inst.P, inst.G, Int(m));
    Json row;
    row["m"] = m;
    row["class_values"] = class_function_to_json(L);
    Json mult = Json::array();
    for (const auto& a : decompose(L, table)) mult.push_back(a.get_si());
    row["irreducible_multiplicities"] = mult;
    row["pretty"] = format_class_function(L, table);
    rows.push_back(row);
    if (!as_json)
      std::cout << "L(P,rho;" << m << ") = " << format_class_function(L, table) << "\n";
  }
  out["dilates"] = rows;
  if (as_json) std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_hstar(const std::string& path, unsigned long N, bool as_json) {
  InstanceFile inst = load_instance(path);
  CharacterTable table = inst.character_table();
  std::size_t trunc = truncation_from_env();
  Json out;
  out["instance"] = inst.name;
  if (N == 1) {
    HStarSeries h = hstar(inst.P, inst.G, trunc);
    auto cls = classify(h, table);
    out["series"] = hstar_to_json(h);
    out["polynomial"] = cls.polynomial;
    out["effective"] = cls.effective;
    out["effective_exact"] = cls.effective_exact;
    if (cls.polynomial) out["degree"] = cls.degree;
    out["pretty"] = series_pretty(h, table);
    Json mults = Json::array();
    for (const auto& c : h.coeffs) {
      Json row = Json::array();
      for (const auto& a : decompose(c, table)) row.push_back(a.get_si());
      mults.push_back(row);
    }
    out["irreducible_multiplicities"] = mults;
    Json names = Json::array();
    for (const auto& n : table.names) names.push_back(n);
    out["irreducible_names"] = names;
    if (!as_json) {
      std::cout << "h*(P,rho;t) = " << series_pretty(h, table) << "\n";
      std::cout << (cls.polynomial ? "polynomial" : "not polynomial");
      if (!cls.polynomial) {
        for (std::size_t c = 0; c < h.class_polynomial.size(); ++c)
          if (!h.class_polynomial[c])
            std::cout << " (class " << c << ": " << h.per_class[c].str() << ")";
      }
      std::cout << "; " << (cls.effective ? "effective" : "not effective")
                << (cls.effective_exact ? "" : " (sampled)") << "\n";
    }
  } else {
    HStarNSeries hn = hstar_N(inst.P, inst.G, N, trunc);
    out["N"] = N;
    out["polynomial"] = hn.polynomial;
    Json per = Json::array();
    for (const auto& f : hn.per_class) per.push_back(ratfunc_to_json(f));
    out["per_class_in_s"] = per;
    bool effective = true;
    for (const auto& c : hn.coeffs)
      if (!is_effective(c, table)) effective = false;
    out["effective"] = effective;
    out["effective_exact"] = !hn.truncated;
    if (!as_json) {
      std::cout << "h*_" << N << "(P,rho;t), s = t^(1/" << N << ")\n";
      std::cout << (hn.polynomial ? "polynomial" : "not polynomial") << "; "
                << (effective ? "effective" : "not effective")
                << (hn.truncated ? " (sampled)" : "") << "\n";
      for (std::size_t c = 0; c < hn.per_class.size(); ++c)
        std::cout << "class " << c << ": " << hn.per_class[c].str("s") << "\n";
    }
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_triangulate(const std::string& path, unsigned long N, const std::string& mode,
                    const std::string& out_file, bool as_json) {
  InstanceFile inst = load_instance(path);
  if (N == 0) N = inst.G.order();
  PolyComplex T;
  Json extra;
  if (mode == "orbit-pull") {
    auto res = invariant_triangulation(inst.P, inst.G, N);
    if (!res.ok) {
      std::cout << "refused: " << res.failure << "\n";
      auto w = square_obstruction(trivial_subdivision(inst.P), inst.G);
      if (w) {
        std::cout << "square obstruction witness on face {";
        for (auto v : w->face) std::cout << " " << inst.P.vertices[v].str();
        std::cout << " }\n";
      }
      return kExitVerifyFail;
    }
    T = res.complex;
    Json seq = Json::array();
    for (const auto& p : res.pull_sequence) seq.push_back(p.str());
    extra["pull_sequence"] = seq;
  } else if (mode == "translative") {
    auto S = trivial_subdivision(inst.P);
    auto tr = is_translative(S, inst.G);
    if (!tr.translative) {
      std::cout << "refused: trivial subdivision is not translative";
      if (tr.witness) std::cout << " (vertex " << tr.witness->vertex.str() << ")";
      std::cout << "\n";
      return kExitVerifyFail;
    }
    T = translative_refine(S, inst.G);
  } else if (mode == "glue") {
    if (!inst.labels.contains("glue_q"))
      throw InputError("glue mode needs labels.glue_q vertex list in the instance");
    std::vector<RatVector> qverts;
    for (const auto& v : inst.labels.at("glue_q")) {
      RatVector q;
      for (const auto& c : v)
        q.x.push_back(c.is_string() ? rat_from_string(c.get<std::string>())
                                    : Rat(static_cast<long>(c.get<long long>())));
      qverts.push_back(q);
    }
    RationalPolytope Q = hull(qverts);
    auto triangulate_part = [&](PolyComplex S) {
      if (S.is_triangulation()) return S;
      return translative_refine(S, inst.G);
    };
    auto SQ = triangulate_part(trivial_subdivision(Q));
    auto SK = triangulate_part(faces_disjoint_from(inst.P, Q));
    T = glue_triangulations(inst.P, inst.G, Q, SQ, SK);
  } else {
    throw InputError("unknown mode " + mode);
  }
  verify_invariant_triangulation(T, inst.P, inst.G, N);
  Json j = complex_to_json(T, N, &inst.G);
  j["certified"] = true;
  for (auto& [k, v] : extra.items()) j[k] = v;
  if (!out_file.empty()) {
    std::ofstream out(out_file);
    out << j.dump(2) << "\n";
  }
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << complex_to_off(T) << "certified invariant regular triangulation, vertices in (1/"
              << N << ")M\n";
  return kExitOk;
}

void print_report(const std::string& name, const VerifyReport& rep) {
  for (const auto& line : rep.lines) {
    std::cout << (line.pass ? "PASS " : "FAIL ") << name << ":" << line.check;
    if (!line.detail.empty()) std::cout << "  [" << line.detail << "]";
    std::cout << "\n";
  }
}

int cmd_verify(const std::string& path, const std::string& corpus_dir, bool deep) {
  std::vector<std::string> paths;
  if (!corpus_dir.empty()) {
    for (const auto& e : std::filesystem::directory_iterator(corpus_dir))
      if (e.path().extension() == ".json") paths.push_back(e.path().string());
    std::sort(paths.begin(), paths.end());
  } else {
    paths.push_back(path);
  }
  bool all = true;
  for (const auto& p : paths) {
    InstanceFile inst = load_instance(p);
    auto rep = verify_instance(inst, deep);
    print_report(inst.name, rep);
    if (!rep.all_pass()) all = false;
  }
  std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
  return all ? kExitOk : kExitVerifyFail;
}

int cmd_gen_corpus(const std::string& dir);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact equivariant Ehrhart computations"};
  app.require_subcommand(1);

  std::string instance_path, corpus_dir, mode = "orbit-pull", out_file;
  long dilates = 6;
  unsigned long N = 1;
  bool as_json = false, deep = false;

  auto* ehr = app.add_subcommand("ehrhart", "equivariant lattice point counts");
  ehr->add_option("instance", instance_path)->required();
  ehr->add_option("--dilates", dilates);
  ehr->add_flag("--json", as_json);

  auto* hst = app.add_subcommand("hstar", "equivariant h*-series");
  hst->add_option("instance", instance_path)->required();
  hst->add_option("--N", N);
  hst->add_flag("--json", as_json);

  auto* tri = app.add_subcommand("triangulate", "invariant regular triangulations");
  tri->add_option("instance", instance_path)->required();
  unsigned long triN = 0;
  tri->add_option("--N", triN);
  tri->add_option("--mode", mode)->check(CLI::IsMember({"orbit-pull", "translative", "glue"}));
  tri->add_option("--out", out_file);
  tri->add_flag("--json", as_json);

  auto* ver = app.add_subcommand("verify", "identity ledger");
  ver->add_option("instance", instance_path);
  ver->add_option("--corpus", corpus_dir);
  ver->add_flag("--deep", deep, "include the Stanley-Reisner cross-check");

  auto* gen = app.add_subcommand("gen-corpus", "write the bundled instances");
  std::string gen_dir;
  gen->add_option("dir", gen_dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*ehr) return cmd_ehrhart(instance_path, dilates, as_json);
    if (*hst) return cmd_hstar(instance_path, N, as_json);
    if (*tri) return cmd_triangulate(instance_path, triN, mode, out_file, as_json);
    if (*ver) {
      if (instance_path.empty() && corpus_dir.empty())
        throw InputError("verify needs an instance or --corpus");
      return cmd_verify(instance_path, corpus_dir, deep);
    }
    if (*gen) return cmd_gen_corpus(gen_dir);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const NotInvariant& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const CheckFailed& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerifyFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitInputError;
}

namespace {

int cmd_gen_corpus(const std::string& dir) {
  std::filesystem::create_directories(dir);
  auto emit = [&](const std::string& name, const Instance& inst) {
    Json j = instance_to_json(name, inst.P, inst.G);
    std::ofstream out(dir + "/" + name + ".json");
    out << j.dump(2) << "\n";
    std::cout << "wrote " << name << ".json\n";
  };
  emit("swap-square", square_swap());
  emit("klein-four-cube", klein_four_cube());
  emit("p5-reflexive", p5_reflexive());
  emit("z3-prism", z3_prism());
  emit("circuit-d4-a111", circuit_d4({1, 1, 1}));
  emit("circuit-d4-a112", circuit_d4({1, 1, 2}));
  emit("sym3-prism", sym_prism(3));
  emit("sym4-prism", sym_prism(4));
  emit("permutahedron-d1", permutahedron(1));
  emit("permutahedron-d2", permutahedron(2));
  emit("permutahedron-d3", permutahedron(3));
  emit("cross-polytope-2", cross_polytope_2());
  emit("bipyramid-reflection", bipyramid_reflection());
  emit("segment-reflection", segment_reflection());
  return kExitOk;
}

}  // namespace
