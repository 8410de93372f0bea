#include <algorithm>
#include <map>

#include "eqehr/class_function.hpp"
#include "eqehr/errors.hpp"

namespace eqehr {

namespace {

bool is_abelian(const FiniteGroup& G) {
  for (std::size_t k = 0; k < G.num_classes(); ++k)
    if (G.classes[k].size() != 1) return false;
  return true;
}

}  // namespace

CharacterTable char_table_abelian(const FiniteGroup& G) {
  if (!is_abelian(G)) throw TableUnavailable("group is not abelian");
  std::size_t n = G.order();
  // Build the dual group one generator at a time: maintain the subgroup H
  // (element indices) and all homomorphisms H -> C^* as value maps.
  std::vector<uint32_t> H = {0};
  std::vector<std::map<uint32_t, Cyclo>> chars = {{{0u, Cyclo(1L)}}};
  std::vector<bool> in_H(n, false);
  in_H[0] = true;
  while (H.size() < n) {
    uint32_t g = 0;
    while (in_H[g]) ++g;
    // k = order of g modulo H
    unsigned long k = 1;
    uint32_t p = g;
    while (!in_H[p]) {
      p = G.mult[p][g];
      ++k;
    }
    // p = g^k in H; extend each character chi by a k-th root of chi(g^k)
    std::vector<std::map<uint32_t, Cyclo>> next;
    for (const auto& chi : chars) {
      Cyclo base = chi.at(p);
      // base is a root of unity zeta_e^a; a k-th root is zeta_{ek}^a
      // recover (e, a) by scanning powers of zeta_e
      unsigned long e = 1;
      long a = 0;
      {
        unsigned long cond = base.conductor() == 1 ? 1 : base.conductor();
        bool found = false;
        for (unsigned long ee = cond; ee <= 2 * cond && !found; ++ee) {
          for (unsigned long aa = 0; aa < ee; ++aa)
            if (base == Cyclo::root_of_unity(ee, static_cast<long>(aa))) {
              e = ee;
              a = static_cast<long>(aa);
              found = true;
              break;
            }
        }
        if (!found) throw Error("character value is not a root of unity");
      }
      Cyclo root = Cyclo::root_of_unity(e * k, a);
      for (unsigned long j = 0; j < k; ++j) {
        Cyclo val = root * Cyclo::root_of_unity(k, static_cast<long>(j));
        std::map<uint32_t, Cyclo> ext;
        uint32_t gj = 0;  // g^i h
        Cyclo vpow(1L);
        uint32_t gpow = 0;
        for (unsigned long i = 0; i < k; ++i) {
          for (const auto& [h, vh] : chi) ext[G.mult[gpow][h]] = vpow * vh;
          gpow = G.mult[gpow][g];
          vpow = vpow * val;
        }
        (void)gj;
        next.push_back(std::move(ext));
      }
    }
    std::vector<uint32_t> newH;
    uint32_t gpow = 0;
    for (unsigned long i = 0; i < k; ++i) {
      for (uint32_t h : H) newH.push_back(G.mult[gpow][h]);
      gpow = G.mult[gpow][g];
    }
    H = std::move(newH);
    for (uint32_t h : H) in_H[h] = true;
    chars = std::move(next);
  }
  CharacterTable table;
  table.group = &G;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    std::vector<Cyclo> vals(G.num_classes());
    for (std::size_t c = 0; c < G.num_classes(); ++c) vals[c] = chars[i].at(G.class_rep(c));
    table.irreducibles.emplace_back(G, std::move(vals));
  }
  // stable naming: trivial first, then by value list
  std::vector<std::size_t> idx(table.irreducibles.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  auto is_triv = [&](std::size_t i) {
    return table.irreducibles[i] == ClassFunction::trivial(G);
  };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (is_triv(a) != is_triv(b)) return is_triv(a);
    return a < b;
  });
  std::vector<ClassFunction> sorted;
  for (std::size_t i : idx) sorted.push_back(table.irreducibles[i]);
  table.irreducibles = std::move(sorted);
  table.names.push_back("triv");
  for (std::size_t i = 1; i < table.irreducibles.size(); ++i) {
    // a real character of order 2 is conventionally "sign"
    bool pm1 = true;
    for (const auto& v : table.irreducibles[i].values)
      if (!(v == Cyclo(1L)) && !(v == Cyclo(-1L))) pm1 = false;
    if (pm1 && table.irreducibles.size() == 2)
      table.names.push_back("sign");
    else
      table.names.push_back("chi_" + std::to_string(i));
  }
  verify_table(table);
  table.verified = true;
  return table;
}

namespace {

// Hardcoded integral character tables for S_n, n <= 5, with classes keyed by
// (element order, class size); both invariants together are separating for
// these groups.
struct AbstractTable {
  // classes: (order, size); rows: character values per class
  std::vector<std::pair<unsigned long, unsigned long>> classes;
  std::vector<std::vector<long>> rows;
  std::vector<std::string> names;
};

AbstractTable s_n_table(unsigned n) {
  switch (n) {
    case 1:
      return {{{1, 1}}, {{1}}, {"triv"}};
    case 2:
      return {{{1, 1}, {2, 1}}, {{1, 1}, {1, -1}}, {"triv", "sign"}};
    case 3:
      // classes: e, (12), (123)
      return {{{1, 1}, {2, 3}, {3, 2}},
              {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}},
              {"triv", "sign", "std"}};
    case 4:
      // classes: e, (12), (12)(34), (123), (1234)
      return {{{1, 1}, {2, 6}, {2, 3}, {3, 8}, {4, 6}},
              {{1, 1, 1, 1, 1},
               {1, -1, 1, 1, -1},
               {2, 0, 2, -1, 0},
               {3, 1, -1, 0, -1},
               {3, -1, -1, 0, 1}},
              {"triv", "sign", "theta", "std", "std_x_sign"}};
    case 5:
      // classes: e, (12), (12)(34), (123), (123)(45), (1234), (12345)
      return {{{1, 1}, {2, 10}, {2, 15}, {3, 20}, {6, 20}, {4, 30}, {5, 24}},
              {{1, 1, 1, 1, 1, 1, 1},
               {1, -1, 1, 1, -1, -1, 1},
               {4, 2, 0, 1, -1, 0, -1},
               {4, -2, 0, 1, 1, 0, -1},
               {5, 1, 1, -1, 1, -1, 0},
               {5, -1, 1, -1, -1, 1, 0},
               {6, 0, -2, 0, 0, 0, 1}},
              {"triv", "sign", "std", "std_x_sign", "w5", "w5_x_sign", "w6"}};
    default:
      throw TableUnavailable("S_n table only built in for n <= 5");
  }
}

}  // namespace

CharacterTable char_table_symmetric(const FiniteGroup& G, unsigned n) {
  AbstractTable abs_table = s_n_table(n);
  std::size_t nc = G.num_classes();
  if (nc != abs_table.classes.size()) throw TableUnavailable("class count mismatch with S_n");
  // match classes by (order, size)
  std::vector<long> match(nc, -1);  // abstract class index -> concrete class index
  for (std::size_t a = 0; a < nc; ++a) {
    for (std::size_t c = 0; c < nc; ++c) {
      if (G.element_order[G.class_rep(c)] == abs_table.classes[a].first &&
          G.classes[c].size() == abs_table.classes[a].second) {
        if (match[a] != -1) throw TableUnavailable("ambiguous class match with S_n");
        match[a] = static_cast<long>(c);
      }
    }
    if (match[a] == -1) throw TableUnavailable("class invariants do not match S_n");
  }
  CharacterTable table;
  table.group = &G;
  table.names = abs_table.names;
  for (const auto& row : abs_table.rows) {
    std::vector<Cyclo> vals(nc);
    for (std::size_t a = 0; a < nc; ++a) vals[static_cast<std::size_t>(match[a])] = Cyclo(row[a]);
    table.irreducibles.emplace_back(G, std::move(vals));
  }
  verify_table(table);
  table.verified = true;
  return table;
}

CharacterTable char_table_dihedral(const FiniteGroup& G, unsigned n) {
  if (n > 6) throw TableUnavailable("D_n table only built in for n <= 6");
  if (G.order() != 2 * n) throw TableUnavailable("order mismatch with D_n");
  if (n <= 2 || n == 3) {
    // D_1 = Z/2, D_2 = Klein four (abelian); D_3 = S_3
    if (n <= 2) return char_table_abelian(G);
    return char_table_symmetric(G, 3);
  }
  // find a rotation r of order n
  long rot = -1;
  for (uint32_t i = 0; i < G.order(); ++i)
    if (G.element_order[i] == n) rot = i;
  if (rot < 0) throw TableUnavailable("no order-n element; not D_n");
  uint32_t r = static_cast<uint32_t>(rot);
  // reflections: elements of order 2 outside <r>
  std::vector<bool> in_rot(G.order(), false);
  uint32_t p = 0;
  for (unsigned i = 0; i < n; ++i) {
    in_rot[p] = true;
    p = G.mult[p][r];
  }
  // powers of r: r^k has table value zeta^(jk) + zeta^(-jk) for the 2-dim irreps
  std::vector<uint32_t> rpow(n);
  p = 0;
  for (unsigned i = 0; i < n; ++i) {
    rpow[i] = p;
    p = G.mult[p][r];
  }
  std::size_t nc = G.num_classes();
  CharacterTable table;
  table.group = &G;
  auto value_row = [&](auto&& value_at_element) {
    std::vector<Cyclo> vals(nc);
    for (std::size_t c = 0; c < nc; ++c) vals[c] = value_at_element(G.class_rep(c));
    return ClassFunction(G, std::move(vals));
  };
  auto rot_exponent = [&](uint32_t e) -> long {
    for (unsigned i = 0; i < n; ++i)
      if (rpow[i] == e) return static_cast<long>(i);
    return -1;
  };
  // trivial and rotation-sign
  table.irreducibles.push_back(ClassFunction::trivial(G));
  table.names.push_back("triv");
  table.irreducibles.push_back(
      value_row([&](uint32_t e) { return Cyclo(in_rot[e] ? 1L : -1L); }));
  table.names.push_back("refl_sign");
  if (n % 2 == 0) {
    // two more linear characters distinguishing the two reflection classes
    // chi(r) = -1; chi(s) = +-1 on the two reflection families
    // families: reflections conjugate to s vs to rs; split by conjugacy class
    std::vector<std::size_t> refl_classes;
    for (std::size_t c = 0; c < nc; ++c) {
      uint32_t e = G.class_rep(c);
      if (!in_rot[e] && G.element_order[e] == 2) refl_classes.push_back(c);
    }
    if (refl_classes.size() != 2) throw TableUnavailable("reflection class split unexpected");
    for (int variant = 0; variant < 2; ++variant) {
      std::vector<Cyclo> vals(nc);
      for (std::size_t c = 0; c < nc; ++c) {
        uint32_t e = G.class_rep(c);
        if (in_rot[e]) {
          long k = rot_exponent(e);
          vals[c] = Cyclo((k % 2 == 0) ? 1L : -1L);
        } else {
          bool first_family = (c == refl_classes[0]);
          vals[c] = Cyclo((first_family == (variant == 0)) ? 1L : -1L);
        }
      }
      table.irreducibles.emplace_back(G, std::move(vals));
      table.names.push_back(variant == 0 ? "lin_a" : "lin_b");
    }
  }
  // 2-dimensional irreps V_j, 1 <= j < n/2 (strictly)
  for (unsigned j = 1; 2 * j < n; ++j) {
    std::vector<Cyclo> vals(nc);
    for (std::size_t c = 0; c < nc; ++c) {
      uint32_t e = G.class_rep(c);
      if (in_rot[e]) {
        long k = rot_exponent(e);
        vals[c] = Cyclo::root_of_unity(n, static_cast<long>(j) * k) +
                  Cyclo::root_of_unity(n, -static_cast<long>(j) * k);
      } else {
        vals[c] = Cyclo();
      }
    }
    table.irreducibles.emplace_back(G, std::move(vals));
    table.names.push_back("V" + std::to_string(j));
  }
  verify_table(table);
  table.verified = true;
  return table;
}

CharacterTable char_table_auto(const FiniteGroup& G) {
  if (is_abelian(G)) return char_table_abelian(G);
  static const std::map<std::size_t, unsigned> sym_orders = {{6, 3}, {24, 4}, {120, 5}};
  auto it = sym_orders.find(G.order());
  if (it != sym_orders.end()) {
    try {
      return char_table_symmetric(G, it->second);
    } catch (const TableUnavailable&) {
    }
  }
  for (unsigned n = 3; n <= 6; ++n) {
    if (G.order() != 2 * n) continue;
    try {
      return char_table_dihedral(G, n);
    } catch (const TableUnavailable&) {
    }
  }
  throw TableUnavailable(
      "no automatic character table for this group; supply one in the instance file");
}

}  // namespace eqehr
