#include <set>
#include <array>
#include <random>

#include "doctest.h"
#include "eqehr/class_function.hpp"
#include "eqehr/errors.hpp"

using namespace eqehr;

namespace {

AffineMap swap2() { return AffineMap(IntMatrix{{0, 1}, {1, 0}}, {Int(0), Int(0)}); }
AffineMap sigma_cube() {
  return AffineMap(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}, {Int(0), Int(0), Int(0)});
}
AffineMap tau_cube() {
  return AffineMap(IntMatrix{{0, -1, 0}, {-1, 0, 0}, {0, 0, -1}}, {Int(0), Int(0), Int(0)});
}
// S_3 permuting coordinates of Z^3
AffineMap perm3(std::array<int, 3> img) {
  IntMatrix m(3, 3);
  for (int j = 0; j < 3; ++j) m.at(img[j], j) = 1;
  return AffineMap(m, {Int(0), Int(0), Int(0)});
}

RatVector rv(std::vector<long> v) {
  RatVector r;
  for (long x : v) r.x.emplace_back(x);
  return r;
}

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
  SUBCASE("zeta_5 has conductor 5 and norm relation") {
    Cyclo z = Cyclo::root_of_unity(5, 1);
    Cyclo s = z;
    Cyclo p = z;
    for (int k = 2; k <= 4; ++k) {
      p = p * z;
      s += p;
    }
    CHECK(s == Cyclo(-1L));  // zeta + ... + zeta^4 = -1
  }
  SUBCASE("conjugation and inverse") {
    Cyclo z = Cyclo::root_of_unity(8, 3);
    CHECK(z * z.conj() == Cyclo(1L));
    CHECK(z * z.inverse() == Cyclo(1L));
    Cyclo a = Cyclo(Rat(2, 3)) + Cyclo::root_of_unity(12, 5);
    CHECK(a * a.inverse() == Cyclo(1L));
  }
  SUBCASE("minus one collapses to conductor 1") {
    Cyclo m = Cyclo::root_of_unity(2, 1);
    CHECK(m.is_rational());
    CHECK(m.to_rational() == -1);
  }
  SUBCASE("cross-conductor equality") {
    Cyclo a = Cyclo::root_of_unity(6, 1);
    Cyclo b = Cyclo(1L) + Cyclo::root_of_unity(3, 2);  // 1 + zeta_3^2 = -zeta_3^... check numerically
    // zeta_6 = 1 + zeta_3^2 since zeta_6 = -zeta_3^2 is false; instead test
    // zeta_6^2 = zeta_3
    CHECK(Cyclo::root_of_unity(6, 2) == Cyclo::root_of_unity(3, 1));
    CHECK(a * a == Cyclo::root_of_unity(3, 1));
    (void)b;
  }
}

TEST_CASE("cyclotomic arithmetic properties") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<unsigned long> cond(1, 12);
  auto random_cyclo = [&] {
    unsigned long n = cond(rng);
    std::vector<Rat> c(n);
    for (auto& q : c) q = Rat(coef(rng));
    return Cyclo::from_powers(n, c);
  };
  for (int trial = 0; trial < 40; ++trial) {
    Cyclo a = random_cyclo(), b = random_cyclo(), c = random_cyclo();
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Cyclo(1L));
      CHECK((a * b) == (a * b));
    }
  }
  CHECK_THROWS(Cyclo().inverse());
}

TEST_CASE("perm_character") {
  SUBCASE("trivial group on any set") {
    auto G = close_group({}, 2);
    auto chi = perm_character_on_points(G, {rv({0, 0}), rv({1, 0}), rv({2, 3})});
    CHECK(chi.values[0] == Cyclo(3L));
  }
  SUBCASE("swap on two points gives the regular character") {
    auto G = close_group({swap2()}, 2);
    auto chi = perm_character_on_points(G, {rv({1, 0}), rv({0, 1})});
    CHECK(chi == ClassFunction::regular(G));
  }
  SUBCASE("Klein four on the 8 cube vertices is 2 chi_reg") {
    auto G = close_group({sigma_cube(), tau_cube()}, 3);
    std::vector<RatVector> pts;
    for (long a : {-1, 1})
      for (long b : {-1, 1})
        for (long c : {-1, 1}) pts.push_back(rv({a, b, c}));
    auto chi = perm_character_on_points(G, pts);
    CHECK(chi == ClassFunction::regular(G).scale(Cyclo(2L)));
    CHECK(inner_product(chi, ClassFunction::trivial(G)) == Cyclo(2L));
  }
  SUBCASE("non-invariant sets are rejected") {
    auto G = close_group({swap2()}, 2);
    CHECK_THROWS_AS(perm_character_on_points(G, {rv({1, 0})}), NotInvariant);
  }
}

TEST_CASE("abelian character tables") {
  SUBCASE("Z/2") {
    auto G = close_group({swap2()}, 2);
    auto T = char_table_abelian(G);
    CHECK(T.size() == 2);
    CHECK(T.names[0] == "triv");
    CHECK(T.names[1] == "sign");
    auto mult = decompose(ClassFunction::regular(G), T);
    CHECK(mult == std::vector<Int>{1, 1});
  }
  SUBCASE("Klein four has 4 linear characters") {
    auto G = close_group({sigma_cube(), tau_cube()}, 3);
    auto T = char_table_abelian(G);
    CHECK(T.size() == 4);
    for (const auto& irr : T.irreducibles) CHECK(irr.values[0] == Cyclo(1L));
  }
  SUBCASE("Z/5 table carries 5th roots of unity") {
    IntMatrix rot{{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}};
    auto G = close_group({AffineMap(rot, std::vector<Int>(4, Int(0)))}, 4);
    CHECK(G.order() == 5);
    auto T = char_table_abelian(G);
    CHECK(T.size() == 5);
    auto reg = decompose(ClassFunction::regular(G), T);
    CHECK(reg == std::vector<Int>(5, Int(1)));
  }
}

TEST_CASE("symmetric group tables") {
  auto make_s3 = [] {
    return close_group({perm3({1, 0, 2}), perm3({1, 2, 0})}, 3);
  };
  SUBCASE("S_3 dims are 1,1,2") {
    auto G = make_s3();
    CHECK(G.order() == 6);
    auto T = char_table_auto(G);
    std::multiset<long> dims;
    for (const auto& irr : T.irreducibles) dims.insert(irr.values[0].to_rational().get_num().get_si());
    CHECK(dims == std::multiset<long>{1, 1, 2});
  }
  SUBCASE("decompose the natural permutation character of S_3") {
    auto G = make_s3();
    auto T = char_table_auto(G);
    auto chi = perm_character_on_points(G, {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})});
    auto mult = decompose(chi, T);
    // natural = trivial + standard
    Int total = 0;
    for (auto& m : mult) total += m;
    CHECK(total == 2);
    CHECK(mult[0] == 1);
    CHECK(is_effective(chi, T));
  }
  SUBCASE("zero function decomposes to zeros") {
    auto G = make_s3();
    auto T = char_table_auto(G);
    auto mult = decompose(ClassFunction::zero(G), T);
    CHECK(mult == std::vector<Int>(T.size(), Int(0)));
  }
  SUBCASE("non-virtual class functions are rejected") {
    auto G = make_s3();
    auto T = char_table_auto(G);
    ClassFunction bad = ClassFunction::trivial(G).scale(Cyclo(Rat(1, 2)));
    CHECK_THROWS_AS(decompose(bad, T), NotVirtualCharacter);
  }
  SUBCASE("effectiveness of virtual characters") {
    auto G = make_s3();
    auto T = char_table_auto(G);
    CHECK(is_effective(ClassFunction::trivial(G), T));
    ClassFunction neg = ClassFunction::regular(G) - ClassFunction::trivial(G).scale(Cyclo(2L));
    CHECK(!is_effective(neg, T));
  }
}

TEST_CASE("dihedral tables") {
  // D_4 as symmetries of the square [-1,1]^2
  AffineMap rot(IntMatrix{{0, -1}, {1, 0}}, {Int(0), Int(0)});
  AffineMap refl(IntMatrix{{0, 1}, {1, 0}}, {Int(0), Int(0)});
  auto G = close_group({rot, refl}, 2);
  CHECK(G.order() == 8);
  auto T = char_table_auto(G);
  CHECK(T.size() == 5);
  // D_6: symmetries of the hexagon
  AffineMap rot6(IntMatrix{{1, -1}, {1, 0}}, {Int(0), Int(0)});
  auto G6 = close_group({rot6, refl}, 2);
  CHECK(G6.order() == 12);
  auto T6 = char_table_auto(G6);
  CHECK(T6.size() == 6);
  // D_5 needs an ambient where order-5 rotations act integrally: Z^4
  IntMatrix r5{{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}};
  IntMatrix s5(4, 4);
  // reflection reversing the 5-cycle: e_i -> e_{5-i} with e_5 = -(e1+..+e4) = index trick
  // use the permutation i -> -i mod 5 on the quotient basis
  // images: e1->e4, e2->e3, e3->e2, e4->e1
  s5.at(3, 0) = 1;
  s5.at(2, 1) = 1;
  s5.at(1, 2) = 1;
  s5.at(0, 3) = 1;
  auto G5 = close_group({AffineMap(r5, std::vector<Int>(4, Int(0))),
                         AffineMap(s5, std::vector<Int>(4, Int(0)))},
                        4);
  CHECK(G5.order() == 10);
  auto T5 = char_table_dihedral(G5, 5);
  CHECK(T5.size() == 4);
}

TEST_CASE("induction") {
  auto G = close_group({sigma_cube(), tau_cube()}, 3);
  SUBCASE("from the trivial subgroup: regular character") {
    auto H = make_subgroup(G, {0});
    auto ind = induce(H, ClassFunction::trivial(H.group));
    CHECK(ind == ClassFunction::regular(G));
  }
  SUBCASE("identity when sub = group") {
    std::vector<uint32_t> all;
    for (uint32_t i = 0; i < G.order(); ++i) all.push_back(i);
    auto H = make_subgroup(G, all);
    auto chi = perm_character_on_points(G, orbit(G, rv({1, 1, 1})));
    ClassFunction chi_sub(H.group, chi.values);  // same classes since H = G
    // class orders may differ; map via restriction instead
    auto restricted = restrict_to(H, chi);
    auto ind = induce(H, restricted);
    CHECK(ind == chi);
  }
  SUBCASE("index-2 subgroup of trivial character induces the coset permutation character") {
    uint32_t s = G.index_of(sigma_cube());
    auto H = make_subgroup(G, {0, s});
    auto ind = induce(H, ClassFunction::trivial(H.group));
    // dimension |G:H| = 2; values: 2 on classes meeting H (as a central subgroup), 0 elsewhere
    CHECK(ind.values[0] == Cyclo(2L));
    CHECK(inner_product(ind, ClassFunction::trivial(G)) == Cyclo(1L));
  }
  SUBCASE("Frobenius reciprocity on random class functions") {
    auto T = char_table_abelian(G);
    uint32_t s = G.index_of(sigma_cube());
    auto H = make_subgroup(G, {0, s});
    auto TH = char_table_abelian(H.group);
    std::mt19937 rng(13);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
      ClassFunction chi = ClassFunction::zero(H.group);
      for (std::size_t i = 0; i < TH.size(); ++i)
        chi = chi + TH.irreducibles[i].scale(Cyclo(d(rng)));
      ClassFunction psi = ClassFunction::zero(G);
      for (std::size_t i = 0; i < T.size(); ++i)
        psi = psi + T.irreducibles[i].scale(Cyclo(d(rng)));
      CHECK(inner_product(induce(H, chi), psi) == inner_product(chi, restrict_to(H, psi)));
    }
  }
}

TEST_CASE("det series") {
  auto G = close_group({swap2()}, 2);
  auto det_t = det_series_tilde(G);
  auto det_l = det_series_linear(G);
  SUBCASE("identity class: (1-t)^3") {
    Poly want = Poly::from_int_coeffs({Int(1), Int(-3), Int(3), Int(-1)});
    CHECK(det_t[0] == want);
  }
  SUBCASE("swap class: (1-t)^2 (1+t)") {
    Poly want = Poly::from_int_coeffs({Int(1), Int(-1), Int(-1), Int(1)});
    CHECK(det_t[G.class_of[G.index_of(swap2())]] == want);
  }
  SUBCASE("det identity (1-t) det(I - M t) = det(I - Mtilde t) on every class") {
    Poly one_minus_t = Poly::from_int_coeffs({Int(1), Int(-1)});
    for (std::size_t k = 0; k < G.num_classes(); ++k) CHECK(one_minus_t * det_l[k] == det_t[k]);
  }
  SUBCASE("constant terms are 1") {
    for (const auto& p : det_t) CHECK(p.coeff(0) == Cyclo(1L));
  }
  SUBCASE("as class function: 1 - (2+chi) t + (1+2chi) t^2 - chi t^3") {
    uint32_t sw = G.class_of[G.index_of(swap2())];
    // chi = sign character: 1 at id, -1 at swap
    auto check_coeff = [&](std::size_t k, long at_id, long at_swap) {
      CHECK(det_t[0].coeff(k) == Cyclo(at_id));
      CHECK(det_t[sw].coeff(k) == Cyclo(at_swap));
    };
    check_coeff(0, 1, 1);
    check_coeff(1, -3, -1);   // -(2 + chi)
    check_coeff(2, 3, -1);    // 1 + 2 chi
    check_coeff(3, -1, 1);    // -chi
  }
}
