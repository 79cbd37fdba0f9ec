#include <doctest.h>

#include <random>
#include <set>

#include "linkage/errors.hpp"
#include "linkage/symmetry.hpp"

using namespace linkage;

namespace {

AngleConfig act(const DihedralElement& g, const AngleConfig& a) {
  return AngleConfig{thetas_from_vertex_angles(relabel_normalize(g, vertex_angles(a.thetas)))};
}

// Fraction of (top cell, element) pairs where the combinatorial image equals
// the cell of the relabeled sample.
double agreement(const LengthVector& l) {
  FacePoset P = enumerate_cells(l, Space::Reduced);
  AutGroup G = automorphism_group(l);
  ActionTable T = action_on_cells(G, P);
  long ok = 0, total = 0;
  for (int c = 0; c < P.size(); ++c) {
    if (P.cells[c].dim() != P.dim()) continue;
    AngleConfig a = solve_cell_representative(l, P.cells[c], 3);
    for (std::size_t e = 0; e < T.elements.size(); ++e) {
      Cell derived = derive_cell(l, act(T.elements[e], a));
      ok += derived == P.cells[T.image[e][c]];
      ++total;
    }
  }
  return static_cast<double>(ok) / static_cast<double>(total);
}

}  // namespace

TEST_CASE("combinatorial action agrees with relabeled configurations") {
  CHECK(agreement(LengthVector::parse("1,1,1,1,1")) == 1.0);
  CHECK(agreement(LengthVector::parse("1,1,1,1,1,1")) == 1.0);
  CHECK(agreement(LengthVector::parse("1,2,1,2,1,2")) == 1.0);
  CHECK(agreement(LengthVector::parse("1,2,3,2,1,4")) == 1.0);
}

TEST_CASE("action tables form a group action") {
  auto l = LengthVector::parse("1,1,1,1,1,1");
  FacePoset P = enumerate_cells(l, Space::Reduced);
  AutGroup G = automorphism_group(l);
  ActionTable T = action_on_cells(G, P);
  for (std::size_t a = 0; a < T.elements.size(); ++a)
    for (std::size_t b = 0; b < T.elements.size(); ++b) {
      int ab = T.find_element(T.elements[a].compose(T.elements[b]));
      REQUIRE(ab >= 0);
      for (int c = 0; c < P.size(); ++c) REQUIRE(T.image[ab][c] == T.image[a][T.image[b][c]]);
    }
  // the action preserves dimension and the face order
  for (std::size_t e = 0; e < T.elements.size(); ++e)
    for (int c = 0; c < P.size(); ++c) {
      CHECK(P.cells[T.image[e][c]].dim() == P.cells[c].dim());
      for (int f : P.covers[c]) CHECK(P.leq(T.image[e][f], T.image[e][c]));
    }
}

TEST_CASE("stabilizers and fine cells of the convex hexagon cell") {
  auto l = LengthVector::parse("1,1,1,1,1,1");
  FacePoset F = enumerate_cells(l, Space::FullyReduced);
  ActionTable T = action_on_cells(automorphism_group(l), F);
  int top = F.find(Cell::parse("1|2|3|4|5|6", 6));
  REQUIRE(top >= 0);
  CHECK(stabilizer(T, top).order() == 12);
  auto fine = fine_cells(F, T, top);
  CHECK(fine.size() == 12);
  // in the reduced space only the rotations fix the ordering
  FacePoset P = enumerate_cells(l, Space::Reduced);
  ActionTable TR = action_on_cells(automorphism_group(l), P);
  int rtop = P.find(Cell::parse("1|2|3|4|5|6", 6));
  CHECK(stabilizer(TR, rtop).order() == 6);
  CHECK(fine_cells(P, TR, rtop).size() == 6);
}

TEST_CASE("fine cell count divides the stabilizer order") {
  for (const char* s : {"1,1,1,1,1", "1,1,1,1,1,1", "1,2,1,2,1,2"}) {
    auto l = LengthVector::parse(s);
    for (Space sp : {Space::Reduced, Space::FullyReduced}) {
      FacePoset P = enumerate_cells(l, sp);
      ActionTable T = action_on_cells(automorphism_group(l), P);
      for (int c = 0; c < P.size(); ++c) {
        if (P.cells[c].collinear) continue;
        int stab = stabilizer(T, c).order();
        int fine = static_cast<int>(fine_cells(P, T, c).size());
        CHECK(stab % fine == 0);
        if (P.cells[c].dim() == P.dim()) CHECK(fine == stab);
      }
    }
  }
}

TEST_CASE("sampled points fall into fine cells, all of which are reached") {
  auto l = LengthVector::parse("1,1,1,1,1");
  FacePoset P = enumerate_cells(l, Space::Reduced);
  ActionTable T = action_on_cells(automorphism_group(l), P);
  int top = P.find(Cell::parse("1|2|3|4|5", 5));
  auto fine = fine_cells(P, T, top);
  REQUIRE(fine.size() == 5);
  std::set<Dart> seen;
  int degenerate = 0;
  for (int seed = 1; seed <= 300; ++seed) {
    AngleConfig a = solve_cell_representative(l, P.cells[top], seed);
    try {
      seen.insert(classify_fine_cell(P, T, top, a).dart);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DegenerateCell);
      ++degenerate;
    }
  }
  CHECK(seen.size() == fine.size());
  CHECK(degenerate < 30);
  // the regular pentagon sits on every membrane
  AngleConfig regular = solve_cell_representative(l, P.cells[top], 0);
  CHECK_THROWS_AS(classify_fine_cell(P, T, top, regular), Error);
}

TEST_CASE("membrane sites name the compared gaps") {
  FineCellLabel a{0, Dart{0, 1}, 1, 2}, b{0, Dart{2, 1}, 3, 4};
  auto [x, y] = membrane_sites(a, b);
  CHECK(x.from == 1);
  CHECK(x.to == 2);
  CHECK(y.from == 3);
  CHECK(y.to == 4);
}

TEST_CASE("group selectors") {
  auto l = LengthVector::parse("1,1,1,1,1");
  CHECK(select_group(l, "full", false).size() == 10);
  CHECK(select_group(l, "full", true).size() == 20);
  CHECK(select_group(l, "rotations", false).size() == 5);
  CHECK(select_group(l, "trivial", false).size() == 1);
  CHECK(select_group(l, "reflection:2", false).size() == 2);
  CHECK_THROWS_AS(select_group(l, "bogus", false), Error);
  auto m = LengthVector::parse("1,2,3,2,1,4");
  try {
    select_group(m, "reflection:0", false);
    FAIL("expected NotAnAutomorphism");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAnAutomorphism);
  }
}

TEST_CASE("subgroup lattice sizes") {
  // D4 of order 8 has 10 subgroups, D6 of order 12 has 16, D5 has 8
  CHECK(subgroups(automorphism_group(LengthVector::parse("1,1,1,1")).elements).size() == 10);
  CHECK(subgroups(automorphism_group(LengthVector::parse("1,1,1,1,1,1")).elements).size() == 16);
  CHECK(subgroups(automorphism_group(LengthVector::parse("1,1,1,1,1")).elements).size() == 8);
  for (auto& H : subgroups(automorphism_group(LengthVector::parse("1,1,1,1,1,1")).elements))
    for (auto& a : H)
      for (auto& b : H) CHECK(std::find(H.begin(), H.end(), a.compose(b)) != H.end());
}

TEST_CASE("quotients: trivial group keeps the complex, homology is stable under subdivision") {
  auto l = LengthVector::parse("1,1,1,1,1");
  FacePoset P = enumerate_cells(l, Space::Reduced);
  auto trivial = quotient_complex(P, select_group(l, "trivial", false), 2);
  CHECK(homology(trivial.complex).betti == std::vector<long>{1, 8, 1});
  auto G = select_group(l, "full", true);
  auto q2 = quotient_complex(P, G, 2);
  auto q3 = quotient_complex(P, G, 3);
  CHECK(homology(q2.complex, Coeffs::Mod2).betti == homology(q3.complex, Coeffs::Mod2).betti);
  CHECK(homology(q2.complex).betti == std::vector<long>{1, 0, 0});
  CHECK(q2.group_order == 20);
  CHECK_THROWS_AS(quotient_complex(enumerate_cells(l, Space::FullyReduced), G, 2), Error);
}

TEST_CASE("rotation fixed sets of the 20-gon") {
  std::vector<Rational> ones(20, Rational(1));
  LengthVector l(ones);
  auto R = rotation_fixed_report(l, 5, 0);
  CHECK(R.block == 4);
  CHECK(R.windings == std::vector<int>{1, 2});
  CHECK(R.components.size() == 4);
  CHECK(R.max_invariance_error <= 1e-9);
  CHECK(R.max_closure <= 1e-9);
  auto g = DihedralElement::rotation(20, 4);
  for (auto& c : R.components) CHECK(invariance_error(g, c.config) <= 1e-9);
  CHECK(star_polygon_types(6).size() == 3);
  CHECK(star_polygon_types(5).size() == 2);
}

TEST_CASE("reflection fixed sets by axis type") {
  auto odd = reflection_fixed_report(LengthVector::parse("1,1,1,1,1"), DihedralElement::reflection(5, 2), 4, 1);
  CHECK(odd.axis == AxisType::Median);
  CHECK(odd.map_type == "injective");
  auto diag = reflection_fixed_report(LengthVector::parse("1,1,1,1,1,1"), DihedralElement::reflection(6, 2), 4, 1);
  CHECK(diag.axis == AxisType::Diagonal);
  CHECK(diag.map_type == "injective-except-RP1");
  auto mid = reflection_fixed_report(LengthVector::parse("1,2,3,2,1,4"), DihedralElement::reflection(6, 1), 4, 1);
  CHECK(mid.axis == AxisType::Midsegment);
  CHECK(mid.map_type == "double-cover");
  for (auto* R : {&odd, &diag, &mid}) {
    CHECK(R->samples.size() == 4);
    for (auto& a : R->samples) CHECK(invariance_error(R->reflection, a) <= 1e-9);
  }
}

TEST_CASE("dihedral fixed sets: the fully stretched configuration is unique") {
  for (const char* s : {"1,1,1,1,1,1", "1,2,1,2,1,2", "1,1,1,1,1,1,1,1,1,1,1,1"}) {
    auto l = LengthVector::parse(s);
    int n = l.size();
    for (int shift : {0, 1}) {
      if (!preserves_lengths(l, DihedralElement::reflection(n, shift))) continue;
      auto R = dihedral_fixed_sampler(l, 3, shift, -1);
      CAPTURE(s);
      CAPTURE(shift);
      CHECK(R.configs.size() == 1);
      CHECK(R.L == doctest::Approx(R.L0));
      CHECK(R.max_invariance_error <= 1e-9);
      CHECK(R.max_closure <= 1e-9);
    }
  }
  auto l12 = LengthVector::parse("1,1,1,1,1,1,1,1,1,1,1,1");
  auto inner = dihedral_fixed_sampler(l12, 3, 0, 3.0);
  CHECK(inner.configs.size() >= 2);
  CHECK(inner.max_invariance_error <= 1e-9);
  try {
    dihedral_fixed_sampler(l12, 3, 0, 10.0);
    FAIL("expected InvalidL");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidL);
  }
  try {
    dihedral_fixed_sampler(LengthVector::parse("1,2,1,2,1,2"), 3, 1, 2.0);
    FAIL("expected NoAllowablePair");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoAllowablePair);
  }
}
