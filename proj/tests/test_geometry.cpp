#include <doctest.h>

#include <cmath>
#include <random>

#include "linkage/complex.hpp"
#include "linkage/errors.hpp"
#include "linkage/geometry.hpp"

using namespace linkage;

namespace {

constexpr int kSamples = 1000;

int sgn(double x) { return (x > 0) - (x < 0); }

double circ(double a, double b) {
  double d = wrap_angle(a - b);
  return std::min(d, kTwoPi - d);
}

std::vector<double> random_angles(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(0, kTwoPi);
  std::vector<double> t(n);
  for (auto& x : t) x = u(rng);
  t[0] = 0;
  return t;
}

}  // namespace

TEST_CASE("solver outputs close up and land in the requested cell") {
  std::mt19937_64 rng(1);
  const char* vectors[] = {"1,1,1,1,1", "1,1,1,1,1,1", "1,2,3,2,1,4", "2,3,2,4", "1,2,1,2,1,2", "3,4,5,6,7"};
  std::vector<std::pair<LengthVector, Cell>> pool;
  for (auto s : vectors) {
    auto l = LengthVector::parse(s);
    FacePoset P = enumerate_cells(l, Space::Reduced);
    for (auto& c : P.cells)
      if (!c.collinear) pool.emplace_back(l, c);
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  double worst = 0;
  for (int i = 0; i < kSamples; ++i) {
    auto& [l, c] = pool[pick(rng)];
    AngleConfig a = solve_cell_representative(l, c, 1 + i);
    worst = std::max(worst, closure_norm(l, a));
    REQUIRE(derive_cell(l, a) == c);
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("collinear and inadmissible cells") {
  auto l = LengthVector::parse("1,1,1,1");
  AngleConfig a = solve_cell_representative(l, Cell::parse("lin:1,2", 4));
  CHECK(closure_norm(l, a) < 1e-12);
  CHECK(derive_cell(l, a) == Cell::parse("lin:1,2", 4));
  try {
    solve_cell_representative(l, Cell::parse("1,2|3|4", 4));
    FAIL("expected Infeasible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Infeasible);
  }
}

TEST_CASE("tangent and angle coordinates round trip") {
  std::mt19937_64 rng(2);
  double worst = 0;
  for (int i = 0; i < kSamples; ++i) {
    auto th = random_angles(rng, 6);
    AngleConfig a{th};
    AngleConfig b = angles_from_tangent(tangent_halfangle(a));
    for (int k = 0; k < 6; ++k) worst = std::max(worst, circ(a.thetas[k], b.thetas[k]));
  }
  CHECK(worst <= 1e-12);
  CHECK(tangent_halfangle(kPi).inf);
  CHECK(angle_from_tangent(ExtReal::infinity()) == kPi);
}

TEST_CASE("closure through the rational parametrization agrees with the trigonometric one") {
  std::mt19937_64 rng(3);
  auto l = LengthVector::parse("1,2,3,2,1,4");
  for (int i = 0; i < kSamples; ++i) {
    AngleConfig a{random_angles(rng, 6)};
    auto r1 = closure_residual(l, a);
    auto r2 = closure_residual_tangent(l, tangent_halfangle(a));
    CHECK(std::abs(r1[0] - r2[0]) < 1e-9);
    CHECK(std::abs(r1[1] - r2[1]) < 1e-9);
  }
}

TEST_CASE("the half-angle map preserves cyclic order") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0, kTwoPi);
  for (int i = 0; i < kSamples; ++i) {
    double a = u(rng), b = u(rng), c = u(rng);
    CHECK(cyclic_orientation(a, b, c) ==
          cyclic_orientation(tangent_halfangle(a), tangent_halfangle(b), tangent_halfangle(c)));
  }
}

TEST_CASE("Moebius normalization pins three points and preserves cyclic order") {
  MoebiusMap P(ExtReal::finite(0), ExtReal::finite(1), ExtReal::finite(3));
  CHECK(P(ExtReal::finite(2)).value == doctest::Approx(0.75));
  CHECK(P(ExtReal::finite(0)).inf);
  CHECK(P(ExtReal::finite(1)).value == doctest::Approx(0.0));
  CHECK(P(ExtReal::finite(3)).value == doctest::Approx(1.0));
  CHECK_THROWS_AS(MoebiusMap(ExtReal::finite(1), ExtReal::finite(1), ExtReal::finite(2)), Error);

  std::mt19937_64 rng(5);
  int preserved = 0, total = 0;
  for (int i = 0; i < kSamples; ++i) {
    // points of a cell in increasing angular order
    std::uniform_real_distribution<double> u(0.05, kTwoPi - 0.05);
    std::vector<double> th(6);
    for (auto& x : th) x = u(rng);
    std::sort(th.begin(), th.end());
    TangentCoords t;
    for (double x : th) t.t.push_back(tangent_halfangle(x));
    MoebiusMap M(t.t[0], t.t[1], t.t[5]);
    bool ok = true;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b)
        for (int c = b + 1; c < 6; ++c)
          ok = ok && cyclic_orientation(M(t.t[a]), M(t.t[b]), M(t.t[c])) == cyclic_orientation(t.t[a], t.t[b], t.t[c]);
    preserved += ok;
    ++total;
    // affine coordinates invert back to the original points
    AffineCoords s = moebius_normalize(t);
    auto back = moebius_inverse(t.t[0], t.t[1], t.t[5], s);
    for (std::size_t k = 0; k < back.size(); ++k)
      CHECK(std::abs(back[k].value - t.t[k + 2].value) <= 1e-7 * (1 + std::abs(t.t[k + 2].value)));
  }
  CHECK(preserved == total);
}

TEST_CASE("angle and tangent membrane residuals share sign and roots") {
  std::mt19937_64 rng(6);
  int compared = 0;
  for (int i = 0; i < kSamples; ++i) {
    int n = 5 + i % 3;
    AngleConfig a{random_angles(rng, n)};
    int j = 3 + static_cast<int>(rng() % (n - 3));  // sites (j, j+1) with j+1 <= n
    TangentCoords t = tangent_halfangle(a);
    double ra = membrane_residual_angles(a, 1, j);
    double rt = membrane_residual_tangent(t, 2, j, j + 1);
    if (std::abs(ra) < 1e-9 || std::abs(rt) < 1e-9) continue;
    CHECK(sgn(rt) == membrane_tangent_sign(t, j) * sgn(ra));
    ++compared;
  }
  CHECK(compared > kSamples * 9 / 10);

  // points on the membrane: equal gaps at (1,2) and (j, j+1)
  for (int i = 0; i < kSamples; ++i) {
    int n = 6;
    auto th = random_angles(rng, n);
    int j = 3 + static_cast<int>(rng() % 3);
    th[j] = wrap_angle(th[j - 1] + th[1]);  // theta_{j+1} - theta_j = theta_2 - theta_1
    AngleConfig a{th};
    TangentCoords t = tangent_halfangle(a);
    CHECK(std::abs(membrane_residual_angles(a, 1, j)) < 1e-12);
    double scale = 1 + std::abs(t.t[1].value * t.t[j - 1].value * t.t[j].value) + std::abs(t.t[1].value) +
                   std::abs(t.t[j - 1].value) + std::abs(t.t[j].value);
    CHECK(std::abs(membrane_residual_tangent(t, 2, j, j + 1)) <= 1e-8 * scale);
  }
}

TEST_CASE("affine membrane form is the tangent form after normalization") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < kSamples; ++i) {
    const int n = 6;
    AngleConfig a{random_angles(rng, n)};
    TangentCoords t = tangent_halfangle(a);
    AffineCoords s = moebius_normalize(t);
    double t2 = t.t[1].value, tn = t.t[n - 1].value;
    int j = 3, k = 4;
    double tj = t.t[j - 1].value, tk = t.t[k - 1].value;
    // a_x = t2 tn / t_x, so R_a = (t2 tn)^2 / (t2 tj tk) * R_t
    double ra = membrane_residual_affine(t2, tn, 0.0, s.s[j - 3], s.s[k - 3]);
    double rt = membrane_residual_tangent(t, 2, j, k);
    double want = (t2 * tn) * (t2 * tn) / (t2 * tj * tk) * rt;
    CHECK(std::abs(ra - want) <= 1e-6 * (1 + std::abs(want)));
  }
}

TEST_CASE("sign vectors of the equilateral pentagon") {
  std::vector<double> convex(5), star(5);
  for (int i = 0; i < 5; ++i) convex[i] = 2 * kPi * i / 5, star[i] = wrap_angle(4 * kPi * i / 5);
  auto sv = sign_vector(vertex_angles(convex));
  CHECK(sv.str() == "-----");
  auto sp = sign_vector(vertex_angles(star));
  CHECK(sp.str() == "-----'");
  CHECK(sp.primed);
  auto mirrored = sign_vector(mirror(vertex_angles(star)));
  CHECK(mirrored.str() == "+++++'");
  VertexAngleVector flat{{kPi, 1, 1, 1, 1}};
  try {
    sign_vector(flat);
    FAIL("expected Aligned");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Aligned);
  }
}

TEST_CASE("winding numbers and vertex positions") {
  std::vector<double> convex(5), star(5);
  for (int i = 0; i < 5; ++i) convex[i] = 2 * kPi * i / 5, star[i] = wrap_angle(4 * kPi * i / 5);
  CHECK(winding_number(AngleConfig{convex}) == 1);
  CHECK(winding_number(AngleConfig{star}) == 2);
  auto v = vertex_positions(LengthVector::parse("1,1,1,1,1"), AngleConfig{convex});
  CHECK(v.size() == 5);
  CHECK(v[1][0] == doctest::Approx(1.0));
}

TEST_CASE("open chain membership uses the half circle rule") {
  CHECK(open_chain_fully_reduced_membership({1.0}));
  CHECK_FALSE(open_chain_fully_reduced_membership({4.0}));
  CHECK(open_chain_fully_reduced_membership({0.0, 1.0}));
  CHECK(open_chain_fully_reduced_membership({kPi, 4.0}));
  CHECK(open_chain_fully_reduced_membership({0.0, kPi}));
}
