#include <gtest/gtest.h>

#include "latcurve/latcurve.hpp"
#include "oracles.hpp"

using namespace latcurve;

namespace {

Curve load(const std::string& n, std::vector<int> p = {}) { return catalog::load(n, p); }

}  // namespace

TEST(Cube, BoundarySquaresToZero) {
  Cube c{{0, 0, 0}, 0b111};
  std::map<Cube, int> dd;
  for (const auto& [face, s] : c.boundary())
    for (const auto& [ff, t] : face.boundary()) dd[ff] += s * t;
  for (const auto& [f, v] : dd) EXPECT_EQ(v, 0) << to_string(f.base);
}

TEST(Sublevel, EmptyBelowMinimum) {
  Curve C = load("E8");
  EXPECT_TRUE(sublevel_complex(C.weights(), min_weight(C.weights()) - 1).empty());
  EXPECT_FALSE(sublevel_complex(C.weights(), min_weight(C.weights())).empty());
}

TEST(Sublevel, ClosedAndNested) {
  Curve C = load("T", {3, 6});
  SublevelComplex a = sublevel_complex(C.weights(), -1), b = sublevel_complex(C.weights(), 0);
  EXPECT_TRUE(a.closed_under_faces());
  EXPECT_TRUE(a.subcomplex_of(b));
}

TEST(Sublevel, D5ZeroLevel) {
  Curve C = load("D", {5});
  auto H = homology(sublevel_complex(C.weights(), 0));
  auto want = oracle::betti_mod_p(C.weights(), Rectangle(C.conductor()), 0);
  EXPECT_EQ(H[0].rank, want[0]);
  EXPECT_EQ(H[0].rank, 3);
  EXPECT_EQ(H[1].rank, 0);
}

TEST(Sublevel, TopLevelContractible) {
  for (const char* g : {"E7", "Z12", "W10"}) {
    Curve C = load(g);
    auto H = homology(sublevel_complex(C.weights(), max_weight(C.weights())));
    EXPECT_EQ(H[0].rank, 1) << g;
    for (std::size_t k = 1; k < H.size(); ++k) EXPECT_TRUE(H[k].zero()) << g;
  }
}

TEST(Relative, PairWithItselfIsZero) {
  Curve C = load("T", {4, 4});
  SublevelComplex X = sublevel_complex(C.weights(), -1);
  for (const auto& g : relative_homology(X, X)) EXPECT_TRUE(g.zero());
}

TEST(Relative, PointInSegment) {
  SublevelComplex X(1, 0, {{Cube{{0}, 0}, Cube{{1}, 0}}, {Cube{{0}, 1}}});
  SublevelComplex A(1, 0, {{Cube{{0}, 0}, Cube{{1}, 0}}, {}});
  auto H = relative_homology(X, A);
  EXPECT_EQ(H[0].rank, 0);
  EXPECT_EQ(H[1].rank, 1);
  EXPECT_THROW(relative_homology(A, X), InconsistentInput);
}

TEST(LatticeHomology, A2) {
  HomologyReport rep = lattice_homology(load("A", {2}).weights());
  EXPECT_EQ(rep.rank(0, 0), 2);
  EXPECT_EQ(rep.u_rank(0, 0), 1);
  EXPECT_EQ(rep.rank(0, 1), 1);
}

TEST(LatticeHomology, TOddOddFirstHomology) {
  EXPECT_EQ(lattice_homology(load("T", {5, 7}).weights()).total_rank(1), 0);
  EXPECT_EQ(lattice_homology(load("T", {7, 7}).weights()).total_rank(1), 2);
  EXPECT_EQ(lattice_homology(load("T", {7, 9}).weights()).total_rank(1), 4);
}

TEST(LatticeHomology, MinimumWeight) {
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(min_weight(load("A", {n}).weights()), 0) << n;
  EXPECT_EQ(min_weight(load("E8").weights()), -1);
  EXPECT_EQ(min_weight(load("T", {3, 6}).weights()), -2);
}

TEST(LatticeHomology, EulerCharacteristic) {
  auto eu = [](const Curve& C) { return euler_characteristic(lattice_homology(C.weights()), C.delta()); };
  EXPECT_EQ(eu(load("A", {0})), 0);
  EXPECT_EQ(eu(load("A", {2})), 1);
  EXPECT_EQ(eu(load("D", {4})), 3);
  Curve D4 = load("D", {4});
  EXPECT_THROW(euler_characteristic(lattice_homology(D4.weights()), 2), EulerMismatch);
}

TEST(LatticeHomology, AgreesWithFieldOracleOnEveryGerm) {
  for (const auto& [name, params] : catalog::shipped()) {
    SCOPED_TRACE(catalog::reference_name(name, params));
    Curve C = catalog::load(name, params);
    HomologyReport rep = lattice_homology(C.weights());
    EXPECT_FALSE(rep.has_torsion());
    for (std::int64_t n = rep.min_level; n <= rep.max_level; ++n) {
      auto b = oracle::betti_mod_p(C.weights(), Rectangle(C.conductor()), n);
      for (int k = 0; k <= C.r(); ++k) EXPECT_EQ(rep.rank(k, n), b[static_cast<std::size_t>(k)]) << "k=" << k << " n=" << n;
    }
  }
}
