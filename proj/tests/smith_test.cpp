#include <gtest/gtest.h>

#include <random>

#include "latcurve/latcurve.hpp"
#include "oracles.hpp"

using namespace latcurve;

namespace {

SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& a) {
  SparseMatrix m(a.size(), a.empty() ? 0 : a[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) m.add(i, j, a[i][j]);
  return m;
}

}  // namespace

TEST(Smith, Identity) {
  SmithResult s = smith(from_dense({{1, 0}, {0, 1}}));
  EXPECT_EQ(s.rank, 2u);
  EXPECT_TRUE(s.torsion.empty());
}

TEST(Smith, TorsionFactor) {
  SmithResult s = smith(from_dense({{2, 0}, {0, 3}}));
  EXPECT_EQ(s.rank, 2u);
  EXPECT_EQ(s.torsion, (std::vector<std::int64_t>{6}));
}

TEST(Smith, RankDeficient) {
  SmithResult s = smith(from_dense({{2, 4, 6}, {1, 2, 3}}));
  EXPECT_EQ(s.rank, 1u);
  EXPECT_TRUE(s.torsion.empty());
}

TEST(Smith, EmptyMatrix) {
  EXPECT_EQ(smith(SparseMatrix(0, 0)).rank, 0u);
  EXPECT_EQ(smith(SparseMatrix(3, 0)).rank, 0u);
}

TEST(Smith, AddCancelsEntries) {
  SparseMatrix m(2, 2);
  m.add(0, 0, 5);
  m.add(0, 0, -5);
  m.add(1, 1, 1);
  EXPECT_EQ(m.dense(), (std::vector<std::vector<std::int64_t>>{{0, 0}, {0, 1}}));
}

TEST(Smith, AgreesWithDeterminantalDivisors) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> size(1, 4), entry(-3, 3);
  for (int trial = 0; trial < 400; ++trial) {
    const int R = size(rng), C = size(rng);
    std::vector<std::vector<std::int64_t>> a(static_cast<std::size_t>(R), std::vector<std::int64_t>(static_cast<std::size_t>(C)));
    for (auto& row : a)
      for (auto& v : row) v = entry(rng);
    std::vector<std::int64_t> f = oracle::invariant_factors(a);
    SmithResult s = smith(from_dense(a));
    EXPECT_EQ(s.rank, f.size());
    std::vector<std::int64_t> torsion;
    for (std::int64_t v : f)
      if (std::abs(v) > 1) torsion.push_back(std::abs(v));
    EXPECT_EQ(s.torsion, torsion);
  }
}
