#include <gtest/gtest.h>

#include "latcurve/latcurve.hpp"
#include "reference_tables.hpp"

using namespace latcurve;

namespace {

void expect_table(const Curve& C, const reference::Table& t, bool check_marks) {
  for (const auto& [l, v] : t.w) EXPECT_EQ(C.w(l), v) << C.name() << " at " << to_string(l);
  if (!check_marks) return;
  for (const auto& [l, v] : t.w) EXPECT_EQ(C.in_semigroup(l), t.marked.count(l) == 1) << C.name() << " at " << to_string(l);
}

}  // namespace

TEST(Tables, AEven) {
  for (int n : {2, 4, 6}) expect_table(catalog::load("A", {n}), reference::a_even(n), true);
}

TEST(Tables, AOddWindows) {
  expect_table(catalog::load("A", {1}), reference::a1_window(), true);
  expect_table(catalog::load("A", {3}), reference::a3_window(), true);
  for (int k = 1; k <= 3; ++k) expect_table(catalog::load("A", {2 * k - 1}), reference::a_odd(k), false);
}

TEST(Tables, DOdd) {
  for (int n : {5, 7}) expect_table(catalog::load("D", {n}), reference::d_odd(n), true);
}

TEST(Tables, DEven) {
  expect_table(catalog::load("D", {4}), reference::d4(), false);
  for (int n : {6, 8}) {
    Curve C = catalog::load("D", {n});
    expect_table(C, reference::d_even(n / 2), false);
    expect_table(C, reference::d_even_corner(), true);
  }
}

TEST(Tables, E) {
  expect_table(catalog::load("E6"), reference::e6(), true);
  expect_table(catalog::load("E7"), reference::e7(), true);
  expect_table(catalog::load("E8"), reference::e8(), true);
}

TEST(Tables, T44SixteenBlocks) {
  reference::Table t = reference::t44();
  EXPECT_EQ(t.w.size(), 256u);
  expect_table(catalog::load("T", {4, 4}), t, false);
}

TEST(Tables, T36FiveBlocks) {
  reference::Table t = reference::t36();
  EXPECT_EQ(t.w.size(), 125u);
  expect_table(catalog::load("T", {3, 6}), t, false);
}

TEST(Tables, T3OddPattern) {
  for (int b : {2, 3}) expect_table(catalog::load("T", {3, 2 * b + 3}), reference::t3_odd(b), true);
}

TEST(Tables, TOddOddCorner) {
  for (auto [p, q] : {std::pair{5, 5}, {5, 7}, {7, 7}, {7, 9}})
    expect_table(catalog::load("T", {p, q}), reference::t_odd_corner((p - 3) / 2, (q - 3) / 2), false);
}
