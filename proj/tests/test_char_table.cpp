#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <vector>

#include "doctest.h"

#include "gmod/char_table.hpp"
#include "gmod/group.hpp"

using namespace gmod;

namespace {

Perm P(std::vector<int> v) { return Perm{std::move(v)}; }

Group make_s3() { return load_group({P({1, 0, 2}), P({1, 2, 0})}); }
Group make_c2() { return load_group({P({1, 0})}); }
Group make_s4() { return load_group({P({1, 0, 2, 3}), P({1, 2, 3, 0})}); }
Group make_q8() {
  return load_group({P({1, 2, 3, 0, 5, 6, 7, 4}), P({4, 7, 6, 5, 2, 1, 0, 3})});
}

CharacterTable table_of(const Group& g) {
  return character_table(g, conjugacy_classes(g), kDefaultTol);
}

// ⟨χa, χb⟩ = (1/|G|) Σ_classes |C| χa(C) conj(χb(C))
cd row_inner(const CharacterTable& t, int a, int b) {
  cd s = 0.0;
  for (std::size_t l = 0; l < t.num_classes(); ++l)
    s += static_cast<double>(t.classes.classes[l].size()) * t.rows[a][l] * std::conj(t.rows[b][l]);
  return s / static_cast<double>(t.group_order);
}

bool near(cd a, double b) { return std::abs(a - cd(b)) < 1e-9; }

}  // namespace

TEST_SUITE("char_table") {

TEST_CASE("two-element group") {
  CharacterTable t = table_of(make_c2());
  REQUIRE(t.rows.size() == 2);
  CHECK(near(t.rows[0][0], 1));
  CHECK(near(t.rows[0][1], 1));
  CHECK(near(t.rows[1][0], 1));
  CHECK(near(t.rows[1][1], -1));
}

TEST_CASE("symmetric group on three points") {
  CharacterTable t = table_of(make_s3());
  REQUIRE(t.rows.size() == 3);
  // classes by least member: {e}, transpositions, 3-cycles
  CHECK(t.classes.classes[0].size() == 1);
  CHECK(t.classes.classes[1].size() == 3);
  CHECK(t.classes.classes[2].size() == 2);

  CHECK(near(t.rows[0][0], 1));
  CHECK(near(t.rows[0][1], 1));
  CHECK(near(t.rows[0][2], 1));
  CHECK(near(t.rows[1][0], 1));
  CHECK(near(t.rows[1][1], -1));
  CHECK(near(t.rows[1][2], 1));
  CHECK(near(t.rows[2][0], 2));
  CHECK(near(t.rows[2][1], 0));
  CHECK(near(t.rows[2][2], -1));
}

TEST_CASE("degrees") {
  CharacterTable s4 = table_of(make_s4());
  std::multiset<int> degs(s4.degrees.begin(), s4.degrees.end());
  CHECK(degs == std::multiset<int>{1, 1, 2, 3, 3});

  CharacterTable q8 = table_of(make_q8());
  std::multiset<int> qdegs(q8.degrees.begin(), q8.degrees.end());
  CHECK(qdegs == std::multiset<int>{1, 1, 1, 1, 2});

  for (const auto* t : {&s4, &q8}) {
    long sum = 0;
    for (int d : t->degrees) sum += static_cast<long>(d) * d;
    CHECK(sum == t->group_order);
  }
}

TEST_CASE("row and column orthogonality") {
  for (const Group& g : {make_c2(), make_s3(), make_s4(), make_q8()}) {
    CharacterTable t = table_of(g);
    int k = static_cast<int>(t.num_classes());
    double bound = 1e-8 * static_cast<double>(t.group_order);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        cd want = (a == b) ? cd(1.0) : cd(0.0);
        CHECK(std::abs(row_inner(t, a, b) - want) < bound);
      }
    // columns: Σ_χ χ(C_l) conj(χ(C_m)) = δ_lm |G|/|C_l|
    for (int l = 0; l < k; ++l)
      for (int m = 0; m < k; ++m) {
        cd s = 0.0;
        for (int a = 0; a < k; ++a) s += t.rows[a][l] * std::conj(t.rows[a][m]);
        cd want = (l == m) ? cd(static_cast<double>(t.group_order) /
                               static_cast<double>(t.classes.classes[l].size()))
                           : cd(0.0);
        CHECK(std::abs(s - want) < bound);
      }
  }
}

TEST_CASE("character values are bounded by the degree") {
  for (const Group& g : {make_s3(), make_q8(), make_s4()}) {
    CharacterTable t = table_of(g);
    for (std::size_t r = 0; r < t.rows.size(); ++r)
      for (const auto& v : t.rows[r])
        CHECK(std::abs(v) <= static_cast<double>(t.degrees[r]) + 1e-8);
  }
}

TEST_CASE("canonical row order starts with the trivial character") {
  for (const Group& g : {make_c2(), make_s3(), make_s4()}) {
    CharacterTable t = table_of(g);
    CHECK(t.trivial_row == 0);
    for (const auto& v : t.rows[0]) CHECK(near(v, 1));
    for (std::size_t r = 1; r < t.rows.size(); ++r) CHECK(t.degrees[r - 1] <= t.degrees[r]);
  }
}

TEST_CASE("central idempotents") {
  Group g = make_s3();
  CharacterTable t = table_of(g);
  auto es = central_idempotents(g, t);
  REQUIRE(es.size() == 3);

  // trivial idempotent is the uniform averager
  for (const auto& c : es[t.trivial_row].coeffs) CHECK(std::abs(c - cd(1.0 / 6.0)) < 1e-9);

  // Σ e_χ = δ_e
  for (int x = 0; x < g.order(); ++x) {
    cd s = 0.0;
    for (const auto& e : es) s += e.coeffs[x];
    CHECK(std::abs(s - (x == 0 ? cd(1.0) : cd(0.0))) < 1e-8);
  }

  // convolution square of each idempotent reproduces it
  for (const auto& e : es) {
    CVector sq = convolve(g, e.coeffs, e.coeffs);
    for (int x = 0; x < g.order(); ++x) CHECK(std::abs(sq[x] - e.coeffs[x]) < 1e-8);
  }

  // distinct idempotents annihilate each other
  CVector cross = convolve(g, es[0].coeffs, es[2].coeffs);
  for (const auto& c : cross) CHECK(std::abs(c) < 1e-8);
}

TEST_CASE("value lookup by group element") {
  Group g = make_s3();
  CharacterTable t = table_of(g);
  // element 2 is the 3-cycle sending 0→1→2, class index 2
  CHECK(near(t.value_at(2, 2), -1));
  CHECK(near(t.value_at(1, 1), -1));
  CHECK(near(t.value_at(2, 0), 2));
}

}  // TEST_SUITE
