#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"

#include "gmod/char_table.hpp"
#include "gmod/error.hpp"
#include "gmod/group.hpp"
#include "gmod/intertwiner.hpp"
#include "gmod/recovery.hpp"
#include "gmod/rep_engine.hpp"
#include "gmod/rng.hpp"

using namespace gmod;

namespace {

Perm P(std::vector<int> v) { return Perm{std::move(v)}; }

struct Setup {
  Group g;
  CharacterTable t;
  ModuleM m;
  IntertwinerBasis basis;
  std::vector<Subgroup> subgroups;
};

Setup prepare(std::vector<Perm> gens) {
  Setup s{load_group(gens), {}, {}, {}, {}};
  s.t = character_table(s.g, conjugacy_classes(s.g), kDefaultTol);
  s.m = build_M(s.g, s.t, Rng(1));
  s.basis = hom_basis(s.m, s.t, kDefaultTol);
  s.subgroups = enumerate_subgroups(s.g);
  return s;
}

Setup make_s3() { return prepare({P({1, 0, 2}), P({1, 2, 0})}); }

CVector unit(int n, int x) {
  CVector v(n);
  v[x] = 1.0;
  return v;
}

std::vector<int> block_dims_of(const RSubspace& r) {
  std::vector<int> d;
  for (const auto& c : r.components) d.push_back(static_cast<int>(c.dim()));
  return d;
}

std::set<std::vector<int>> as_sorted_set(const std::vector<std::vector<int>>& blocks) {
  std::set<std::vector<int>> out;
  for (auto b : blocks) {
    std::sort(b.begin(), b.end());
    out.insert(b);
  }
  return out;
}

}  // namespace

TEST_SUITE("recovery") {

TEST_CASE("splitting a subspace into block components") {
  Setup s = make_s3();

  RSubspace full = decompose_R(full_subspace(4), s.m);
  CHECK(block_dims_of(full) == std::vector<int>{1, 1, 2});

  RSubspace triv = decompose_R(span({unit(4, 0)}, 4), s.m);
  CHECK(block_dims_of(triv) == std::vector<int>{1, 0, 0});

  const Subgroup* a3 = nullptr;
  for (const auto& h : s.subgroups)
    if (h.order() == 3) a3 = &h;
  REQUIRE(a3 != nullptr);
  RSubspace ra3 = decompose_R(fixed_subspace(s.m, *a3), s.m);
  CHECK(block_dims_of(ra3) == std::vector<int>{1, 1, 0});

  // no trivial part
  CHECK_THROWS_AS(decompose_R(span({unit(4, 2)}, 4), s.m), Error);
  try {
    decompose_R(span({unit(4, 2)}, 4), s.m);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::missing_trivial);
  }

  // straddles two blocks
  CVector mixed(4);
  mixed[1] = cd(1.0 / std::sqrt(2.0));
  mixed[2] = cd(1.0 / std::sqrt(2.0));
  try {
    decompose_R(span({unit(4, 0), mixed}, 4), s.m);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_block_decomposable);
  }
}

TEST_CASE("closure holds exactly for fixed subspaces") {
  Setup s = make_s3();
  for (const auto& h : s.subgroups) {
    RSubspace r = decompose_R(fixed_subspace(s.m, h), s.m);
    CHECK(!check_closure(r, s.basis).has_value());
  }
}

TEST_CASE("a generic line violates closure and is caught with a witness") {
  Setup s = make_s3();
  Rng r(20);
  CVector line(4);
  line[2] = r.gaussian_c();
  line[3] = r.gaussian_c();
  RSubspace bad = decompose_R(span({unit(4, 0), line}, 4), s.m);

  auto viol = check_closure(bad, s.basis);
  REQUIRE(viol.has_value());
  CHECK(viol->residual > kDefaultTol);
  CHECK(viol->map_index >= 0);
  CHECK(viol->map_index < static_cast<int>(s.basis.count()));
  CHECK(viol->u_index < static_cast<int>(bad.space.dim()));
  CHECK(viol->v_index < static_cast<int>(bad.space.dim()));

  try {
    recover_subgroup(bad, s.m, s.g, s.basis);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_closed);
    CHECK(std::string(e.what()).find("residual") != std::string::npos);
  }
}

TEST_CASE("hom closure of a seed subspace") {
  Setup s = make_s3();

  // nothing but the mandatory trivial block
  RSubspace base = closure(zero_subspace(4), s.m, s.basis);
  CHECK(base.space.dim() == 1);
  CHECK(block_dims_of(base) == std::vector<int>{1, 0, 0});

  // a full module stays put
  RSubspace full = closure(full_subspace(4), s.m, s.basis);
  CHECK(full.space.dim() == 4);

  // a fixed space is already closed
  const Subgroup* a3 = nullptr;
  for (const auto& h : s.subgroups)
    if (h.order() == 3) a3 = &h;
  Subspace fa3 = fixed_subspace(s.m, *a3);
  RSubspace ca3 = closure(fa3, s.m, s.basis);
  CHECK(equal(ca3.space, fa3));

  // a generic line in the plane block generates everything
  Rng r(21);
  CVector line(4);
  line[2] = r.gaussian_c();
  line[3] = r.gaussian_c();
  RSubspace grown = closure(span({line}, 4), s.m, s.basis);
  CHECK(grown.space.dim() == 4);
}

TEST_CASE("coordinatewise products") {
  CVector ones(3, cd(1.0));
  CVector b = {cd(2.0, 1.0), cd(0.0, -3.0), cd(5.0)};
  CVector p = hadamard(ones, b);
  for (int i = 0; i < 3; ++i) CHECK(p[i] == b[i]);

  CVector d0 = unit(3, 0), d1 = unit(3, 1);
  CVector z = hadamard(d0, d1);
  for (const auto& c : z) CHECK(c == cd(0.0));
  CVector sq = hadamard(d0, d0);
  CHECK(sq == d0);

  CHECK_THROWS_AS(hadamard(d0, CVector(2)), Error);
}

TEST_CASE("realizing R inside functions on the group") {
  Setup s = make_s3();

  RSubspace full = decompose_R(full_subspace(4), s.m);
  SSpace s_full = embed_S(full, s.m, s.g);
  CHECK(s_full.space.dim() == 6);

  RSubspace triv = decompose_R(span({unit(4, 0)}, 4), s.m);
  SSpace s_triv = embed_S(triv, s.m, s.g);
  REQUIRE(s_triv.space.dim() == 1);
  CVector ones(6, cd(1.0));
  CHECK(contains(s_triv.space, ones));

  const Subgroup* a3 = nullptr;
  for (const auto& h : s.subgroups)
    if (h.order() == 3) a3 = &h;
  RSubspace ra3 = decompose_R(fixed_subspace(s.m, *a3), s.m);
  SSpace s_a3 = embed_S(ra3, s.m, s.g);
  CHECK(s_a3.space.dim() == 2);

  // coordinate partitions
  auto p_triv = partition_from_S(s_triv);
  REQUIRE(p_triv.size() == 1);
  CHECK(p_triv[0].size() == 6);

  auto p_full = partition_from_S(s_full);
  CHECK(p_full.size() == 6);

  auto p_a3 = partition_from_S(s_a3);
  std::set<std::vector<int>> want = {{0, 2, 4}, {1, 3, 5}};
  CHECK(as_sorted_set(p_a3) == want);
}

TEST_CASE("every subgroup of the six-element group round-trips") {
  Setup s = make_s3();
  REQUIRE(s.subgroups.size() == 6);
  for (const auto& h : s.subgroups) {
    RSubspace r = decompose_R(fixed_subspace(s.m, h), s.m);
    RecoveryCertificate cert = recover_subgroup(r, s.m, s.g, s.basis);
    CHECK(cert.subgroup.member_indices == h.member_indices);
    CHECK(cert.fixed_match);
    CHECK(as_sorted_set(cert.partition) == as_sorted_set(left_cosets(s.g, h)));
    REQUIRE(cert.idempotents.size() == cert.partition.size());
    for (std::size_t b = 0; b < cert.partition.size(); ++b) {
      int support = 0;
      for (const auto& c : cert.idempotents[b]) {
        CHECK((c == cd(0.0) || c == cd(1.0)));
        if (c == cd(1.0)) ++support;
      }
      CHECK(support == static_cast<int>(cert.partition[b].size()));
    }
  }
}

TEST_CASE("every subgroup of the eight-element dihedral group round-trips") {
  Setup s = prepare({P({1, 2, 3, 0}), P({2, 1, 0, 3})});
  REQUIRE(s.subgroups.size() == 10);
  for (const auto& h : s.subgroups) {
    RSubspace r = decompose_R(fixed_subspace(s.m, h), s.m);
    RecoveryCertificate cert = recover_subgroup(r, s.m, s.g, s.basis);
    CHECK(cert.subgroup.member_indices == h.member_indices);
    CHECK(cert.fixed_match);
  }
}

TEST_CASE("full verification sweep") {
  Group g = load_group({P({1, 0, 2}), P({1, 2, 0})});
  VerificationReport rep = verify_galois(g, 42, kDefaultTol, 3);
  CHECK(rep.all_ok);
  CHECK(rep.group_order == 6);
  CHECK(rep.subgroup_count == 6);
  CHECK(rep.injectivity_ok);
  REQUIRE(rep.results.size() == 6);
  for (const auto& res : rep.results) {
    CHECK(res.closure_ok);
    CHECK(res.match);
    CHECK(res.recovered == res.subgroup);
    CHECK(res.note.empty());
    CHECK(res.s_dim * res.subgroup.size() == 6u);  // coset count × subgroup order
  }
  REQUIRE(rep.random_trials.size() == 3);
  for (const auto& tr : rep.random_trials) {
    CHECK(tr.ok);
    CHECK(!tr.recovered.empty());
  }

  // same seed, same report
  VerificationReport rep2 = verify_galois(g, 42, kDefaultTol, 3);
  CHECK(rep2.all_ok);
  for (std::size_t i = 0; i < rep.results.size(); ++i) {
    CHECK(rep2.results[i].recovered == rep.results[i].recovered);
    CHECK(rep2.results[i].block_dims == rep.results[i].block_dims);
  }
  for (std::size_t i = 0; i < rep.random_trials.size(); ++i)
    CHECK(rep2.random_trials[i].recovered == rep.random_trials[i].recovered);
}

}  // TEST_SUITE
