// Acceptance gate: one PASS/FAIL line per criterion, exit code = #failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "gmod/char_table.hpp"
#include "gmod/error.hpp"
#include "gmod/group.hpp"
#include "gmod/intertwiner.hpp"
#include "gmod/json_io.hpp"
#include "gmod/recovery.hpp"
#include "gmod/rep_engine.hpp"
#include "gmod/rng.hpp"

using namespace gmod;

namespace {

constexpr std::uint64_t kSeed = 2026;

struct SuiteEntry {
  std::string name;
  Group g;
  CharacterTable t;
  ModuleM m;
};

double now_minus(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool check(bool ok, const std::string& detail, std::string& log) {
  if (!ok && log.empty()) log = detail;
  return ok;
}

}  // namespace

int main() {
  const std::string dir = GMOD_DATA_DIR;
  const std::vector<std::string> names = {"c2", "c6", "s3", "d4", "q8", "a4", "s4"};

  std::vector<SuiteEntry> suite;
  for (const auto& n : names) {
    SuiteEntry e{n, read_group_file(dir + "/" + n + ".json"), {}, {}};
    e.t = character_table(e.g, conjugacy_classes(e.g), kDefaultTol);
    e.m = build_M(e.g, e.t, Rng(kSeed).derive(1));
    suite.push_back(std::move(e));
  }

  int failures = 0;
  auto report = [&](int idx, bool ok, const std::string& what, const std::string& detail) {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
  };

  // 1. character table orthogonality and the degree sum
  {
    bool ok = true;
    std::string log;
    double worst_time = 0.0;
    for (const auto& e : suite) {
      auto t0 = std::chrono::steady_clock::now();
      CharacterTable t = character_table(e.g, conjugacy_classes(e.g), kDefaultTol);
      worst_time = std::max(worst_time, now_minus(t0));
      int n = e.g.order();
      double bound = 1e-8 * n;
      int k = static_cast<int>(t.num_classes());
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
          cd row{0.0, 0.0};
          for (int l = 0; l < k; ++l)
            row += static_cast<double>(t.classes.classes[l].size()) * t.rows[a][l] *
                   std::conj(t.rows[b][l]);
          row /= static_cast<double>(n);
          cd col{0.0, 0.0};
          for (int r = 0; r < k; ++r) col += t.rows[r][a] * std::conj(t.rows[r][b]);
          cd col_want = (a == b) ? cd(static_cast<double>(n) /
                                      static_cast<double>(t.classes.classes[a].size()))
                                 : cd(0.0);
          ok &= check(std::abs(row - ((a == b) ? cd(1.0) : cd(0.0))) < bound,
                      e.name + ": row orthogonality", log);
          ok &= check(std::abs(col - col_want) < bound, e.name + ": column orthogonality", log);
        }
      long deg_sum = 0;
      for (int d : t.degrees) deg_sum += static_cast<long>(d) * d;
      ok &= check(deg_sum == n, e.name + ": degree squares sum to " + std::to_string(deg_sum),
                  log);
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "slowest table %.3fs", worst_time);
    report(1, ok, "character tables orthogonal within 1e-8*|G|, degree squares sum to |G|",
           ok ? std::string(detail) : log);
  }

  // 2. irrep certification: unitary, homomorphic on all pairs, irreducible
  {
    bool ok = true;
    std::string log;
    for (const auto& e : suite) {
      int n = e.g.order();
      for (const auto& rep : e.m.irreps) {
        std::size_t d = static_cast<std::size_t>(rep.dim);
        CMatrix eye = CMatrix::identity(d);
        double s = 0.0;
        for (int gi = 0; gi < n; ++gi) {
          ok &= check(max_abs(rep.matrices[gi] * rep.matrices[gi].adjoint() - eye) < 1e-8,
                      e.name + ": unitarity", log);
          cd tr{0.0, 0.0};
          for (std::size_t i = 0; i < d; ++i) tr += rep.matrices[gi].at(i, i);
          s += std::norm(tr);
          for (int hi = 0; hi < n; ++hi)
            ok &= check(max_abs(rep.matrices[gi] * rep.matrices[hi] -
                                rep.matrices[e.g.mult[gi][hi]]) < 1e-8,
                        e.name + ": homomorphism", log);
        }
        ok &= check(std::abs(s / n - 1.0) < 1e-8, e.name + ": irreducibility sum", log);
      }
    }
    report(2, ok, "irreps unitary, homomorphic on all |G|^2 pairs, irreducible at 1e-8", log);
  }

  // 3. intertwiner count equals the character-theoretic count
  {
    bool ok = true;
    std::string log;
    for (const auto& e : suite) {
      IntertwinerBasis basis = hom_basis(e.m, e.t, kDefaultTol);
      int k = static_cast<int>(e.t.num_classes());
      int want = 0;
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          for (int c = 0; c < k; ++c) want += cg_multiplicity(e.t, a, b, c);
      ok &= check(static_cast<int>(basis.count()) == want,
                  e.name + ": " + std::to_string(basis.count()) + " maps vs " +
                      std::to_string(want),
                  log);
      if (e.name == "s3")
        ok &= check(basis.count() == 11,
                    "s3 count is " + std::to_string(basis.count()) + ", want 11", log);
    }
    report(3, ok, "hom basis sizes match character counts (s3: 11)", log);
  }

  // 4 + 5 + 8 share the verification sweeps
  std::vector<VerificationReport> sweeps;
  std::vector<std::string> sweep_json, sweep_json_again;
  double sweep_seconds = 0.0;
  for (const auto& e : suite) {
    VerificationReport r1 = verify_galois(e.g, kSeed, kDefaultTol, 25);
    VerificationReport r2 = verify_galois(e.g, kSeed, kDefaultTol, 25);
    sweep_seconds += r1.elapsed_seconds + r2.elapsed_seconds;
    sweep_json.push_back(report_to_json(r1));
    sweep_json_again.push_back(report_to_json(r2));
    sweeps.push_back(std::move(r1));
  }

  // 4. exhaustive subgroup round-trip with certificates and injectivity
  {
    bool ok = true;
    std::string log;
    int total_subgroups = 0;
    for (std::size_t i = 0; i < suite.size(); ++i) {
      const auto& rep = sweeps[i];
      total_subgroups += rep.subgroup_count;
      ok &= check(rep.injectivity_ok, suite[i].name + ": fixed spaces not pairwise distinct",
                  log);
      for (const auto& res : rep.results) {
        ok &= check(res.closure_ok, suite[i].name + ": closure fails on a fixed space", log);
        ok &= check(res.match && res.recovered == res.subgroup,
                    suite[i].name + ": recovery mismatch (" + res.note + ")", log);
      }
      if (suite[i].name == "s4")
        ok &= check(rep.subgroup_count == 30,
                    "s4 has " + std::to_string(rep.subgroup_count) + " subgroups, want 30", log);
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "%d subgroups across the suite, %.1fs for both sweeps",
                  total_subgroups, sweep_seconds);
    report(4, ok, "every subgroup recovered exactly from its fixed subspace",
           ok ? std::string(detail) : log);
  }

  // 5. randomized closure trials always produce a certificate
  {
    bool ok = true;
    std::string log;
    for (std::size_t i = 0; i < suite.size(); ++i) {
      ok &= check(sweeps[i].random_trials.size() == 25, suite[i].name + ": trial count", log);
      for (const auto& tr : sweeps[i].random_trials)
        ok &= check(tr.ok, suite[i].name + " trial " + std::to_string(tr.trial) + ": " + tr.note,
                    log);
    }
    report(5, ok, "25 seeded random closure trials per group all certify", log);
  }

  // 6. fixed dimensions against the character sum oracle
  {
    bool ok = true;
    std::string log;
    for (const auto& e : suite)
      for (const auto& h : enumerate_subgroups(e.g)) {
        auto dims = fixed_block_dims(e.m, h, kDefaultTol);
        for (std::size_t b = 0; b < e.m.num_blocks(); ++b)
          ok &= check(dims[b] == fixed_dim_by_character(e.t, h, static_cast<int>(b)),
                      e.name + ": block " + std::to_string(b) + " of a subgroup of order " +
                          std::to_string(h.order()),
                      log);
      }
    report(6, ok, "fixed-space dimensions equal the character averages", log);
  }

  // 7. a generic line in the two-dimensional block is rejected with a witness
  {
    bool ok = true;
    std::string log;
    const SuiteEntry* s3 = nullptr;
    for (const auto& e : suite)
      if (e.name == "s3") s3 = &e;
    if (s3 == nullptr) {
      ok = false;
      log = "suite is missing s3";
    } else {
      IntertwinerBasis basis = hom_basis(s3->m, s3->t, kDefaultTol);
      Rng r(kSeed);
      CVector line(4);
      line[2] = r.gaussian_c();
      line[3] = r.gaussian_c();
      CVector triv(4);
      triv[0] = 1.0;
      RSubspace bad = decompose_R(span({triv, line}, 4, kDefaultTol), s3->m, kDefaultTol);
      auto viol = check_closure(bad, basis, kDefaultTol);
      ok &= check(viol.has_value(), "no closure violation reported", log);
      if (viol)
        ok &= check(viol->residual > kDefaultTol,
                    "violation residual " + std::to_string(viol->residual), log);
      bool threw = false;
      try {
        recover_subgroup(bad, s3->m, s3->g, basis, kDefaultTol);
      } catch (const Error& err) {
        threw = (err.code() == Errc::not_closed);
      }
      ok &= check(threw, "recovery did not signal the closure failure", log);
    }
    report(7, ok, "trivial block plus a generic line fails closure with a concrete witness", log);
  }

  // 8. byte-identical verification reports for a fixed seed
  {
    bool ok = true;
    std::string log;
    for (std::size_t i = 0; i < suite.size(); ++i)
      ok &= check(sweep_json[i] == sweep_json_again[i], suite[i].name + ": reports differ", log);
    report(8, ok, "repeated verification sweeps serialize byte-identically", log);
  }

  if (failures == 0) std::printf("all acceptance criteria hold\n");
  return failures;
}
