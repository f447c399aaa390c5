#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "gmod/char_table.hpp"
#include "gmod/error.hpp"
#include "gmod/group.hpp"
#include "gmod/intertwiner.hpp"
#include "gmod/json_io.hpp"
#include "gmod/recovery.hpp"
#include "gmod/rep_engine.hpp"
#include "gmod/rng.hpp"

namespace {

constexpr const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0   success\n"
    "  2   io\n"
    "  3   not_a_permutation\n"
    "  4   order_cap_exceeded\n"
    "  5   dimension_mismatch\n"
    "  6   not_hermitian\n"
    "  7   split_failure\n"
    "  8   bad_isotypic_dim\n"
    "  9   split_degenerate\n"
    "  10  irreducibility_check_failed\n"
    "  11  dimension_mismatch_with_character_count\n"
    "  12  not_an_integer\n"
    "  13  not_block_decomposable\n"
    "  14  missing_trivial\n"
    "  15  not_closed\n"
    "  16  not_an_idempotent_span\n"
    "  17  right_ideal_check_failed\n"
    "  18  subgroup_axiom_failed\n"
    "  19  coset_check_failed\n"
    "  20  fixed_space_mismatch\n"
    "  21  verification_failed\n"
    "Usage errors exit nonzero with a message on stderr.\n"
    "\n"
    "Module coordinates depend on --seed; pair `fixed` with `recover` under\n"
    "the same seed.";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-group representation theory and fixed-subspace recovery"};
  app.require_subcommand(1);
  app.footer(kExitCodeHelp);

  std::string group_path;
  std::string subspace_path;
  std::string output_path;
  double tol = gmod::kDefaultTol;
  std::uint64_t seed = 0;
  int trials = 25;
  int subgroup_index = -1;
  bool tensors = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--group", group_path, "group JSON file: {\"degree\", \"generators\"}")
        ->required();
    sub->add_option("--tol", tol, "rank and membership tolerance")->capture_default_str();
    sub->add_option("--seed", seed, "seed for the randomized constructions")
        ->capture_default_str();
    sub->add_option("--output", output_path, "write JSON to this file instead of stdout");
  };

  CLI::App* c_chartable = app.add_subcommand("chartable", "irreducible character table");
  add_common(c_chartable);
  CLI::App* c_irreps = app.add_subcommand("irreps", "explicit unitary irreducible matrices");
  add_common(c_irreps);
  CLI::App* c_subgroups = app.add_subcommand("subgroups", "all subgroups, canonically ordered");
  add_common(c_subgroups);
  CLI::App* c_homs = app.add_subcommand("homs", "basis of the maps M⊗M → M commuting with G");
  add_common(c_homs);
  c_homs->add_flag("--tensors", tensors, "emit coefficient tensors even above dimension 6");
  CLI::App* c_fixed = app.add_subcommand("fixed", "fixed subspace M^H of one subgroup");
  add_common(c_fixed);
  c_fixed->add_option("--subgroup", subgroup_index, "index into the canonical subgroup list")
      ->required();
  CLI::App* c_recover = app.add_subcommand("recover", "recover the subgroup fixing a subspace");
  add_common(c_recover);
  c_recover->add_option("--subspace", subspace_path, "subspace JSON file: {\"vectors\"}")
      ->required();
  CLI::App* c_verify = app.add_subcommand("verify",
                                          "exhaustive subgroup ↔ fixed-subspace round-trip");
  add_common(c_verify);
  c_verify->add_option("--trials", trials, "number of randomized closure trials")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    gmod::Group g = gmod::read_group_file(group_path);

    if (c_subgroups->parsed()) {
      auto subs = gmod::enumerate_subgroups(g);
      gmod::write_output(output_path, gmod::subgroups_to_json(g, subs));
      return 0;
    }

    gmod::ConjClasses cc = gmod::conjugacy_classes(g);
    gmod::CharacterTable table = gmod::character_table(g, cc, tol);

    if (c_chartable->parsed()) {
      gmod::write_output(output_path, gmod::chartable_to_json(g, table));
      return 0;
    }

    if (c_verify->parsed()) {
      gmod::VerificationReport rep = gmod::verify_galois(g, seed, tol, trials);
      gmod::write_output(output_path, gmod::report_to_json(rep));
      std::cerr << "verified " << rep.subgroup_count << " subgroups and "
                << rep.random_trials.size() << " trials in " << rep.elapsed_seconds << " s\n";
      return rep.all_ok ? 0 : gmod::cli_exit_code(gmod::Errc::verification_failed);
    }

    gmod::Rng root(seed);
    gmod::ModuleM m = gmod::build_M(g, table, root.derive(1));

    if (c_irreps->parsed()) {
      gmod::write_output(output_path, gmod::irreps_to_json(m));
      return 0;
    }
    if (c_homs->parsed()) {
      gmod::IntertwinerBasis basis = gmod::hom_basis(m, table, tol);
      bool include = tensors || m.total_dim <= 6;
      gmod::write_output(output_path, gmod::homs_to_json(basis, include));
      return 0;
    }
    if (c_fixed->parsed()) {
      auto subs = gmod::enumerate_subgroups(g);
      if (subgroup_index < 0 || subgroup_index >= static_cast<int>(subs.size()))
        throw CLI::ValidationError("--subgroup",
                                   "index out of range, the group has " +
                                       std::to_string(subs.size()) + " subgroups");
      const gmod::Subgroup& h = subs[subgroup_index];
      gmod::Subspace fs = gmod::fixed_subspace(m, h, tol);
      auto dims = gmod::fixed_block_dims(m, h, tol);
      gmod::write_output(output_path, gmod::subspace_to_json(fs, dims, h.member_indices));
      return 0;
    }
    if (c_recover->parsed()) {
      gmod::Subspace r_in = gmod::read_subspace_file(subspace_path, m.total_dim, tol);
      gmod::IntertwinerBasis basis = gmod::hom_basis(m, table, tol);
      gmod::RSubspace r = gmod::decompose_R(r_in, m, tol);
      gmod::RecoveryCertificate cert = gmod::recover_subgroup(r, m, g, basis, tol);
      gmod::write_output(output_path, gmod::certificate_to_json(cert));
      return 0;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const gmod::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gmod::cli_exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
