#pragma once

#include <stdexcept>
#include <string>

namespace gmod {

// Failure classes surfaced by the library. The CLI maps each one to a
// distinct process exit code (see cli_exit_code).
enum class Errc {
  io = 2,
  not_a_permutation = 3,
  order_cap_exceeded = 4,
  dimension_mismatch = 5,
  not_hermitian = 6,
  split_failure = 7,
  bad_isotypic_dim = 8,
  split_degenerate = 9,
  irreducibility_check_failed = 10,
  dimension_mismatch_with_character_count = 11,
  not_an_integer = 12,
  not_block_decomposable = 13,
  missing_trivial = 14,
  not_closed = 15,
  not_an_idempotent_span = 16,
  right_ideal_check_failed = 17,
  subgroup_axiom_failed = 18,
  coset_check_failed = 19,
  fixed_space_mismatch = 20,
  verification_failed = 21,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

const char* errc_name(Errc c);
inline int cli_exit_code(Errc c) { return static_cast<int>(c); }

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace gmod
