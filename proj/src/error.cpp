#include "gmod/error.hpp"

namespace gmod {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::io: return "io";
    case Errc::not_a_permutation: return "not_a_permutation";
    case Errc::order_cap_exceeded: return "order_cap_exceeded";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::not_hermitian: return "not_hermitian";
    case Errc::split_failure: return "split_failure";
    case Errc::bad_isotypic_dim: return "bad_isotypic_dim";
    case Errc::split_degenerate: return "split_degenerate";
    case Errc::irreducibility_check_failed: return "irreducibility_check_failed";
    case Errc::dimension_mismatch_with_character_count: return "dimension_mismatch_with_character_count";
    case Errc::not_an_integer: return "not_an_integer";
    case Errc::not_block_decomposable: return "not_block_decomposable";
    case Errc::missing_trivial: return "missing_trivial";
    case Errc::not_closed: return "not_closed";
    case Errc::not_an_idempotent_span: return "not_an_idempotent_span";
    case Errc::right_ideal_check_failed: return "right_ideal_check_failed";
    case Errc::subgroup_axiom_failed: return "subgroup_axiom_failed";
    case Errc::coset_check_failed: return "coset_check_failed";
    case Errc::fixed_space_mismatch: return "fixed_space_mismatch";
    case Errc::verification_failed: return "verification_failed";
  }
  return "unknown";
}

void fail(Errc code, const std::string& what) {
  throw Error(code, std::string(errc_name(code)) + ": " + what);
}

}  // namespace gmod
