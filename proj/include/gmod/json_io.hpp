#pragma once

#include <string>
#include <vector>

#include "gmod/char_table.hpp"
#include "gmod/group.hpp"
#include "gmod/intertwiner.hpp"
#include "gmod/linalg.hpp"
#include "gmod/recovery.hpp"
#include "gmod/rep_engine.hpp"

namespace gmod {

/// { "degree": n, "generators": [[images…], …] }
Group read_group_file(const std::string& path, int order_cap = kOrderCap);

/// { "vectors": [[[re,im]…]…] }; extra keys are ignored. The vectors are
/// re-orthonormalized at tol. expected_ambient < 0 skips the length check.
Subspace read_subspace_file(const std::string& path, int expected_ambient, double tol);

std::string subspace_to_json(const Subspace& s, const std::vector<int>& block_dims,
                             const std::vector<int>& subgroup);
std::string chartable_to_json(const Group& g, const CharacterTable& t);
std::string irreps_to_json(const ModuleM& m);
std::string subgroups_to_json(const Group& g, const std::vector<Subgroup>& subs);
std::string homs_to_json(const IntertwinerBasis& basis, bool include_tensors);
std::string certificate_to_json(const RecoveryCertificate& cert);
std::string report_to_json(const VerificationReport& rep);

/// Write to the path, or to stdout when the path is empty.
void write_output(const std::string& path, const std::string& content);

}  // namespace gmod
