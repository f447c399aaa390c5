#include "gmod/json_io.hpp"

#include <fstream>
#include <iostream>

#include "json.hpp"

#include "gmod/error.hpp"

namespace gmod {

using nlohmann::json;

namespace {

json cpx(cd z) { return json::array({z.real(), z.imag()}); }

json vec_to_json(const CVector& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(cpx(z));
  return a;
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(cpx(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Errc::io, path + ": " + e.what());
  }
  return j;
}

}  // namespace

Group read_group_file(const std::string& path, int order_cap) {
  json j = parse_file(path);
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
    fail(Errc::io, path + ": expected keys \"degree\" and \"generators\"");
  if (!j["degree"].is_number_integer() || j["degree"].get<int>() < 1)
    fail(Errc::io, path + ": \"degree\" must be a positive integer");
  int degree = j["degree"].get<int>();
  if (!j["generators"].is_array()) fail(Errc::io, path + ": \"generators\" must be an array");
  std::vector<Perm> gens;
  for (const auto& ga : j["generators"]) {
    if (!ga.is_array()) fail(Errc::io, path + ": each generator must be an image array");
    Perm p;
    for (const auto& v : ga) {
      if (!v.is_number_integer()) fail(Errc::io, path + ": generator images must be integers");
      p.images.push_back(v.get<int>());
    }
    if (p.degree() != degree)
      fail(Errc::not_a_permutation, path + ": generator length differs from the degree");
    gens.push_back(std::move(p));
  }
  return load_group(gens, degree, order_cap);
}

Subspace read_subspace_file(const std::string& path, int expected_ambient, double tol) {
  json j = parse_file(path);
  if (!j.is_object() || !j.contains("vectors"))
    fail(Errc::io, path + ": expected key \"vectors\"");
  if (!j["vectors"].is_array()) fail(Errc::io, path + ": \"vectors\" must be an array");
  std::vector<CVector> vecs;
  std::size_t ambient = expected_ambient >= 0 ? static_cast<std::size_t>(expected_ambient) : 0;
  for (const auto& va : j["vectors"]) {
    if (!va.is_array()) fail(Errc::io, path + ": each vector must be an array of [re, im]");
    CVector v;
    for (const auto& za : va) {
      if (!za.is_array() || za.size() != 2 || !za[0].is_number() || !za[1].is_number())
        fail(Errc::io, path + ": entries must be [re, im] number pairs");
      v.emplace_back(za[0].get<double>(), za[1].get<double>());
    }
    if (ambient == 0) ambient = v.size();
    if (v.size() != ambient)
      fail(Errc::dimension_mismatch, path + ": vectors disagree on length");
    vecs.push_back(std::move(v));
  }
  if (ambient == 0) fail(Errc::io, path + ": no vectors and no ambient dimension");
  return span(vecs, ambient, tol);
}

std::string subspace_to_json(const Subspace& s, const std::vector<int>& block_dims,
                             const std::vector<int>& subgroup) {
  json j;
  j["dim"] = s.dim();
  j["ambient_dim"] = s.ambient_dim;
  if (!block_dims.empty()) j["block_dims"] = block_dims;
  if (!subgroup.empty()) j["subgroup"] = subgroup;
  json vecs = json::array();
  for (const auto& v : s.basis) vecs.push_back(vec_to_json(v));
  j["vectors"] = std::move(vecs);
  return j.dump(2) + "\n";
}

std::string chartable_to_json(const Group& g, const CharacterTable& t) {
  json j;
  j["group_order"] = t.group_order;
  json classes = json::array();
  for (std::size_t c = 0; c < t.num_classes(); ++c) {
    json cj;
    cj["size"] = t.classes.classes[c].size();
    cj["representative"] = g.elements[t.classes.representatives[c]].images;
    classes.push_back(std::move(cj));
  }
  j["classes"] = std::move(classes);
  json rows = json::array();
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    json rj;
    rj["degree"] = t.degrees[r];
    json vals = json::array();
    for (const auto& z : t.rows[r]) vals.push_back(cpx(z));
    rj["values"] = std::move(vals);
    rows.push_back(std::move(rj));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string irreps_to_json(const ModuleM& m) {
  json j;
  j["total_dim"] = m.total_dim;
  json irs = json::array();
  for (const auto& ir : m.irreps) {
    json ij;
    ij["chi_index"] = ir.chi_index;
    ij["degree"] = ir.dim;
    json mats = json::array();
    for (const auto& mat : ir.matrices) mats.push_back(matrix_to_json(mat));
    ij["matrices"] = std::move(mats);
    irs.push_back(std::move(ij));
  }
  j["irreps"] = std::move(irs);
  return j.dump(2) + "\n";
}

std::string subgroups_to_json(const Group& g, const std::vector<Subgroup>& subs) {
  json j;
  j["group_order"] = g.order();
  j["count"] = subs.size();
  json arr = json::array();
  for (const auto& h : subs) arr.push_back(h.member_indices);
  j["subgroups"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string homs_to_json(const IntertwinerBasis& basis, bool include_tensors) {
  json j;
  j["count"] = basis.count();
  j["dim"] = basis.dim;
  if (include_tensors) {
    json tensors = json::array();
    int d = basis.dim;
    for (const auto& pi : basis.maps) {
      json ti = json::array();
      for (int i = 0; i < d; ++i) {
        json tj = json::array();
        for (int jj = 0; jj < d; ++jj) {
          json tk = json::array();
          for (int k = 0; k < d; ++k)
            tk.push_back(cpx(pi.tensor[(static_cast<std::size_t>(i) * d + jj) * d + k]));
          tj.push_back(std::move(tk));
        }
        ti.push_back(std::move(tj));
      }
      tensors.push_back(std::move(ti));
    }
    j["tensors"] = std::move(tensors);
  }
  return j.dump(2) + "\n";
}

std::string certificate_to_json(const RecoveryCertificate& cert) {
  json j;
  j["recovered"] = cert.subgroup.member_indices;
  j["partition"] = cert.partition;
  j["s_dim"] = cert.partition.size();
  j["fixed_match"] = cert.fixed_match;
  return j.dump(2) + "\n";
}

std::string report_to_json(const VerificationReport& rep) {
  json j;
  j["group_order"] = rep.group_order;
  j["subgroup_count"] = rep.subgroup_count;
  j["injectivity_ok"] = rep.injectivity_ok;
  json results = json::array();
  for (const auto& r : rep.results) {
    json rj;
    rj["subgroup"] = r.subgroup;
    rj["closure_ok"] = r.closure_ok;
    rj["recovered"] = r.recovered;
    rj["match"] = r.match;
    rj["dims"] = {{"blocks", r.block_dims}, {"space", r.space_dim}, {"s", r.s_dim}};
    if (!r.note.empty()) rj["note"] = r.note;
    results.push_back(std::move(rj));
  }
  j["results"] = std::move(results);
  json trials = json::array();
  for (const auto& t : rep.random_trials) {
    json tj;
    tj["trial"] = t.trial;
    tj["ok"] = t.ok;
    tj["recovered"] = t.recovered;
    tj["r_dim"] = t.r_dim;
    if (!t.note.empty()) tj["note"] = t.note;
    trials.push_back(std::move(tj));
  }
  j["random_trials"] = std::move(trials);
  return j.dump(2) + "\n";
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) fail(Errc::io, "cannot open " + path + " for writing");
  out << content;
  if (!out) fail(Errc::io, "write to " + path + " failed");
}

}  // namespace gmod
