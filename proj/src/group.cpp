#include "gmod/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "gmod/error.hpp"

namespace gmod {

Perm Perm::identity(int n) {
  Perm p;
  p.images.resize(n);
  for (int i = 0; i < n; ++i) p.images[i] = i;
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images[i] != i) return false;
  return true;
}

bool operator==(const Perm& a, const Perm& b) { return a.images == b.images; }
bool operator<(const Perm& a, const Perm& b) { return a.images < b.images; }

Perm compose(const Perm& a, const Perm& b) {
  Perm c;
  c.images.resize(b.images.size());
  for (int p = 0; p < b.degree(); ++p) c.images[p] = a.images[b.images[p]];
  return c;
}

Perm inverse(const Perm& a) {
  Perm c;
  c.images.resize(a.images.size());
  for (int p = 0; p < a.degree(); ++p) c.images[a.images[p]] = p;
  return c;
}

void check_permutation(const Perm& p) {
  int n = p.degree();
  std::vector<char> seen(n, 0);
  for (int v : p.images) {
    if (v < 0 || v >= n || seen[v])
      fail(Errc::not_a_permutation, "images are not a bijection on {0,...," + std::to_string(n - 1) + "}");
    seen[v] = 1;
  }
}

Group load_group(const std::vector<Perm>& generators, int degree, int order_cap) {
  if (degree <= 0) {
    if (generators.empty())
      fail(Errc::not_a_permutation, "no generators and no degree given");
    degree = generators.front().degree();
  }
  if (degree < 1) fail(Errc::not_a_permutation, "degree must be at least 1");
  for (const auto& g : generators) {
    if (g.degree() != degree) fail(Errc::not_a_permutation, "generators disagree on degree");
    check_permutation(g);
  }

  Group g;
  g.degree = degree;
  g.generators = generators;

  std::vector<Perm> gens_sorted = generators;
  std::sort(gens_sorted.begin(), gens_sorted.end());
  gens_sorted.erase(std::unique(gens_sorted.begin(), gens_sorted.end()), gens_sorted.end());

  std::map<std::vector<int>, int> index_of;
  g.elements.push_back(Perm::identity(degree));
  index_of[g.elements[0].images] = 0;

  std::vector<Perm> level = {g.elements[0]};
  while (!level.empty()) {
    std::vector<Perm> next;
    for (const auto& x : level) {
      for (const auto& s : gens_sorted) {
        Perm y = compose(s, x);
        if (index_of.find(y.images) == index_of.end()) {
          index_of[y.images] = -1;  // claimed, numbered after the level sort
          next.push_back(std::move(y));
        }
      }
    }
    std::sort(next.begin(), next.end());
    for (auto& y : next) {
      index_of[y.images] = static_cast<int>(g.elements.size());
      g.elements.push_back(y);
      if (static_cast<int>(g.elements.size()) > order_cap)
        fail(Errc::order_cap_exceeded,
             "group order exceeds cap " + std::to_string(order_cap));
    }
    level = std::move(next);
  }

  int n = g.order();
  g.mult.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g.mult[i][j] = index_of.at(compose(g.elements[i], g.elements[j]).images);

  g.inv.assign(n, 0);
  for (int i = 0; i < n; ++i) g.inv[i] = index_of.at(inverse(g.elements[i]).images);

  return g;
}

ConjClasses conjugacy_classes(const Group& g) {
  int n = g.order();
  ConjClasses cc;
  cc.class_of.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (cc.class_of[a] != -1) continue;
    int id = static_cast<int>(cc.classes.size());
    std::set<int> orbit;
    for (int h = 0; h < n; ++h) orbit.insert(g.mult[g.mult[h][a]][g.inv[h]]);
    std::vector<int> members(orbit.begin(), orbit.end());
    for (int m : members) cc.class_of[m] = id;
    cc.representatives.push_back(members.front());
    cc.classes.push_back(std::move(members));
  }
  cc.inverse_class.resize(cc.classes.size());
  for (std::size_t c = 0; c < cc.classes.size(); ++c)
    cc.inverse_class[c] = cc.class_of[g.inv[cc.representatives[c]]];
  return cc;
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  return a.member_indices == b.member_indices;
}

bool is_subgroup(const Group& g, const std::vector<int>& members) {
  std::vector<char> in(g.order(), 0);
  for (int m : members) {
    if (m < 0 || m >= g.order()) return false;
    in[m] = 1;
  }
  if (!in[0]) return false;
  for (int a : members) {
    if (!in[g.inv[a]]) return false;
    for (int b : members)
      if (!in[g.mult[a][b]]) return false;
  }
  return true;
}

std::vector<int> generated_subgroup(const Group& g, const std::vector<int>& seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> work;
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  };
  push(0);
  for (int s : seed) push(s);
  for (std::size_t i = 0; i < work.size(); ++i) {
    push(g.inv[work[i]]);
    for (std::size_t j = 0; j <= i; ++j) {
      push(g.mult[work[i]][work[j]]);
      push(g.mult[work[j]][work[i]]);
    }
  }
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

std::vector<Subgroup> enumerate_subgroups(const Group& g) {
  std::set<std::vector<int>> known;
  known.insert({0});

  std::set<std::vector<int>> cyclic;
  for (int a = 0; a < g.order(); ++a) cyclic.insert(generated_subgroup(g, {a}));
  for (const auto& c : cyclic) known.insert(c);

  // join closure: keep adjoining a cyclic subgroup to a known subgroup
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(known.begin(), known.end());
    for (const auto& h : snapshot) {
      for (const auto& c : cyclic) {
        std::vector<int> seed = h;
        seed.insert(seed.end(), c.begin(), c.end());
        std::vector<int> joined = generated_subgroup(g, seed);
        if (known.insert(std::move(joined)).second) grew = true;
      }
    }
  }

  std::vector<Subgroup> out;
  out.reserve(known.size());
  for (const auto& m : known) out.push_back(Subgroup{m});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.member_indices < b.member_indices;
  });
  return out;
}

std::vector<std::vector<int>> left_cosets(const Group& g, const Subgroup& h) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<int>> blocks;
  for (int a = 0; a < g.order(); ++a) {
    if (seen[a]) continue;
    std::vector<int> block;
    block.reserve(h.member_indices.size());
    for (int m : h.member_indices) block.push_back(g.mult[a][m]);
    std::sort(block.begin(), block.end());
    for (int x : block) seen[x] = 1;
    blocks.push_back(std::move(block));
  }
  return blocks;
}

}  // namespace gmod
