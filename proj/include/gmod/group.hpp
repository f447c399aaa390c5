#pragma once

#include <vector>

namespace gmod {

// Permutation on {0,…,n−1} as a one-line image array.
struct Perm {
  std::vector<int> images;

  int degree() const { return static_cast<int>(images.size()); }
  int operator()(int p) const { return images[p]; }

  static Perm identity(int n);
  bool is_identity() const;
};

bool operator==(const Perm& a, const Perm& b);
bool operator<(const Perm& a, const Perm& b);  // lexicographic on images

/// (a∘b)(p) = a(b(p))
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);

/// Throws NotAPermutation unless images is a bijection on {0,…,n−1}.
void check_permutation(const Perm& p);

inline constexpr int kOrderCap = 1000;

struct Group {
  int degree = 1;
  std::vector<Perm> generators;
  std::vector<Perm> elements;  // identity first; breadth-first levels, lexicographic within a level
  std::vector<std::vector<int>> mult;  // mult[i][j] = index of elements[i]∘elements[j]
  std::vector<int> inv;

  int order() const { return static_cast<int>(elements.size()); }
};

/// Closure of the generators. degree 0 means "infer from the generators"
/// (then the list must be nonempty).
Group load_group(const std::vector<Perm>& generators, int degree = 0, int order_cap = kOrderCap);

struct ConjClasses {
  std::vector<std::vector<int>> classes;  // sorted members; classes ordered by least member
  std::vector<int> representatives;       // least member of each class
  std::vector<int> class_of;              // element index -> class index
  std::vector<int> inverse_class;         // class index -> class of the inverses
};

ConjClasses conjugacy_classes(const Group& g);

struct Subgroup {
  std::vector<int> member_indices;  // sorted, contains 0

  int order() const { return static_cast<int>(member_indices.size()); }
};

bool operator==(const Subgroup& a, const Subgroup& b);

/// True iff members contain the identity and are closed under mult and inv.
bool is_subgroup(const Group& g, const std::vector<int>& members);

/// Smallest subgroup containing the given elements.
std::vector<int> generated_subgroup(const Group& g, const std::vector<int>& seed);

/// Every subgroup, sorted by (order, member set).
std::vector<Subgroup> enumerate_subgroups(const Group& g);

/// Partition of G into left cosets gH, ordered by least member; the block
/// containing the identity (block 0) is H itself.
std::vector<std::vector<int>> left_cosets(const Group& g, const Subgroup& h);

}  // namespace gmod
