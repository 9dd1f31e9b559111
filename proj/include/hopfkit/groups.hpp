#ifndef HOPFKIT_GROUPS_HPP
#define HOPFKIT_GROUPS_HPP

// Small finite groups by multiplication table, with their irreducible
// representations given on generators.

#include <cstddef>
#include <string>
#include <vector>

#include "hopfkit/linalg.hpp"

namespace hopfkit {

struct FiniteGroup {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::size_t> table;  // table[a * n + b] = ab
  std::vector<std::size_t> inv;
  std::size_t identity = 0;
  std::vector<std::size_t> generators;
  /// Smallest conductor carrying all irreducible characters we build.
  int conductor = 1;

  std::size_t order() const { return labels.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table[a * order() + b]; }
  std::size_t element_order(std::size_t a) const;
  std::size_t power(std::size_t a, long e) const;
  /// g h g^-1
  std::size_t conjugate(std::size_t g, std::size_t h) const { return mul(mul(g, h), inv[g]); }
  std::size_t index_of(const std::string& label) const;
  /// Throws VerificationFailure unless the table is a group.
  void check() const;
};

/// A representation given by matrices on the group generators.
struct GroupRep {
  std::string label;
  std::size_t dim = 0;
  std::vector<Matrix> generator_images;
};

/// Matrices for every element, by breadth-first products of generators.
/// Throws VerificationFailure when the images do not define a homomorphism.
std::vector<Matrix> expand_rep(const FiniteGroup& g, const GroupRep& r);

FiniteGroup cyclic_group(int n);
FiniteGroup product_of_cyclics(const std::vector<int>& orders);
/// Order 2n: a^i y^j with y a y^-1 = a^-1.
FiniteGroup dihedral_group(int n);
/// Order 4n: y^j x^i with x^4 = y^n = 1, x y x^-1 = y^-1.
FiniteGroup dicyclic_group(int n);
/// x^i y^j with x^4 = 1, y^2 = x^2, y x y^-1 = x^-1.
FiniteGroup quaternion_group();
/// y^j x^i with x^4 = 1 = y^p and x y = y^l x, l = (p - 1)/2; needs l^2 = -1 mod p.
FiniteGroup gamma4p_group(int p);

/// Complete lists of irreducible representations.
std::vector<GroupRep> cyclic_irreps(const FiniteGroup& g, const std::vector<int>& orders);
std::vector<GroupRep> dihedral_irreps(const FiniteGroup& g, int n);
std::vector<GroupRep> dicyclic_irreps(const FiniteGroup& g, int n);
std::vector<GroupRep> quaternion_irreps(const FiniteGroup& g);
std::vector<GroupRep> gamma4p_irreps(const FiniteGroup& g, int p);

bool is_prime(int n);
long mod(long a, long m);

}  // namespace hopfkit

#endif  // HOPFKIT_GROUPS_HPP
