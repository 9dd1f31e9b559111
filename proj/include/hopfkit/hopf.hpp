#ifndef HOPFKIT_HOPF_HPP
#define HOPFKIT_HOPF_HPP

// Finite-dimensional Hopf algebras given by structure constants.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/linalg.hpp"

namespace hopfkit {

struct Term {
  std::size_t index;
  CycNumber coeff;
  friend bool operator==(const Term& a, const Term& b) { return a.index == b.index && a.coeff == b.coeff; }
};

/// Sorted by index, no zero coefficients.
using SparseVec = std::vector<Term>;

struct CoproductTerm {
  std::size_t left;
  std::size_t right;
  CycNumber coeff;
  friend bool operator==(const CoproductTerm& a, const CoproductTerm& b) {
    return a.left == b.left && a.right == b.right && a.coeff == b.coeff;
  }
};

/// Elements of H (x) H keyed by (left, right) basis indices; zeros erased.
using Tensor2 = std::map<std::pair<std::size_t, std::size_t>, CycNumber>;
using Tensor3 = std::map<std::array<std::size_t, 3>, CycNumber>;

struct HopfAlgebra {
  std::size_t dim = 0;
  int conductor = 1;
  std::vector<std::string> labels;
  /// mult[i * dim + j] = e_i * e_j
  std::vector<SparseVec> mult;
  Vec unit;
  Vec counit;
  /// comult[i] = Delta(e_i)
  std::vector<std::vector<CoproductTerm>> comult;
  Matrix antipode;

  const SparseVec& product(std::size_t i, std::size_t j) const { return mult[i * dim + j]; }
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const HopfAlgebra& a, const HopfAlgebra& b) = default;
};

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, std::size_t dim, int conductor);
/// Adds c into the entry at idx, keeping the vector sorted.
void add_term(SparseVec& v, std::size_t idx, const CycNumber& c);
void prune(SparseVec& v);
void add_to(Tensor2& t, std::size_t a, std::size_t b, const CycNumber& c);
void prune(Tensor2& t);

/// Sorts every Delta(e_i) by (left, right), merging repeats and dropping
/// zeros.  Constructors emit this form so that == compares tensors.
void normalize(HopfAlgebra& h);

/// Throws InvalidParameter when the arrays are not shaped for `dim`.
void check_shape(const HopfAlgebra& h);

Vec basis_element(const HopfAlgebra& h, std::size_t i);
Vec basis_element(const HopfAlgebra& h, const std::string& label);
Vec one(const HopfAlgebra& h);
Vec multiply(const HopfAlgebra& h, const Vec& a, const Vec& b);
Vec power(const HopfAlgebra& h, const Vec& a, unsigned n);
/// Two-sided inverse, or nullopt when a is not invertible.
std::optional<Vec> inverse(const HopfAlgebra& h, const Vec& a);
Tensor2 comultiply(const HopfAlgebra& h, const Vec& a);
CycNumber counit(const HopfAlgebra& h, const Vec& a);
Vec apply_antipode(const HopfAlgebra& h, const Vec& a);
/// Matrix of x -> a x.
Matrix left_mult_matrix(const HopfAlgebra& h, const Vec& a);
/// Matrix of x -> x a.
Matrix right_mult_matrix(const HopfAlgebra& h, const Vec& a);
Tensor2 tensor(const Vec& a, const Vec& b);
/// a (x) b products in H (x) H.
Tensor2 multiply(const HopfAlgebra& h, const Tensor2& a, const Tensor2& b);
/// Renders an element with basis labels, e.g. "1/2*a + x".
std::string format_element(const HopfAlgebra& h, const Vec& a);
std::string format_tensor(const HopfAlgebra& h, const Tensor2& t);

struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  std::string detail;  // first failure, with basis labels
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool passed() const;
  /// "axiom: detail" of the first failing check, or empty.
  std::string first_failure() const;
  void append(const AxiomReport& other);
};

AxiomReport verify_algebra(const HopfAlgebra& h);
AxiomReport verify_coalgebra(const HopfAlgebra& h);
AxiomReport verify_bialgebra(const HopfAlgebra& h);
AxiomReport verify_antipode(const HopfAlgebra& h);
AxiomReport verify_hopf(const HopfAlgebra& h);

/// Throws VerificationFailure naming the first failing axiom.
void require_hopf(const HopfAlgebra& h, const std::string& what);

/// Transposed structure tensors on the dual basis; labels gain a trailing
/// '*' (or lose one), so dual(dual(h)) == h.
HopfAlgebra dual(const HopfAlgebra& h);
/// Equal structure tensors, unit, counit and antipode; labels ignored.
bool same_tensors(const HopfAlgebra& a, const HopfAlgebra& b);
HopfAlgebra tensor_product(const HopfAlgebra& a, const HopfAlgebra& b);
HopfAlgebra embedded(const HopfAlgebra& h, int conductor);

CycNumber tr_s_squared(const HopfAlgebra& h);
/// Larson-Radford: in characteristic zero H is semisimple iff Tr(S^2) != 0.
bool is_semisimple(const HopfAlgebra& h);
/// Least n >= 1 with m^n = id, or nullopt beyond `bound`.
std::optional<unsigned> operator_order(const Matrix& m, unsigned bound);
/// Order of S; default bound 16 * dim.
std::optional<unsigned> antipode_order(const HopfAlgebra& h, unsigned bound = 0);

bool is_commutative(const HopfAlgebra& h);

}  // namespace hopfkit

#endif  // HOPFKIT_HOPF_HPP
