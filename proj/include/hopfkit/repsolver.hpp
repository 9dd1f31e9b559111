#ifndef HOPFKIT_REPSOLVER_HPP
#define HOPFKIT_REPSOLVER_HPP

// Modules over a Hopf algebra: verification, Burnside simplicity,
// intertwiners and Wedderburn completeness certificates.

#include <string>
#include <utility>
#include <vector>

#include "hopfkit/hopf.hpp"

namespace hopfkit {

/// action[i] is the matrix of the basis element e_i.
struct RepModule {
  std::string label;
  std::size_t dim = 0;
  std::vector<Matrix> action;
};

/// A module given only on algebra generators (named by basis label).
struct ModuleSpec {
  std::string label;
  std::size_t dim = 0;
  std::vector<std::pair<std::string, Matrix>> generators;
};

/// Extends generator matrices to every basis element through the
/// multiplication of h.  Throws VerificationFailure when the generators do
/// not generate h as an algebra.  The result is not yet verified.
RepModule expand_module(const HopfAlgebra& h, const ModuleSpec& spec);

/// The module of dual(h) afforded by a multiplicative matrix c of elements
/// of h (Delta c_ij = sum_k c_ik (x) c_kj): f acts by f(c_ij).
RepModule dual_module_from_matrix(const HopfAlgebra& h, const std::string& label,
                                  const std::vector<std::vector<Vec>>& c);
/// True iff Delta c_ij = sum_k c_ik (x) c_kj and eps(c_ij) = delta_ij.
bool is_multiplicative_matrix(const HopfAlgebra& h, const std::vector<std::vector<Vec>>& c);

struct ModuleCheck {
  bool passed = false;
  std::string detail;
};
ModuleCheck verify_module(const HopfAlgebra& h, const RepModule& m);

/// dim span{action(e_i)}
std::size_t image_dim(const RepModule& m);
/// Burnside: image is the full matrix algebra.
bool is_simple_certified(const RepModule& m);

/// {T : T a_M(e_i) = a_N(e_i) T for all i}, as vectors of T entries
/// (row-major, dim N x dim M).
Subspace hom_space(const RepModule& m, const RepModule& n);
bool are_isomorphic(const RepModule& m, const RepModule& n);

/// Character values tr(action(e_i)).
Vec character(const RepModule& m);

struct WedderburnCertificate {
  bool passed = false;
  std::size_t sum_of_squares = 0;
  std::size_t algebra_dim = 0;
  std::size_t radical_dim = 0;
  std::vector<std::size_t> profile;  // sorted module dims
  std::string detail;
};
/// Checks every module, simplicity, pairwise non-isomorphism, then
/// sum m_i^2 = dim H - dim J(H).
WedderburnCertificate wedderburn_certificate(const HopfAlgebra& h, const std::vector<RepModule>& modules,
                                             std::size_t radical_dim);
WedderburnCertificate wedderburn_certificate(const HopfAlgebra& h, const std::vector<RepModule>& modules);

}  // namespace hopfkit

#endif  // HOPFKIT_REPSOLVER_HPP
