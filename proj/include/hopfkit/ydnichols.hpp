#ifndef HOPFKIT_YDNICHOLS_HPP
#define HOPFKIT_YDNICHOLS_HPP

// Yetter-Drinfeld modules over group algebras, braidings, YD data for
// quantum lines, bosonization and Nichols algebra graded dimensions.

#include <optional>
#include <string>
#include <vector>

#include "hopfkit/groups.hpp"
#include "hopfkit/hopf.hpp"

namespace hopfkit {

struct YDModule {
  std::string label;
  FiniteGroup group;
  std::size_t dim = 0;
  /// Matrices of the group generators, in group.generators order.
  std::vector<Matrix> generator_action;
  /// Degree of each basis vector, as a group element index.
  std::vector<std::size_t> grading;
};

struct YDCheck {
  bool passed = false;
  std::string detail;
};
/// Representation check, then delta(g.m) = g deg(m) g^-1 (x) g.m on every
/// homogeneous basis vector m and every group element g.
YDCheck verify_yd(const YDModule& m);

enum class GammaClass { kTrivial, kY, kX };
/// How x acts on v_j in M(O_{x^m}, chi_k).
enum class XActionConvention {
  kInduced,  // x.v_j = w^k v_{j l}, the induced module
  kShifted,  // x.v_j = w^k v_{j l + 1}
};

/// M(O, rho) over Gamma_4p.  For kTrivial, `rep` indexes gamma4p_irreps;
/// for kY, cls = k and rep = s (psi_s); for kX, cls = m and rep = k (chi_k).
YDModule yd_module_gamma4p(int p, GammaClass cls_kind, int cls, int rep,
                           XActionConvention conv = XActionConvention::kInduced);

/// c(e_r (x) e_t) = deg(e_r).e_t (x) e_r, on the basis e_r (x) e_t at r*v + t.
Matrix braiding(const YDModule& m);
bool braid_equation_check(const Matrix& c, std::size_t v);
/// q[r][t] with c(e_r (x) e_t) = q[r][t] e_t (x) e_r, if c has that shape.
std::optional<std::vector<Vec>> diagonal_type(const Matrix& c, std::size_t v);

struct YDDatum {
  std::string label;
  HopfAlgebra algebra;
  Vec g;
  Vec chi;  // chi(e_i)
  CycNumber q;
};

/// Each condition evaluated on its own, so a report can name every one
/// that fails rather than only the first.
struct YDDatumConditions {
  bool shapes = false;
  bool chi_algebra_map = false;
  bool g_grouplike = false;
  bool chi_g_is_q = false;
  bool q_root_of_unity = false;  // order >= 2
  bool commutation = false;      // (chi -> h) g = g (h <- chi) on every basis h
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};
YDDatumConditions yd_datum_conditions(const YDDatum& d);
/// All conditions above; detail names the first failure.
YDCheck validate_yd_datum(const YDDatum& d);

/// Multiplicative order of a root of unity, nullopt otherwise.
std::optional<unsigned> root_order(const CycNumber& q);

CycNumber q_int(unsigned n, const CycNumber& q);
CycNumber q_factorial(unsigned n, const CycNumber& q);
/// Gaussian binomial by the q-Pascal recurrence.
CycNumber q_binomial(unsigned n, unsigned k, const CycNumber& q);

/// R_q # L on the basis y^m # l_i at index m * dim L + i.  Validates the
/// datum first and the Hopf axioms afterwards (VerificationFailure).
HopfAlgebra bosonize(const YDDatum& d, const std::string& y_label = "y");
/// y^m # l -> delta_{m0} l
Matrix bosonization_projection(const YDDatum& d);

struct NicholsReport {
  std::vector<std::size_t> ranks;  // r_0 .. r_reached
  bool truncated = false;
  std::size_t total_dim = 0;       // when truncated
  unsigned cutoff = 0;
  bool guard_hit = false;
  std::string note;
};

/// Memory guard in MB from HOPFKIT_NICHOLS_GUARD_MB (default 512).
std::size_t nichols_guard_mb();
unsigned default_cutoff(std::size_t v);

enum class WordOrder { kInsertionSort, kReversed };
NicholsReport nichols_dims(const Matrix& c, std::size_t v, unsigned cutoff,
                           WordOrder order = WordOrder::kInsertionSort);
/// Rank of the degree-n symmetrizer alone.
std::size_t symmetrizer_rank(const Matrix& c, std::size_t v, unsigned n,
                             WordOrder order = WordOrder::kInsertionSort);

}  // namespace hopfkit

#endif  // HOPFKIT_YDNICHOLS_HPP
