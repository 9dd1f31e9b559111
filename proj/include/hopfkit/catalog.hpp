#ifndef HOPFKIT_CATALOG_HPP
#define HOPFKIT_CATALOG_HPP

// Constructors for the Hopf algebra families, each with a sidecar of
// candidate invariants.  Nothing in a sidecar is trusted: the certify
// driver re-verifies every entry.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/groups.hpp"
#include "hopfkit/hopf.hpp"
#include "hopfkit/invariants.hpp"
#include "hopfkit/presentation.hpp"
#include "hopfkit/repsolver.hpp"
#include "hopfkit/ydnichols.hpp"

namespace hopfkit {

struct SkewWitness {
  Vec g;
  Vec h;
  Vec x;
  SkewOrientation orientation = SkewOrientation::kXg;
};

/// A multiplicative matrix of elements: Delta c_ij = sum_k c_ik (x) c_kj.
struct CoradicalBlock {
  std::string label;
  std::vector<std::vector<Vec>> entries;
};

struct IsomorphicCopy {
  ModuleSpec module;
  std::size_t partner = 0;  // index into simples
};

struct CandidateData {
  std::vector<Vec> grouplikes;
  std::optional<SkewWitness> skew;
  /// One representative per isomorphism class.
  std::vector<ModuleSpec> simples;
  std::vector<IsomorphicCopy> isomorphic_copies;
  /// Matrix-coalgebra blocks of the coradical beyond the group-likes.
  std::vector<CoradicalBlock> coradical_blocks;
  /// Claimed spanning set of the coradical; empty when not claimed.
  std::vector<Vec> coradical_span;
  std::optional<Vec> distinguished;
  /// dim, grouplike_count, coradical_dim, radical_dim, dual_grouplike_count,
  /// dual_coradical_dim, max_grouplike_order, ...
  std::map<std::string, long> expected;
  /// tr_s2_zero, chevalley, s4_identity, s2_identity, commutative, ...
  std::map<std::string, bool> flags;
  std::vector<std::size_t> profile;
  std::vector<std::string> notes;
};

struct FamilyParams {
  int n = 0;      // cyclic, dihedral, dicyclic order parameter
  int p = 3;      // prime for the 4p and 8p families
  int N = 2;      // Taft order
  int k = 1;      // root selector: q = z_N^k, lambda = z_2p^k
  int alpha = 1;  // H_8p(alpha)
  std::vector<int> orders;  // product of cyclics
  std::string group;        // underlying group for dual-group
};

struct Family {
  std::string name;
  FamilyParams params;
  HopfAlgebra algebra;
  std::optional<Presentation> presentation;
  CandidateData candidates;
};

std::vector<std::string> family_names();
/// Throws InvalidParameter for unknown names or bad parameters.
Family build_family(const std::string& name, const FamilyParams& params);
/// Dimension build_family would produce, without building; for size guards.
std::size_t family_dim(const std::string& name, const FamilyParams& params);

Family group_algebra_family(const FiniteGroup& g, const std::vector<GroupRep>& irreps);
Family dual_group_family(const FiniteGroup& g, const std::vector<GroupRep>& irreps);
/// Group and irreps by name: c_n, product, dihedral, dicyclic, q8, gamma4p.
std::pair<FiniteGroup, std::vector<GroupRep>> named_group(const std::string& name, const FamilyParams& params);

/// Basis x^j g^i at j*N + i; q = z_N^k.
Family taft(int N, int k = 1, const std::string& g_name = "g", const std::string& x_name = "x");

enum class Pointed4p { kA10, kA10Dual, kA11, kH4xCp };
/// Basis g^i x^e at 2i + e (tensor basis for kH4xCp); lambda = z_2p^k.
Family pointed4p(Pointed4p variant, int p, int lambda_k = 1);

/// Basis a^i w, w an alternating word in s = s_+, t = s_- of length < p or
/// the word s_+(p); index i*2p + position of w.
Family a4p(int p);
Family b4p(int p);
Family b8();
/// Basis a^i x^j at i*2p + j.
Family fun_dic(int p);
/// Basis z^e a^i x^j at e*4p + i*2p + j.
Family h8p(int p, int alpha);

/// u = s_+(p).  The last two pairings have chi(g) = 1 and are rejected by
/// validate_yd_datum; they are kept so that the rejection can be shown.
enum class A4pDatum {
  kChi2,      // (u a, chi_2)
  kChi3,      // (u, chi_3)
  kChi2OnU,   // (u, chi_2)
  kChi3OnUa,  // (u a, chi_3)
};
/// (k^Dic_p, g, chi) with chi(a) = 1, chi(x) = -1; flip sets chi(x) = +1.
YDDatum fun_dic_datum(int p, bool flip_x = false);
YDDatum a4p_datum(int p, A4pDatum which);
/// (kC_N, generator, chi(g) = z_N^k)
YDDatum cyclic_datum(int N, int k = 1);
/// fun-dic, a4p-chi2, a4p-chi3, a4p-chi2-u, a4p-chi3-ua, c_n.
YDDatum datum_by_name(const std::string& name, const FamilyParams& params);
std::vector<std::string> datum_names();

}  // namespace hopfkit

#endif  // HOPFKIT_CATALOG_HPP
