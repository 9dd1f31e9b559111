#ifndef HOPFKIT_INVARIANTS_HPP
#define HOPFKIT_INVARIANTS_HPP

// Radicals, coradical filtration, group-likes, skew-primitives, integrals
// and coinvariants of a finite-dimensional Hopf algebra.

#include <optional>
#include <string>
#include <vector>

#include "hopfkit/hopf.hpp"

namespace hopfkit {

/// Trace-form radical of the regular representation.  Checked to be a
/// two-sided nilpotent ideal; throws VerificationFailure otherwise.
Subspace jacobson_radical(const HopfAlgebra& h);

/// span{u v : u in a, v in b}
Subspace subspace_product(const HopfAlgebra& h, const Subspace& a, const Subspace& b);

/// H_0 = J(H*)^perp under the pairing of dual bases.
Subspace coradical(const HopfAlgebra& h);
/// H_0, H_1, ... ending with the first term equal to H.
std::vector<Subspace> coradical_filtration(const HopfAlgebra& h);

struct ChevalleyResult {
  bool holds = false;
  std::string witness;
};
ChevalleyResult chevalley_check(const HopfAlgebra& h, const Subspace& h0);
ChevalleyResult chevalley_check(const HopfAlgebra& h);

bool is_grouplike(const HopfAlgebra& h, const Vec& g);
/// Least k >= 1 with g^k = 1; nullopt past `bound`.
std::optional<unsigned> element_order(const HopfAlgebra& h, const Vec& g, unsigned bound);

struct GrouplikeCheck {
  bool passed = false;
  std::string detail;
  std::vector<unsigned> orders;  // aligned with the candidates
};
/// Each candidate group-like, pairwise distinct, closed under products and
/// inverses.
GrouplikeCheck verify_grouplikes(const HopfAlgebra& h, const std::vector<Vec>& candidates);

/// Which side the grouplike sits on in the defining identity.
enum class SkewOrientation {
  kXg,  // Delta x = x (x) g + h (x) x
  kGx,  // Delta x = g (x) x + x (x) h
};
Subspace skew_primitive_space(const HopfAlgebra& h, const Vec& g, const Vec& k,
                              SkewOrientation o = SkewOrientation::kXg);
/// The trivial part k(g - h) is excluded: dim > 1, or dim > 0 when g = h.
bool has_nontrivial_skew_primitive(const HopfAlgebra& h, const Subspace& p, const Vec& g, const Vec& k);

struct Integrals {
  Subspace left;
  Subspace right;
};
/// Throws VerificationFailure if either space is not one-dimensional.
Integrals integrals(const HopfAlgebra& h);
/// lambda(h)^-1 lambda(h_2) h_1 for a right integral lambda of H*.
Vec distinguished_grouplike(const HopfAlgebra& h);

/// Throws VerificationFailure unless pi (dim A x dim H) is a Hopf map.
void check_hopf_map(const HopfAlgebra& h, const HopfAlgebra& a, const Matrix& pi);
/// {x : (id (x) pi) Delta x = x (x) 1}
Subspace coinvariants(const HopfAlgebra& h, const HopfAlgebra& a, const Matrix& pi);

}  // namespace hopfkit

#endif  // HOPFKIT_INVARIANTS_HPP
