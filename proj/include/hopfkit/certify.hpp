#ifndef HOPFKIT_CERTIFY_HPP
#define HOPFKIT_CERTIFY_HPP

// Invariant reports and the claim-by-claim certification of a sidecar.

#include <optional>
#include <string>
#include <vector>

#include "hopfkit/catalog.hpp"
#include "hopfkit/io.hpp"

namespace hopfkit {

struct SkewDim {
  std::string pair;  // "(1,g)"
  SkewOrientation orientation;
  std::size_t dim;
  bool nontrivial;
};

struct InvariantReport {
  std::size_t dim = 0;
  std::size_t radical_dim = 0;
  std::size_t coradical_dim = 0;
  std::vector<std::size_t> filtration_dims;
  /// From the candidates, when supplied and verified.
  std::optional<std::size_t> grouplike_count;
  std::vector<unsigned> grouplike_orders;
  std::vector<SkewDim> skew_primitive_dims;
  Vec integral_left;
  Vec integral_right;
  Vec distinguished;
  CycNumber tr_s2;
  bool semisimple = false;
  bool cosemisimple = false;
  bool chevalley = false;
  std::string chevalley_witness;
  std::optional<unsigned> antipode_order;
  std::optional<unsigned> antipode_square_order;
};

/// Candidates (optional) supply the group-likes used for skew-primitive
/// pairs; they are verified first and ignored if they fail.
InvariantReport compute_invariants(const HopfAlgebra& h, const CandidateData* candidates = nullptr);
Json to_json(const HopfAlgebra& h, const InvariantReport& r);

struct Claim {
  std::string id;
  std::string expected;
  std::string computed;
  bool passed = false;
  std::string detail;
};

struct CertifySuite {
  std::string family;
  std::string params;
  std::vector<Claim> claims;
  bool passed() const;
};

std::string describe_params(const std::string& family, const FamilyParams& p);
/// Every sidecar claim, re-verified from the structure constants.
CertifySuite certify(const std::string& family, const std::string& params, const HopfAlgebra& h,
                     const CandidateData& c);
CertifySuite certify(const Family& f);
Json to_json(const CertifySuite& s);
std::string format_table(const CertifySuite& s);

}  // namespace hopfkit

#endif  // HOPFKIT_CERTIFY_HPP
