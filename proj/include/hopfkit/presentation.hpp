#ifndef HOPFKIT_PRESENTATION_HPP
#define HOPFKIT_PRESENTATION_HPP

// Algebras given by generators, a list of normal monomials and a
// terminating rewriting system.  realize() turns such a description plus
// generator images of Delta, eps and S into structure constants.

#include <map>
#include <string>
#include <vector>

#include "hopfkit/hopf.hpp"

namespace hopfkit {

using Word = std::vector<int>;
/// Linear combination of words; zero coefficients are erased.
using WordComb = std::map<Word, CycNumber>;

struct RewriteRule {
  Word lhs;
  WordComb rhs;
};

/// One simple tensor left (x) right inside a generator's coproduct.
struct TensorTerm {
  WordComb left;
  WordComb right;
};

struct GeneratorImage {
  std::vector<TensorTerm> coproduct;
  CycNumber counit;
  WordComb antipode;
};

struct Presentation {
  std::string name;
  int conductor = 1;
  std::vector<std::string> generators;
  /// The declared basis, in order.
  std::vector<Word> normal_monomials;
  std::vector<RewriteRule> rules;
  std::vector<GeneratorImage> images;
  std::size_t step_limit = 1000000;

  int generator(const std::string& name) const;
  /// Label of a word such as "a*x^3*z"; the empty word is "1".
  std::string label(const Word& w) const;
};

WordComb word(const Presentation& p, const Word& w, const CycNumber& c);
WordComb word(const Presentation& p, const Word& w);
WordComb operator+(WordComb a, const WordComb& b);
WordComb operator-(WordComb a, const WordComb& b);
WordComb operator*(const WordComb& a, const WordComb& b);
WordComb scale(const CycNumber& c, const WordComb& a);
/// Word of one generator repeated n times.
Word letter_power(int gen, int n);
Word concat(const Word& a, const Word& b);

/// Leftmost rewriting to a combination of normal monomials, as a vector in
/// the declared basis.  Throws VerificationFailure when the step guard is
/// exhausted or a word is stuck outside the basis.
class NormalForm {
 public:
  explicit NormalForm(const Presentation& p);

  SparseVec reduce(const Word& w);
  Vec reduce(const WordComb& c);
  std::size_t index(const Word& w) const;  // index of a normal monomial

 private:
  const Presentation& p_;
  std::map<Word, std::size_t> basis_;
  std::map<Word, SparseVec> memo_;
  std::size_t steps_ = 0;

  SparseVec reduce_rec(const Word& w);
};

struct RealizeOptions {
  bool verify = true;
};

/// Structure constants of the presented Hopf algebra.  With verify set,
/// throws VerificationFailure naming the first failing axiom.
HopfAlgebra realize(const Presentation& p, RealizeOptions opts = {});

}  // namespace hopfkit

#endif  // HOPFKIT_PRESENTATION_HPP
