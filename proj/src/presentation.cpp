#include "hopfkit/presentation.hpp"

#include <algorithm>

#include "hopfkit/errors.hpp"

namespace hopfkit {

int Presentation::generator(const std::string& g) const {
  auto it = std::find(generators.begin(), generators.end(), g);
  if (it == generators.end()) throw InvalidParameter("unknown generator '" + g + "' in " + name);
  return static_cast<int>(it - generators.begin());
}

std::string Presentation::label(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += generators.at(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

WordComb word(const Presentation& p, const Word& w, const CycNumber& c) {
  if (c.conductor() != p.conductor) throw ConductorMismatch("word coefficient outside Q(z" + std::to_string(p.conductor) + ")");
  WordComb r;
  if (!c.is_zero()) r.emplace(w, c);
  return r;
}

WordComb word(const Presentation& p, const Word& w) { return word(p, w, CycNumber(p.conductor, 1L)); }

WordComb operator+(WordComb a, const WordComb& b) {
  for (const auto& [w, c] : b) {
    auto [it, inserted] = a.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) a.erase(it);
    }
  }
  return a;
}

WordComb operator-(WordComb a, const WordComb& b) {
  for (const auto& [w, c] : b) {
    auto [it, inserted] = a.try_emplace(w, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) a.erase(it);
    }
  }
  return a;
}

WordComb operator*(const WordComb& a, const WordComb& b) {
  WordComb r;
  for (const auto& [u, c] : a) {
    for (const auto& [v, d] : b) r = r + WordComb{{concat(u, v), c * d}};
  }
  return r;
}

WordComb scale(const CycNumber& c, const WordComb& a) {
  WordComb r;
  if (c.is_zero()) return r;
  for (const auto& [w, x] : a) r.emplace(w, c * x);
  return r;
}

Word letter_power(int gen, int n) { return Word(static_cast<std::size_t>(std::max(n, 0)), gen); }

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

NormalForm::NormalForm(const Presentation& p) : p_(p) {
  for (std::size_t i = 0; i < p.normal_monomials.size(); ++i) {
    if (!basis_.emplace(p.normal_monomials[i], i).second) {
      throw InvalidParameter(p.name + ": repeated normal monomial " + p.label(p.normal_monomials[i]));
    }
  }
}

std::size_t NormalForm::index(const Word& w) const {
  auto it = basis_.find(w);
  if (it == basis_.end()) throw InvalidParameter(p_.name + ": " + p_.label(w) + " is not a normal monomial");
  return it->second;
}

SparseVec NormalForm::reduce(const Word& w) {
  steps_ = 0;
  return reduce_rec(w);
}

Vec NormalForm::reduce(const WordComb& c) {
  SparseVec acc;
  for (const auto& [w, x] : c) {
    for (const auto& t : reduce(w)) add_term(acc, t.index, x * t.coeff);
  }
  prune(acc);
  return to_dense(acc, p_.normal_monomials.size(), p_.conductor);
}

SparseVec NormalForm::reduce_rec(const Word& w) {
  if (auto it = basis_.find(w); it != basis_.end()) return {{it->second, CycNumber(p_.conductor, 1L)}};
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;
  if (++steps_ > p_.step_limit) throw VerificationFailure(p_.name + ": rewriting step guard exceeded at " + p_.label(w));

  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (const auto& rule : p_.rules) {
      const Word& l = rule.lhs;
      if (l.empty() || pos + l.size() > w.size()) continue;
      if (!std::equal(l.begin(), l.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) continue;
      Word head(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      Word tail(w.begin() + static_cast<std::ptrdiff_t>(pos + l.size()), w.end());
      SparseVec out;
      for (const auto& [r, c] : rule.rhs) {
        for (const auto& t : reduce_rec(concat(concat(head, r), tail))) add_term(out, t.index, c * t.coeff);
      }
      prune(out);
      memo_.emplace(w, out);
      return out;
    }
  }
  throw VerificationFailure(p_.name + ": word " + p_.label(w) + " is irreducible but not a normal monomial");
}

HopfAlgebra realize(const Presentation& p, RealizeOptions opts) {
  if (p.images.size() != p.generators.size()) throw InvalidParameter(p.name + ": one image per generator required");
  NormalForm nf(p);
  const std::size_t n = p.normal_monomials.size();
  const int cond = p.conductor;

  HopfAlgebra h;
  h.dim = n;
  h.conductor = cond;
  for (const auto& w : p.normal_monomials) h.labels.push_back(p.label(w));
  h.mult.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h.mult[i * n + j] = nf.reduce(concat(p.normal_monomials[i], p.normal_monomials[j]));
  }
  h.unit = to_dense(nf.reduce(Word{}), n, cond);

  std::vector<Tensor2> gen_delta;
  std::vector<Vec> gen_s;
  for (const auto& img : p.images) {
    Tensor2 d;
    for (const auto& term : img.coproduct) {
      for (const auto& [k, c] : tensor(nf.reduce(term.left), nf.reduce(term.right))) add_to(d, k.first, k.second, c);
    }
    prune(d);
    gen_delta.push_back(d);
    gen_s.push_back(nf.reduce(img.antipode));
  }

  const Tensor2 one_one = tensor(h.unit, h.unit);
  h.counit = zero_vec(n, cond);
  h.comult.assign(n, {});
  h.antipode = Matrix(n, n, cond);
  for (std::size_t i = 0; i < n; ++i) {
    const Word& w = p.normal_monomials[i];
    Tensor2 d = one_one;
    CycNumber e(cond, 1L);
    Vec s = h.unit;
    for (int letter : w) {
      d = multiply(h, d, gen_delta.at(letter));
      e *= p.images[letter].counit;
      s = multiply(h, gen_s[letter], s);
    }
    for (const auto& [k, c] : d) h.comult[i].push_back({k.first, k.second, c});
    h.counit[i] = e;
    for (std::size_t r = 0; r < n; ++r) h.antipode(r, i) = s[r];
  }
  normalize(h);
  if (opts.verify) require_hopf(h, p.name);
  return h;
}

}  // namespace hopfkit
