#include "hopfkit/repsolver.hpp"

#include <algorithm>
#include <deque>

#include "hopfkit/errors.hpp"
#include "hopfkit/invariants.hpp"

namespace hopfkit {

RepModule expand_module(const HopfAlgebra& h, const ModuleSpec& spec) {
  const int cond = h.conductor;
  std::vector<std::pair<Vec, Matrix>> gens;
  for (const auto& [label, m] : spec.generators) {
    if (m.rows() != spec.dim || m.cols() != spec.dim)
      throw InvalidParameter(spec.label + ": generator " + label + " has the wrong size");
    gens.emplace_back(basis_element(h, label), m.embedded(cond));
  }
  EchelonBasis span(h.dim, cond);
  std::vector<Vec> elts;
  std::vector<Matrix> mats;
  std::deque<std::size_t> queue;
  span.insert(h.unit);
  elts.push_back(h.unit);
  mats.push_back(Matrix::identity(spec.dim, cond));
  queue.push_back(0);
  while (!queue.empty() && span.rank() < h.dim) {
    std::size_t k = queue.front();
    queue.pop_front();
    for (const auto& [g, gm] : gens) {
      Vec e = multiply(h, elts[k], g);
      if (!span.insert(e)) continue;
      elts.push_back(e);
      mats.push_back(mats[k] * gm);
      queue.push_back(elts.size() - 1);
    }
  }
  if (span.rank() < h.dim) throw VerificationFailure(spec.label + ": generators span only " + std::to_string(span.rank()) + " dimensions");
  auto binv = inverse(Matrix::from_cols(elts, h.dim, cond));
  RepModule out{spec.label, spec.dim, {}};
  for (std::size_t i = 0; i < h.dim; ++i) {
    Matrix a(spec.dim, spec.dim, cond);
    for (std::size_t k = 0; k < elts.size(); ++k) {
      const CycNumber& c = (*binv)(k, i);
      if (!c.is_zero()) a = a + scale(c, mats[k]);
    }
    out.action.push_back(a);
  }
  return out;
}

bool is_multiplicative_matrix(const HopfAlgebra& h, const std::vector<std::vector<Vec>>& c) {
  const std::size_t d = c.size();
  for (std::size_t i = 0; i < d; ++i) {
    if (c[i].size() != d) return false;
    for (std::size_t j = 0; j < d; ++j) {
      Tensor2 rhs;
      for (std::size_t k = 0; k < d; ++k)
        for (const auto& [key, v] : tensor(c[i][k], c[k][j])) add_to(rhs, key.first, key.second, v);
      prune(rhs);
      if (comultiply(h, c[i][j]) != rhs) return false;
      if (counit(h, c[i][j]) != CycNumber(h.conductor, i == j ? 1L : 0L)) return false;
    }
  }
  return true;
}

RepModule dual_module_from_matrix(const HopfAlgebra& h, const std::string& label,
                                  const std::vector<std::vector<Vec>>& c) {
  const std::size_t d = c.size();
  RepModule m{label, d, {}};
  for (std::size_t f = 0; f < h.dim; ++f) {
    Matrix a(d, d, h.conductor);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) a(i, j) = c[i][j].at(f);
    m.action.push_back(a);
  }
  return m;
}

ModuleCheck verify_module(const HopfAlgebra& h, const RepModule& m) {
  if (m.action.size() != h.dim) return {false, m.label + ": expected " + std::to_string(h.dim) + " action matrices"};
  for (const auto& a : m.action)
    if (a.rows() != m.dim || a.cols() != m.dim || a.conductor() != h.conductor) return {false, m.label + ": malformed action matrix"};
  Matrix one(m.dim, m.dim, h.conductor);
  for (std::size_t i = 0; i < h.dim; ++i)
    if (!h.unit[i].is_zero()) one = one + scale(h.unit[i], m.action[i]);
  if (!one.is_identity()) return {false, m.label + ": 1 does not act as the identity"};
  for (std::size_t i = 0; i < h.dim; ++i) {
    for (std::size_t j = 0; j < h.dim; ++j) {
      Matrix rhs(m.dim, m.dim, h.conductor);
      for (const auto& t : h.product(i, j)) rhs = rhs + scale(t.coeff, m.action[t.index]);
      if (!(m.action[i] * m.action[j] == rhs))
        return {false, m.label + ": action fails at the pair (" + h.labels[i] + "," + h.labels[j] + ")"};
    }
  }
  return {true, m.label + " is a module"};
}

std::size_t image_dim(const RepModule& m) {
  if (m.action.empty()) return 0;
  EchelonBasis e(m.dim * m.dim, m.action.front().conductor());
  for (const auto& a : m.action) {
    e.insert(a.entries());
    if (e.rank() == m.dim * m.dim) break;
  }
  return e.rank();
}

bool is_simple_certified(const RepModule& m) { return m.dim > 0 && image_dim(m) == m.dim * m.dim; }

Subspace hom_space(const RepModule& m, const RepModule& n) {
  const std::size_t dm = m.dim, dn = n.dim;
  const int cond = m.action.empty() ? 1 : m.action.front().conductor();
  if (m.action.size() != n.action.size()) throw InvalidParameter("modules over different algebras");
  // unknown T (dn x dm) at index r * dm + c
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < m.action.size(); ++i) {
    const Matrix& a = m.action[i];
    const Matrix& b = n.action[i];
    for (std::size_t r = 0; r < dn; ++r) {
      for (std::size_t c = 0; c < dm; ++c) {
        // (T a - b T)(r, c)
        Vec row = zero_vec(dn * dm, cond);
        for (std::size_t k = 0; k < dm; ++k) row[r * dm + k] += a(k, c);
        for (std::size_t k = 0; k < dn; ++k) row[k * dm + c] -= b(r, k);
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
  }
  if (rows.empty()) return Subspace::full(dn * dm, cond);
  return nullspace(Matrix::from_rows(rows, dn * dm, cond));
}

bool are_isomorphic(const RepModule& m, const RepModule& n) {
  if (m.dim != n.dim) return false;
  Subspace hom = hom_space(m, n);
  if (hom.dim() == 0) return false;
  const int cond = hom.conductor();
  auto invertible = [&](const Vec& t) {
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < m.dim; ++r) rows.emplace_back(t.begin() + r * m.dim, t.begin() + (r + 1) * m.dim);
    return rank(Matrix::from_rows(rows, m.dim, cond)) == m.dim;
  };
  Vec mix = zero_vec(m.dim * m.dim, cond);
  long k = 1;
  for (const auto& b : hom.basis()) {
    if (invertible(b)) return true;
    axpy(mix, CycNumber(cond, k++), b);
  }
  return invertible(mix);
}

Vec character(const RepModule& m) {
  Vec out;
  for (const auto& a : m.action) out.push_back(a.trace());
  return out;
}

WedderburnCertificate wedderburn_certificate(const HopfAlgebra& h, const std::vector<RepModule>& modules,
                                             std::size_t radical_dim) {
  WedderburnCertificate c;
  c.algebra_dim = h.dim;
  c.radical_dim = radical_dim;
  for (const auto& m : modules) {
    auto v = verify_module(h, m);
    if (!v.passed) {
      c.detail = v.detail;
      return c;
    }
    if (!is_simple_certified(m)) {
      c.detail = m.label + " is not simple (image dim " + std::to_string(image_dim(m)) + ")";
      return c;
    }
    c.profile.push_back(m.dim);
    c.sum_of_squares += m.dim * m.dim;
  }
  for (std::size_t i = 0; i < modules.size(); ++i)
    for (std::size_t j = i + 1; j < modules.size(); ++j)
      if (are_isomorphic(modules[i], modules[j])) {
        c.detail = modules[i].label + " is isomorphic to " + modules[j].label;
        return c;
      }
  std::sort(c.profile.begin(), c.profile.end());
  c.passed = c.sum_of_squares == h.dim - radical_dim;
  c.detail = "sum of squares " + std::to_string(c.sum_of_squares) + (c.passed ? " = " : " != ") +
             std::to_string(h.dim) + " - " + std::to_string(radical_dim);
  return c;
}

WedderburnCertificate wedderburn_certificate(const HopfAlgebra& h, const std::vector<RepModule>& modules) {
  return wedderburn_certificate(h, modules, jacobson_radical(h).dim());
}

}  // namespace hopfkit
