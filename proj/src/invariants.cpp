#include "hopfkit/invariants.hpp"

#include <algorithm>

#include "hopfkit/errors.hpp"

namespace hopfkit {

namespace {

// Stacks the linear maps H -> H (x) K given as tensors per basis vector
// into one matrix, keeping only rows that are not identically zero.
Subspace tensor_nullspace(std::size_t dim, int conductor, const std::vector<Tensor2>& images) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_of;
  for (const auto& t : images)
    for (const auto& [k, c] : t) row_of.try_emplace(k, 0);
  std::size_t r = 0;
  for (auto& [k, idx] : row_of) idx = r++;
  Matrix m(row_of.size(), dim, conductor);
  for (std::size_t j = 0; j < dim; ++j)
    for (const auto& [k, c] : images[j]) m(row_of[k], j) = c;
  return nullspace(m);
}

void subtract(Tensor2& t, const Tensor2& s) {
  for (const auto& [k, c] : s) add_to(t, k.first, k.second, -c);
  prune(t);
}

Tensor2 tensor_basis(std::size_t i, const Vec& v, bool left) {
  Tensor2 t;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    if (left) {
      add_to(t, i, j, v[j]);
    } else {
      add_to(t, j, i, v[j]);
    }
  }
  return t;
}

}  // namespace

Subspace subspace_product(const HopfAlgebra& h, const Subspace& a, const Subspace& b) {
  EchelonBasis e(h.dim, h.conductor);
  for (const auto& u : a.basis()) {
    for (const auto& v : b.basis()) {
      if (e.rank() == h.dim) break;
      e.insert(multiply(h, u, v));
    }
  }
  return Subspace::span(h.dim, h.conductor, e.sorted_rows());
}

Subspace jacobson_radical(const HopfAlgebra& h) {
  const std::size_t n = h.dim;
  // tau_k = tr(L_{e_k})
  Vec tau = zero_vec(n, h.conductor);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m)
      for (const auto& t : h.product(k, m))
        if (t.index == m) tau[k] += t.coeff;
  Matrix gram(n, n, h.conductor);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : h.product(i, j))
        if (!tau[t.index].is_zero()) gram(i, j) += t.coeff * tau[t.index];
  Subspace j = nullspace(gram);

  for (const auto& v : j.basis()) {
    for (std::size_t i = 0; i < n; ++i) {
      Vec e = basis_element(h, i);
      if (!j.contains(multiply(h, e, v)) || !j.contains(multiply(h, v, e)))
        throw VerificationFailure("trace-form radical is not an ideal (at " + h.labels[i] + ")");
    }
  }
  Subspace p = j;
  for (std::size_t k = 0; k <= n && p.dim() > 0; ++k) p = subspace_product(h, p, j);
  if (p.dim() > 0) throw VerificationFailure("trace-form radical is not nilpotent");
  return j;
}

std::vector<Subspace> coradical_filtration(const HopfAlgebra& h) {
  const HopfAlgebra d = dual(h);
  const Subspace j = jacobson_radical(d);
  std::vector<Subspace> out;
  Subspace p = j;
  while (true) {
    out.push_back(p.annihilator());
    if (p.dim() == 0) break;
    p = subspace_product(d, p, j);
  }
  return out;
}

Subspace coradical(const HopfAlgebra& h) { return jacobson_radical(dual(h)).annihilator(); }

ChevalleyResult chevalley_check(const HopfAlgebra& h, const Subspace& h0) {
  if (!h0.contains(h.unit)) return {false, "1 is not in the coradical"};
  for (const auto& u : h0.basis()) {
    for (const auto& v : h0.basis()) {
      Vec w = multiply(h, u, v);
      if (!h0.contains(w)) return {false, "coradical not closed under multiplication: " + format_element(h, w)};
    }
    Vec s = apply_antipode(h, u);
    if (!h0.contains(s)) return {false, "coradical not closed under S: S(" + format_element(h, u) + ")"};
  }
  return {true, "coradical of dim " + std::to_string(h0.dim()) + " is a Hopf subalgebra"};
}

ChevalleyResult chevalley_check(const HopfAlgebra& h) { return chevalley_check(h, coradical(h)); }

bool is_grouplike(const HopfAlgebra& h, const Vec& g) {
  return counit(h, g).is_one() && comultiply(h, g) == tensor(g, g);
}

std::optional<unsigned> element_order(const HopfAlgebra& h, const Vec& g, unsigned bound) {
  Vec p = g;
  for (unsigned k = 1; k <= bound; ++k) {
    if (p == h.unit) return k;
    p = multiply(h, p, g);
  }
  return std::nullopt;
}

GrouplikeCheck verify_grouplikes(const HopfAlgebra& h, const std::vector<Vec>& cands) {
  GrouplikeCheck r;
  for (const auto& g : cands) {
    if (!is_grouplike(h, g)) {
      r.detail = "not group-like: " + format_element(h, g);
      return r;
    }
  }
  auto find = [&](const Vec& v) { return std::find(cands.begin(), cands.end(), v) != cands.end(); };
  for (std::size_t i = 0; i < cands.size(); ++i) {
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      if (cands[i] == cands[j]) {
        r.detail = "repeated candidate " + format_element(h, cands[i]);
        return r;
      }
    }
  }
  if (!find(h.unit)) {
    r.detail = "1 missing from the candidates";
    return r;
  }
  for (const auto& a : cands) {
    for (const auto& b : cands) {
      Vec ab = multiply(h, a, b);
      if (!find(ab)) {
        r.detail = "not closed: " + format_element(h, ab);
        return r;
      }
    }
    if (!find(apply_antipode(h, a))) {
      r.detail = "inverse missing for " + format_element(h, a);
      return r;
    }
  }
  for (const auto& g : cands) r.orders.push_back(*element_order(h, g, static_cast<unsigned>(cands.size())));
  r.passed = true;
  r.detail = std::to_string(cands.size()) + " group-likes form a group";
  return r;
}

Subspace skew_primitive_space(const HopfAlgebra& h, const Vec& g, const Vec& k, SkewOrientation o) {
  std::vector<Tensor2> images;
  for (std::size_t i = 0; i < h.dim; ++i) {
    Tensor2 t = comultiply(h, basis_element(h, i));
    if (o == SkewOrientation::kXg) {
      subtract(t, tensor_basis(i, g, true));   // x (x) g
      subtract(t, tensor_basis(i, k, false));  // h (x) x
    } else {
      subtract(t, tensor_basis(i, g, false));  // g (x) x
      subtract(t, tensor_basis(i, k, true));   // x (x) h
    }
    images.push_back(t);
  }
  return tensor_nullspace(h.dim, h.conductor, images);
}

bool has_nontrivial_skew_primitive(const HopfAlgebra&, const Subspace& p, const Vec& g, const Vec& k) {
  return g == k ? p.dim() > 0 : p.dim() > 1;
}

Integrals integrals(const HopfAlgebra& h) {
  const std::size_t n = h.dim;
  auto stacked = [&](bool left) {
    Matrix m(n * n, n, h.conductor);
    for (std::size_t i = 0; i < n; ++i) {
      Vec e = basis_element(h, i);
      Matrix l = left ? left_mult_matrix(h, e) : right_mult_matrix(h, e);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          CycNumber v = l(r, c);
          if (r == c) v -= h.counit[i];
          m(i * n + r, c) = v;
        }
      }
    }
    return nullspace(m);
  };
  Integrals out{stacked(true), stacked(false)};
  if (out.left.dim() != 1 || out.right.dim() != 1)
    throw VerificationFailure("integral spaces have dims " + std::to_string(out.left.dim()) + " and " +
                              std::to_string(out.right.dim()));
  return out;
}

Vec distinguished_grouplike(const HopfAlgebra& h) {
  const HopfAlgebra d = dual(h);
  const Vec lambda = integrals(d).right.basis().front();
  std::size_t j = 0;
  while (lambda[j].is_zero()) ++j;
  Vec a = zero_vec(h.dim, h.conductor);
  for (const auto& t : h.comult[j]) add_product(a[t.left], t.coeff, lambda[t.right]);
  a = scale(lambda[j].inverse(), a);
  if (!is_grouplike(h, a)) throw VerificationFailure("distinguished element is not group-like: " + format_element(h, a));
  return a;
}

void check_hopf_map(const HopfAlgebra& h, const HopfAlgebra& a, const Matrix& pi) {
  if (pi.rows() != a.dim || pi.cols() != h.dim) throw InvalidParameter("projection has the wrong shape");
  if (pi.conductor() != h.conductor || a.conductor != h.conductor) throw ConductorMismatch("projection conductors differ");
  auto img = [&](std::size_t i) { return pi.col(i); };
  if (pi.apply(h.unit) != a.unit) throw VerificationFailure("projection does not preserve 1");
  for (std::size_t i = 0; i < h.dim; ++i) {
    if (counit(a, img(i)) != h.counit[i]) throw VerificationFailure("projection does not preserve eps at " + h.labels[i]);
    for (std::size_t j = 0; j < h.dim; ++j) {
      Vec lhs = pi.apply(multiply(h, basis_element(h, i), basis_element(h, j)));
      if (lhs != multiply(a, img(i), img(j)))
        throw VerificationFailure("projection not multiplicative at " + h.labels[i] + "*" + h.labels[j]);
    }
    Tensor2 lhs;
    for (const auto& t : h.comult[i]) {
      Vec l = img(t.left), r = img(t.right);
      for (std::size_t x = 0; x < a.dim; ++x) {
        if (l[x].is_zero()) continue;
        for (std::size_t y = 0; y < a.dim; ++y)
          if (!r[y].is_zero()) add_to(lhs, x, y, t.coeff * l[x] * r[y]);
      }
    }
    prune(lhs);
    if (lhs != comultiply(a, img(i))) throw VerificationFailure("projection not comultiplicative at " + h.labels[i]);
  }
}

Subspace coinvariants(const HopfAlgebra& h, const HopfAlgebra& a, const Matrix& pi) {
  check_hopf_map(h, a, pi);
  std::vector<Tensor2> images;
  for (std::size_t i = 0; i < h.dim; ++i) {
    Tensor2 t;
    for (const auto& c : h.comult[i]) {
      Vec r = pi.col(c.right);
      for (std::size_t y = 0; y < a.dim; ++y)
        if (!r[y].is_zero()) add_to(t, c.left, y, c.coeff * r[y]);
    }
    for (std::size_t y = 0; y < a.dim; ++y)
      if (!a.unit[y].is_zero()) add_to(t, i, y, -a.unit[y]);
    prune(t);
    images.push_back(t);
  }
  return tensor_nullspace(h.dim, h.conductor, images);
}

}  // namespace hopfkit
