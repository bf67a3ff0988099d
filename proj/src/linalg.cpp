#include "algd/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace algd {

LabeledSpace LabeledSpace::numbered(std::size_t n, const std::string& prefix) {
  LabeledSpace s;
  s.labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) s.labels.push_back(prefix + std::to_string(i));
  return s;
}

LabeledSpace LabeledSpace::tensor(const LabeledSpace& a, const LabeledSpace& b) {
  LabeledSpace s;
  s.labels.reserve(a.dim() * b.dim());
  for (const auto& la : a.labels)
    for (const auto& lb : b.labels) s.labels.push_back(la + "⊗" + lb);
  return s;
}

QuotientSpace make_quotient(LabeledSpace ambient, RowReducer reduced) {
  std::size_t n = ambient.dim();
  assert(reduced.width() == n);
  QuotientSpace q;
  q.ambient_dim = n;
  q.ambient = std::move(ambient);
  q.relations = reduced.rows();
  q.pivots = reduced.pivots();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : q.pivots) is_pivot[p] = true;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) q.basis.push_back(j);

  // projection: e_f ↦ e_f for free f; e_p ↦ -Σ_f row_p[f] e_f for pivot p
  q.projection = Mat(q.basis.size(), n);
  for (std::size_t k = 0; k < q.basis.size(); ++k)
    q.projection.at(k, q.basis[k]) = Scalar(1);
  for (std::size_t r = 0; r < q.pivots.size(); ++r)
    for (std::size_t k = 0; k < q.basis.size(); ++k) {
      const Scalar& c = q.relations[r][q.basis[k]];
      if (!c.is_zero()) q.projection.at(k, q.pivots[r]) = -c;
    }
  q.section = Mat(n, q.basis.size());
  for (std::size_t k = 0; k < q.basis.size(); ++k)
    q.section.at(q.basis[k], k) = Scalar(1);
  return q;
}

QuotientSpace make_quotient(LabeledSpace ambient, const std::vector<Vec>& relations) {
  RowReducer rr(ambient.dim());
  for (const Vec& r : relations) rr.insert(r);
  return make_quotient(std::move(ambient), std::move(rr));
}

std::optional<DescendError> descent_obstruction(const Mat& f,
                                                const QuotientSpace& dom,
                                                const Mat& cod_proj) {
  for (const Vec& r : dom.relations) {
    Vec img = cod_proj.apply(f.apply(r));
    if (!is_zero(img)) return DescendError{r, img};
  }
  return std::nullopt;
}

Mat descend_map(const Mat& f, const QuotientSpace& dom, const Mat& cod_proj) {
  if (auto err = descent_obstruction(f, dom, cod_proj))
    throw std::domain_error("map does not descend to the quotient");
  return cod_proj * f * dom.section;
}

Mat descend_map(const Mat& f, const QuotientSpace& dom, const QuotientSpace& cod) {
  return descend_map(f, dom, cod.projection);
}

std::vector<Mat> hom_space(std::size_t dom_dim, std::size_t cod_dim,
                           const std::vector<HomConstraint>& constraints) {
  // unknowns: h as vec by columns, index j * cod_dim + i for h(i,j)
  std::size_t nv = dom_dim * cod_dim;
  std::vector<Vec> rows;
  for (const auto& c : constraints) {
    assert(c.left.rows() == cod_dim && c.left.cols() == cod_dim);
    assert(c.right.rows() == dom_dim && c.right.cols() == dom_dim);
    // (L h - h R)(i, j) = Σ_k L(i,k) h(k,j) - Σ_k h(i,k) R(k,j)
    for (std::size_t i = 0; i < cod_dim; ++i)
      for (std::size_t j = 0; j < dom_dim; ++j) {
        Vec row(nv);
        for (std::size_t k = 0; k < cod_dim; ++k)
          row[j * cod_dim + k] += c.left.at(i, k);
        for (std::size_t k = 0; k < dom_dim; ++k)
          row[k * cod_dim + i] -= c.right.at(k, j);
        rows.push_back(std::move(row));
      }
  }
  Mat sys = rows.empty() ? Mat::zero(1, nv) : Mat::from_rows(nv, rows);
  std::vector<Mat> basis;
  for (const Vec& v : kernel_basis(sys)) {
    Mat h(cod_dim, dom_dim);
    for (std::size_t j = 0; j < dom_dim; ++j)
      for (std::size_t i = 0; i < cod_dim; ++i) h.at(i, j) = v[j * cod_dim + i];
    basis.push_back(std::move(h));
  }
  return basis;
}

}  // namespace algd
