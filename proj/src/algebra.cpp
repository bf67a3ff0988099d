#include "algd/algebra.hpp"

#include <cassert>

namespace algd {

Vec Algebra::mul(const Vec& a, const Vec& b) const {
  std::size_t n = dim();
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    Vec t = lmat[i].apply(b);
    for (std::size_t k = 0; k < n; ++k)
      if (!t[k].is_zero()) out[k] += a[i] * t[k];
  }
  return out;
}

Mat Algebra::lmul(const Vec& a) const {
  Mat m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!a[i].is_zero()) m = m + a[i] * lmat[i];
  return m;
}

Mat Algebra::rmul(const Vec& a) const {
  Mat m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    if (!a[j].is_zero()) m = m + a[j] * rmat[j];
  return m;
}

Mat Algebra::mult_op() const {
  std::size_t n = dim();
  Mat m(n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        m.at(k, i * n + j) = mult.at(k, j * n + i);
  return m;
}

Algebra Algebra::opposite() const {
  Algebra op;
  op.field = field;
  op.space = space;
  op.mult = mult_op();
  op.lmat = rmat;
  op.rmat = lmat;
  op.unit = unit;
  return op;
}

Algebra make_algebra(Field field, LabeledSpace space,
                     const std::vector<StructConst>& constants,
                     std::optional<Vec> unit) {
  std::size_t n = space.dim();
  if (n == 0) throw CheckError("EmptyAlgebra", "dimension 0 is not allowed");
  Algebra a;
  a.field = field;
  a.space = std::move(space);
  a.mult = Mat(n, n * n);
  for (const auto& c : constants) {
    if (c.i >= n || c.j >= n || c.k >= n)
      throw CheckError("BadStructConst", "index out of range");
    a.mult.at(c.k, c.i * n + c.j) += c.c;
  }
  a.lmat.assign(n, Mat(n, n));
  a.rmat.assign(n, Mat(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = a.mult.at(k, i * n + j);
        if (!c.is_zero()) {
          a.lmat[i].at(k, j) = c;
          a.rmat[j].at(k, i) = c;
        }
      }
  // associativity: (e_i e_j) e_k = e_i (e_j e_k)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec ij = a.mult.col(i * n + j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = a.rmat[k].apply(ij);
        Vec rhs = a.lmat[i].apply(a.mult.col(j * n + k));
        for (std::size_t q = 0; q < n; ++q)
          if (lhs[q] != rhs[q])
            throw CheckError("NotAssociative", "structure constants",
                             {a.space.labels[i], a.space.labels[j],
                              a.space.labels[k], a.space.labels[q]});
      }
    }
  if (unit) {
    const Vec& e = *unit;
    if (e.size() != n) throw CheckError("BadUnit", "wrong dimension");
    Mat le = a.lmul(e), re = a.rmul(e), id = Mat::identity(n);
    if (le != id || re != id)
      throw CheckError("BadUnit", "claimed unit is not a two-sided unit");
    a.unit = e;
  }
  return a;
}

void check_A1(const Algebra& a) {
  std::size_t n = a.dim();
  if (rank(a.mult) != n)
    throw CheckError("NotIdempotent", "A·A does not span A");
  if (!is_injective(Mat::vstack(a.rmat)))
    throw CheckError("Degenerate", "left multiplication kernel is nonzero");
  if (!is_injective(Mat::vstack(a.lmat)))
    throw CheckError("Degenerate", "right multiplication kernel is nonzero");
}

bool is_multiplier(const Algebra& a, const MultiplierPair& m) {
  std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    // e_i · λ(e_j) = ρ(e_i) · e_j  and one-sided module laws
    for (std::size_t j = 0; j < n; ++j)
      if (a.lmat[i].apply(m.l.col(j)) != a.rmat[j].apply(m.r.col(i)))
        return false;
    if (m.l * a.rmat[i] != a.rmat[i] * m.l) return false;
    if (m.r * a.lmat[i] != a.lmat[i] * m.r) return false;
  }
  return true;
}

std::vector<MultiplierPair> multiplier_algebra(const Algebra& a) {
  std::size_t n = a.dim(), nv = 2 * n * n;
  // unknown vector: vec(λ) columns-first, then vec(ρ); entry (i,j) at j*n+i
  auto lidx = [n](std::size_t i, std::size_t j) { return j * n + i; };
  auto ridx = [n](std::size_t i, std::size_t j) { return n * n + j * n + i; };
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // L_i λ e_j - R_j ρ e_i = 0
      for (std::size_t q = 0; q < n; ++q) {
        Vec row(nv);
        for (std::size_t k = 0; k < n; ++k) {
          if (!a.lmat[i].at(q, k).is_zero())
            row[lidx(k, j)] += a.lmat[i].at(q, k);
          if (!a.rmat[j].at(q, k).is_zero())
            row[ridx(k, i)] -= a.rmat[j].at(q, k);
        }
        rows.push_back(std::move(row));
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        // (λ R_i - R_i λ)(p, q) = 0
        Vec row(nv);
        for (std::size_t k = 0; k < n; ++k) {
          if (!a.rmat[i].at(k, q).is_zero())
            row[lidx(p, k)] += a.rmat[i].at(k, q);
          if (!a.rmat[i].at(p, k).is_zero())
            row[lidx(k, q)] -= a.rmat[i].at(p, k);
        }
        rows.push_back(std::move(row));
        // (ρ L_i - L_i ρ)(p, q) = 0
        Vec row2(nv);
        for (std::size_t k = 0; k < n; ++k) {
          if (!a.lmat[i].at(k, q).is_zero())
            row2[ridx(p, k)] += a.lmat[i].at(k, q);
          if (!a.lmat[i].at(p, k).is_zero())
            row2[ridx(k, q)] -= a.lmat[i].at(p, k);
        }
        rows.push_back(std::move(row2));
      }
  Mat sys = Mat::from_rows(nv, rows);
  std::vector<MultiplierPair> basis;
  for (const Vec& v : kernel_basis(sys)) {
    Mat l(n, n), r(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) {
        l.at(i, j) = v[lidx(i, j)];
        r.at(i, j) = v[ridx(i, j)];
      }
    basis.emplace_back(std::move(l), std::move(r));
  }
  return basis;
}

MultiplierPair multiplier_of(const Algebra& a, const Vec& v) {
  return {a.lmul(v), a.rmul(v)};
}

MultiplierPair BaseEmbedding::of(const Vec& x) const {
  assert(x.size() == base.dim());
  std::size_t n = img.empty() ? 0 : img[0].l.rows();
  MultiplierPair m(Mat(n, n), Mat(n, n));
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) m = m + MultiplierPair(x[i] * img[i].l, x[i] * img[i].r);
  return m;
}

BaseEmbedding make_base_embedding(const Algebra& a, Algebra base,
                                  std::vector<MultiplierPair> img, bool anti) {
  if (img.size() != base.dim())
    throw CheckError("BadEmbedding", "one image per base basis vector required");
  for (std::size_t i = 0; i < img.size(); ++i)
    if (!is_multiplier(a, img[i]))
      throw CheckError("NotMultiplier", "image is not a multiplier",
                       {base.space.labels[i]});
  BaseEmbedding e{std::move(base), anti, std::move(img)};
  std::size_t nb = e.base.dim();
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      MultiplierPair prod = anti ? e.img[j] * e.img[i] : e.img[i] * e.img[j];
      MultiplierPair of_prod = e.of(e.base.mult.col(i * nb + j));
      if (prod.l != of_prod.l || prod.r != of_prod.r)
        throw CheckError("NotMorphism",
                         anti ? "anti-homomorphism law fails"
                              : "homomorphism law fails",
                         {e.base.space.labels[i], e.base.space.labels[j]});
    }
  return e;
}

bool embeddings_commute(const BaseEmbedding& s, const BaseEmbedding& t) {
  for (const auto& ms : s.img)
    for (const auto& mt : t.img)
      if (ms.l * mt.l != mt.l * ms.l || ms.r * mt.r != mt.r * ms.r ||
          ms.l * mt.r != mt.r * ms.l || ms.r * mt.l != mt.l * ms.r)
        return false;
  return true;
}

ModuleStruct module_from_embedding(const Algebra& a, const BaseEmbedding& e,
                                   ModType type) {
  bool needs_anti =
      type == ModType::RightByTarget || type == ModType::LeftByTarget;
  if (e.anti != needs_anti)
    throw CheckError("WrongVariance",
                     "module type requires the other kind of embedding");
  ModuleStruct m;
  m.base = e.base;
  m.carrier_dim = a.dim();
  m.side = (type == ModType::LeftBySource || type == ModType::LeftByTarget)
               ? ModSide::Left
               : ModSide::Right;
  bool use_lambda =
      type == ModType::LeftBySource || type == ModType::RightByTarget;
  for (const auto& mp : e.img) m.act.push_back(use_lambda ? mp.l : mp.r);
  // module law: left — act(x)act(y) = act(xy); right — act(y)act(x) = act(xy)
  std::size_t nb = m.base.dim();
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      Vec xy = m.base.mult.col(i * nb + j);
      Mat axy(m.carrier_dim, m.carrier_dim);
      for (std::size_t k = 0; k < nb; ++k)
        if (!xy[k].is_zero()) axy = axy + xy[k] * m.act[k];
      Mat comp = (m.side == ModSide::Left) ? m.act[i] * m.act[j]
                                           : m.act[j] * m.act[i];
      if (comp != axy)
        throw CheckError("NotModule", "module law fails",
                         {m.base.space.labels[i], m.base.space.labels[j]});
    }
  return m;
}

void check_A2(const ModuleStruct& m) {
  std::size_t nb = m.base.dim(), d = m.carrier_dim;
  // faithful: the only base vector acting by zero is zero
  Mat faith(d * d, nb);
  for (std::size_t x = 0; x < nb; ++x)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        faith.at(i * d + j, x) = m.act[x].at(i, j);
  if (!is_injective(faith))
    throw CheckError("ModuleNotFaithful", "a nonzero base vector acts by zero");
  // idempotent: base · carrier spans the carrier
  RowReducer span(d);
  for (std::size_t x = 0; x < nb && span.rank() < d; ++x)
    for (std::size_t j = 0; j < d && span.rank() < d; ++j)
      span.insert(m.act[x].col(j));
  if (span.rank() != d)
    throw CheckError("ModuleNotIdempotent",
                     "base action does not span the carrier");
}

}  // namespace algd
