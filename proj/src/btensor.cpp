#include "algd/btensor.hpp"

#include <cassert>

namespace algd {

namespace {

// adds c * (f applied to leg `pos` of ambient basis vector p) into out
void add_leg_image(Vec& out, const Mat& f, std::size_t pos, std::size_t arity,
                   std::size_t n, std::size_t p, const Scalar& c) {
  std::size_t stride = 1;
  for (std::size_t k = pos + 1; k < arity; ++k) stride *= n;
  std::size_t digit = (p / stride) % n;
  std::size_t base = p - digit * stride;
  for (std::size_t k = 0; k < n; ++k) {
    const Scalar& v = f.at(k, digit);
    if (!v.is_zero()) out[base + k * stride] += c * v;
  }
}

}  // namespace

BalancedTensorSpace btensor(const Algebra& a, std::size_t arity,
                            std::vector<Balancing> balancings) {
  std::size_t n = a.dim();
  std::size_t dim = 1;
  for (std::size_t k = 0; k < arity; ++k) dim *= n;
  for (const auto& b : balancings) {
    if (b.left_leg >= arity || b.right_leg >= arity || b.left_leg == b.right_leg)
      throw CheckError("BadBalancing", "leg indices out of range");
    if (b.left_mod.side != ModSide::Left || b.right_mod.side != ModSide::Right)
      throw CheckError("BadBalancing", "module sides do not match the legs");
    if (b.left_mod.base.dim() != b.right_mod.base.dim())
      throw CheckError("BadBalancing", "balancing over different bases");
    if (b.left_mod.carrier_dim != n || b.right_mod.carrier_dim != n)
      throw CheckError("BadBalancing", "module carrier is not A");
  }
  RowReducer rr(dim);
  for (const auto& b : balancings) {
    std::size_t nb = b.left_mod.base.dim();
    for (std::size_t x = 0; x < nb; ++x)
      for (std::size_t p = 0; p < dim; ++p) {
        Vec rel(dim);
        add_leg_image(rel, b.left_mod.act[x], b.left_leg, arity, n, p, Scalar(1));
        add_leg_image(rel, b.right_mod.act[x], b.right_leg, arity, n, p,
                      Scalar(-1));
        if (!is_zero(rel)) rr.insert(std::move(rel));
      }
  }
  LabeledSpace amb = a.space;
  for (std::size_t k = 1; k < arity; ++k)
    amb = LabeledSpace::tensor(amb, a.space);
  BalancedTensorSpace sp;
  sp.arity = arity;
  sp.n = n;
  sp.balancings = std::move(balancings);
  sp.q = make_quotient(std::move(amb), std::move(rr));
  return sp;
}

Mat leg_op(const Mat& f, std::size_t pos, std::size_t arity, std::size_t n) {
  assert(f.rows() == n && f.cols() == n);
  std::size_t dim = 1;
  for (std::size_t k = 0; k < arity; ++k) dim *= n;
  Mat m(dim, dim);
  for (std::size_t p = 0; p < dim; ++p) {
    Vec col(dim);
    add_leg_image(col, f, pos, arity, n, p, Scalar(1));
    m.set_col(p, col);
  }
  return m;
}

Mat flip_mat(std::size_t n) {
  Mat m(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(j * n + i, i * n + j) = Scalar(1);
  return m;
}

Mat on_legs_13(const Mat& f, std::size_t n) {
  assert(f.rows() == n * n && f.cols() == n * n);
  Mat swap23 = kron(Mat::identity(n), flip_mat(n));
  return swap23 * kron(f, Mat::identity(n)) * swap23;
}

void check_A3(const BalancedTensorSpace& sp, const Algebra& a, bool from_left) {
  assert(sp.arity == 2);
  std::size_t n = a.dim();
  const auto& side = from_left ? a.lmat : a.rmat;
  for (int leg = 0; leg < 2; ++leg) {
    std::vector<Mat> stack;
    for (std::size_t c = 0; c < n; ++c)
      stack.push_back(sp.proj() * leg_op(side[c], leg, 2, n) * sp.sec());
    if (!is_injective(Mat::vstack(stack)))
      throw CheckError("DegenerateTensor",
                       std::string("factor-wise module action on leg ") +
                           std::to_string(leg + 1) + " is degenerate");
  }
}

}  // namespace algd
