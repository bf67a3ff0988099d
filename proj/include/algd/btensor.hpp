#pragma once

#include "algd/algebra.hpp"

namespace algd {

/// One balancing condition on a tensor power of A: for every base basis
/// vector x, acting by x on the left factor (via a left module structure)
/// equals acting by x on the right factor (via a right module structure).
/// Relations quotiented out: (x ▸ _ on leg l) - (_ ◂ x on leg r).
struct Balancing {
  std::size_t left_leg;     // leg carrying the left module action
  std::size_t right_leg;    // leg carrying the right module action
  ModuleStruct left_mod;    // side must be Left
  ModuleStruct right_mod;   // side must be Right, same base
};

/// Quotient of A^⊗arity by a list of balancings.
struct BalancedTensorSpace {
  std::size_t arity = 0;
  std::size_t n = 0;  // dim A
  std::vector<Balancing> balancings;
  QuotientSpace q;

  std::size_t dim() const { return q.dim(); }
  const Mat& proj() const { return q.projection; }
  const Mat& sec() const { return q.section; }
};

/// Builds the balanced tensor quotient. Deterministic: relations are
/// enumerated balancing-by-balancing, base vector by base vector, ambient
/// basis index ascending.
BalancedTensorSpace btensor(const Algebra& a, std::size_t arity,
                            std::vector<Balancing> balancings);

/// f : A → A acting on one leg of A^⊗arity.
Mat leg_op(const Mat& f, std::size_t pos, std::size_t arity, std::size_t n);

/// Flip of a two-fold tensor: e_i ⊗ e_j ↦ e_j ⊗ e_i.
Mat flip_mat(std::size_t n);

/// f on legs (0, 2) of a three-fold tensor, f : n² → n².
Mat on_legs_13(const Mat& f, std::size_t n);

/// Non-degeneracy of the quotient as a one-sided module over A ⊗ 1 and
/// 1 ⊗ A (arity 2 only). `from_left` selects left multiplications (used
/// for the right-handed target), otherwise right multiplications.
/// Throws CheckError "DegenerateTensor" naming the offending side.
void check_A3(const BalancedTensorSpace& sp, const Algebra& a, bool from_left);

}  // namespace algd
