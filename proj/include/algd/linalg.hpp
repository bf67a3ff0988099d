#pragma once

#include <string>
#include <vector>

#include "algd/matrix.hpp"

namespace algd {

/// A finite-dimensional space with distinct basis labels, used for witness
/// reporting and serialization.
struct LabeledSpace {
  std::vector<std::string> labels;

  std::size_t dim() const { return labels.size(); }

  static LabeledSpace numbered(std::size_t n, const std::string& prefix = "e");
  /// Labels of a tensor power: "a⊗b⊗c" over the factor labels.
  static LabeledSpace tensor(const LabeledSpace& a, const LabeledSpace& b);
};

/// Quotient of an ambient space by the row span of a relation list.
/// Basis of the quotient = ambient free columns of the reduced relations,
/// so `section` is a genuine right inverse of `projection` picking the
/// free-coordinate representative. Everything is deterministic: relations
/// are reduced with leftmost pivots in insertion order.
struct QuotientSpace {
  std::size_t ambient_dim = 0;
  LabeledSpace ambient;
  std::vector<Vec> relations;        // reduced relation rows (RREF)
  std::vector<std::size_t> pivots;   // pivot columns of `relations`
  std::vector<std::size_t> basis;    // free ambient columns = quotient basis
  Mat projection;                    // dim() x ambient_dim
  Mat section;                       // ambient_dim x dim()

  std::size_t dim() const { return basis.size(); }
  Vec project(const Vec& ambient_vec) const { return projection.apply(ambient_vec); }
  std::string basis_label(std::size_t k) const { return ambient.labels[basis[k]]; }
};

QuotientSpace make_quotient(LabeledSpace ambient, const std::vector<Vec>& relations);
QuotientSpace make_quotient(LabeledSpace ambient, RowReducer reduced);

struct DescendError {
  Vec relation;   // ambient relation whose image fails to vanish
  Vec image;      // its nonzero image in the codomain (quotient) coordinates
};

/// Pushes an ambient-level map through quotients on both sides:
/// returns proj_cod ∘ f ∘ sec_dom after verifying f maps every domain
/// relation into (the kernel of) the codomain projection. `cod_proj` may be
/// an identity when the codomain is not a quotient.
/// Throws std::domain_error with a witness summary when ill-defined.
Mat descend_map(const Mat& f, const QuotientSpace& dom, const Mat& cod_proj);
Mat descend_map(const Mat& f, const QuotientSpace& dom, const QuotientSpace& cod);

/// Checks that f (ambient-level) kills all relations of `dom` after the
/// codomain projection; returns a witness if not.
std::optional<DescendError> descent_obstruction(const Mat& f,
                                                const QuotientSpace& dom,
                                                const Mat& cod_proj);

/// Space of maps h : dom → cod with L_i ∘ h = h ∘ R_i for all constraint
/// pairs. Returned as a deterministic basis of matrices.
struct HomConstraint {
  Mat left;   // cod → cod
  Mat right;  // dom → dom
};
std::vector<Mat> hom_space(std::size_t dom_dim, std::size_t cod_dim,
                           const std::vector<HomConstraint>& constraints);

}  // namespace algd
