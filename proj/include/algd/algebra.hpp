#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "algd/linalg.hpp"

namespace algd {

/// Structured failure with a stable machine-readable code and a witness
/// (basis labels / indices pinpointing the first violation).
class CheckError : public std::runtime_error {
 public:
  CheckError(std::string code, std::string detail,
             std::vector<std::string> witness = {})
      : std::runtime_error(code + ": " + detail),
        code_(std::move(code)),
        witness_(std::move(witness)) {}
  const std::string& code() const { return code_; }
  const std::vector<std::string>& witness() const { return witness_; }

 private:
  std::string code_;
  std::vector<std::string> witness_;
};

/// Finite-dimensional associative algebra given by structure constants.
/// Not assumed unital; `unit` is present only when supplied and verified.
struct Algebra {
  Field field = Field::Q;
  LabeledSpace space;
  Mat mult;                // n × n², column i*n+j ↦ e_i · e_j
  std::vector<Mat> lmat;   // lmat[i] = left multiplication by e_i
  std::vector<Mat> rmat;   // rmat[j] = right multiplication by e_j
  std::optional<Vec> unit;

  std::size_t dim() const { return space.dim(); }
  Vec mul(const Vec& a, const Vec& b) const;
  Mat lmul(const Vec& a) const;  // left multiplication by a
  Mat rmul(const Vec& a) const;  // right multiplication by a
  Mat mult_op() const;           // column i*n+j ↦ e_j · e_i

  /// Same space, reversed multiplication.
  Algebra opposite() const;
};

/// Sparse structure-constant entry: e_i · e_j has coefficient c on e_k.
struct StructConst {
  std::size_t i, j, k;
  Scalar c;
};

/// Builds and validates an algebra. Throws CheckError:
///  - "EmptyAlgebra" for dimension 0,
///  - "NotAssociative" with witness (i, j, k, output index),
///  - "BadUnit" when a claimed unit fails e·a = a·e = a.
Algebra make_algebra(Field field, LabeledSpace space,
                     const std::vector<StructConst>& constants,
                     std::optional<Vec> unit = std::nullopt);

/// Idempotency (A·A = A) and left/right non-degeneracy of the
/// multiplication. Throws CheckError "NotIdempotent" / "Degenerate".
void check_A1(const Algebra& a);

/// Two-sided multiplier (λ, ρ): λ(x) = m·x, ρ(x) = x·m, subject to
/// x·λ(y) = ρ(x)·y and one-sided module compatibilities.
struct MultiplierPair {
  Mat l, r;

  MultiplierPair() = default;
  MultiplierPair(Mat lam, Mat rho) : l(std::move(lam)), r(std::move(rho)) {}
  static MultiplierPair identity(std::size_t n) {
    return {Mat::identity(n), Mat::identity(n)};
  }
  friend MultiplierPair operator*(const MultiplierPair& a,
                                  const MultiplierPair& b) {
    return {a.l * b.l, b.r * a.r};
  }
  friend MultiplierPair operator+(const MultiplierPair& a,
                                  const MultiplierPair& b) {
    return {a.l + b.l, a.r + b.r};
  }
};

/// Verifies that (l, r) is a genuine multiplier of a.
bool is_multiplier(const Algebra& a, const MultiplierPair& m);

/// Deterministic basis of the multiplier algebra M(A).
std::vector<MultiplierPair> multiplier_algebra(const Algebra& a);

/// The canonical map A → M(A); injective iff A is non-degenerate.
MultiplierPair multiplier_of(const Algebra& a, const Vec& v);

/// (Anti)homomorphism B → M(A) given on the base basis.
struct BaseEmbedding {
  Algebra base;
  bool anti = false;
  std::vector<MultiplierPair> img;

  MultiplierPair of(const Vec& x) const;
  Mat lam(std::size_t i) const { return img[i].l; }
  Mat rho(std::size_t i) const { return img[i].r; }
};

/// Validates multiplier property of each image and the (anti)morphism law
/// s(xy) = s(x)s(y), resp. t(xy) = t(y)t(x). Throws CheckError
/// "NotMultiplier" / "NotMorphism".
BaseEmbedding make_base_embedding(const Algebra& a, Algebra base,
                                  std::vector<MultiplierPair> img, bool anti);

/// Every λ-part of one embedding commutes with every ρ-part and λ-part of
/// the other, as needed for the bimodule structures to coexist.
bool embeddings_commute(const BaseEmbedding& s, const BaseEmbedding& t);

enum class ModSide { Left, Right };

/// The four module structures on A over a base copy inside M(A):
///   LeftBySource   x·a = s(x)a     (left module, uses λ of a hom)
///   RightByTarget  a·x = t(x)a     (right module, uses λ of an anti-hom)
///   RightBySource  a·x = a·s(x)    (right module, uses ρ of a hom)
///   LeftByTarget   x·a = a·t(x)    (left module, uses ρ of an anti-hom)
enum class ModType { LeftBySource, RightByTarget, RightBySource, LeftByTarget };

struct ModuleStruct {
  Algebra base;
  ModSide side = ModSide::Left;
  std::size_t carrier_dim = 0;
  std::vector<Mat> act;  // action of each base basis vector
};

/// Builds one of the four standard module structures and verifies the
/// module law. Throws CheckError "NotModule" / "WrongVariance".
ModuleStruct module_from_embedding(const Algebra& a, const BaseEmbedding& e,
                                   ModType type);

/// Faithfulness (x acting by zero forces x = 0) and idempotency
/// (base · carrier spans the carrier). Throws CheckError
/// "ModuleNotFaithful" / "ModuleNotIdempotent".
void check_A2(const ModuleStruct& m);

}  // namespace algd
