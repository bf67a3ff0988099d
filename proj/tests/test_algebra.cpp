#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algd/algebra.hpp"

using namespace algd;

namespace {

Scalar one() { return Scalar(1); }

// functions on k points, pointwise multiplication
Algebra points(std::size_t k) {
  std::vector<StructConst> sc;
  LabeledSpace sp;
  Vec unit(k);
  for (std::size_t i = 0; i < k; ++i) {
    sc.push_back({i, i, i, one()});
    sp.labels.push_back("d" + std::to_string(i));
    unit[i] = one();
  }
  return make_algebra(Field::Q, sp, sc, unit);
}

// group algebra of Z/2: basis u (unit), g with g^2 = u
Algebra z2_group_algebra() {
  std::vector<StructConst> sc = {
      {0, 0, 0, one()}, {0, 1, 1, one()}, {1, 0, 1, one()}, {1, 1, 0, one()}};
  return make_algebra(Field::Q, LabeledSpace{{"u", "g"}}, sc,
                      Vec{one(), Scalar(0)});
}

// 2x2 matrix units e11, e12, e21, e22
Algebra mat2() {
  auto idx = [](std::size_t a, std::size_t b) { return 2 * a + b; };
  std::vector<StructConst> sc;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        sc.push_back({idx(a, b), idx(b, c), idx(a, c), one()});
  Vec unit(4);
  unit[idx(0, 0)] = unit[idx(1, 1)] = one();
  return make_algebra(Field::Q, LabeledSpace{{"e11", "e12", "e21", "e22"}}, sc,
                      unit);
}

}  // namespace

TEST_CASE("algebra construction validates associativity and units") {
  Algebra a = z2_group_algebra();
  CHECK(a.mul(unit_vec(2, 1), unit_vec(2, 1)) == unit_vec(2, 0));
  CHECK(a.lmul(unit_vec(2, 1)) == a.rmul(unit_vec(2, 1)));  // commutative

  // e0 e0 = e1, everything else zero: (e0 e0) e0 = e1 e0 = 0 but
  // e0 (e0 e0) = e0 e1 = 0 — fine; make it fail with e0 e1 = e0:
  std::vector<StructConst> bad = {{0, 0, 1, one()}, {0, 1, 0, one()}};
  // (e0 e0) e1 = e1 e1 = 0, e0 (e0 e1) = e0 e0 = e1: not associative
  CHECK_THROWS_AS(
      make_algebra(Field::Q, LabeledSpace{{"x", "y"}}, bad, std::nullopt),
      CheckError);

  CHECK_THROWS_AS(make_algebra(Field::Q, LabeledSpace{}, {}, std::nullopt),
                  CheckError);

  std::vector<StructConst> pt = {{0, 0, 0, one()}};
  CHECK_THROWS_AS(make_algebra(Field::Q, LabeledSpace{{"p"}}, pt,
                               Vec{Scalar(2)}),
                  CheckError);
}

TEST_CASE("idempotency and non-degeneracy of the multiplication") {
  CHECK_NOTHROW(check_A1(points(3)));
  CHECK_NOTHROW(check_A1(mat2()));
  // one-dimensional square-zero algebra: x^2 = 0
  Algebra nil = make_algebra(Field::Q, LabeledSpace{{"x"}}, {}, std::nullopt);
  CHECK_THROWS_AS(check_A1(nil), CheckError);
}

TEST_CASE("multiplier algebra of a unital algebra is the algebra itself") {
  for (const Algebra& a : {points(2), z2_group_algebra(), mat2()}) {
    auto basis = multiplier_algebra(a);
    CHECK(basis.size() == a.dim());
    for (const auto& m : basis) CHECK(is_multiplier(a, m));
    // the canonical image of every basis vector is a multiplier and lies in
    // the computed span
    std::size_t n = a.dim();
    RowReducer span(2 * n * n);
    auto flat = [n](const MultiplierPair& m) {
      Vec v(2 * n * n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
          v[j * n + i] = m.l.at(i, j);
          v[n * n + j * n + i] = m.r.at(i, j);
        }
      return v;
    };
    for (const auto& m : basis) span.insert(flat(m));
    for (std::size_t i = 0; i < n; ++i) {
      MultiplierPair mi = multiplier_of(a, unit_vec(n, i));
      CHECK(is_multiplier(a, mi));
      CHECK(span.contains(flat(mi)));
    }
  }
}

TEST_CASE("base embeddings and the four module structures") {
  Algebra a = points(2);
  std::vector<MultiplierPair> img = {multiplier_of(a, unit_vec(2, 0)),
                                     multiplier_of(a, unit_vec(2, 1))};
  BaseEmbedding s = make_base_embedding(a, a, img, false);
  BaseEmbedding t = make_base_embedding(a, a, img, true);  // commutative
  CHECK(embeddings_commute(s, t));

  for (auto type : {ModType::LeftBySource, ModType::RightBySource}) {
    ModuleStruct m = module_from_embedding(a, s, type);
    CHECK_NOTHROW(check_A2(m));
  }
  for (auto type : {ModType::RightByTarget, ModType::LeftByTarget}) {
    ModuleStruct m = module_from_embedding(a, t, type);
    CHECK_NOTHROW(check_A2(m));
  }
  CHECK_THROWS_AS(module_from_embedding(a, s, ModType::RightByTarget),
                  CheckError);

  // non-faithful module: base = functions on 2 points acting through the
  // first coordinate only on A = functions on 1 point
  Algebra pt = points(1);
  std::vector<MultiplierPair> proj_img = {multiplier_of(pt, unit_vec(1, 0)),
                                          MultiplierPair(Mat(1, 1), Mat(1, 1))};
  BaseEmbedding sp = make_base_embedding(pt, a, proj_img, false);
  ModuleStruct bad = module_from_embedding(pt, sp, ModType::LeftBySource);
  CHECK_THROWS_AS(check_A2(bad), CheckError);
}

TEST_CASE("anti-homomorphism validation catches a non-anti map") {
  Algebra a = mat2();
  // transpose is an anti-automorphism of mat2: e_ab ↦ e_ba
  std::vector<MultiplierPair> timg;
  auto idx = [](std::size_t p, std::size_t q) { return 2 * p + q; };
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t q = 0; q < 2; ++q) {
      (void)q;
    }
  for (std::size_t k = 0; k < 4; ++k) {
    std::size_t p = k / 2, q = k % 2;
    timg.push_back(multiplier_of(a, unit_vec(4, idx(q, p))));
  }
  CHECK_NOTHROW(make_base_embedding(a, a, timg, true));
  CHECK_THROWS_AS(make_base_embedding(a, a, timg, false), CheckError);
}
