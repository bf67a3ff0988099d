#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algd/btensor.hpp"

using namespace algd;

namespace {

Scalar one() { return Scalar(1); }

// functions on the arrow set of the pair groupoid on {0,1}; arrow (u,v)
// runs v → u, index 2u + v
struct PairFn {
  Algebra a;       // functions on 4 arrows
  Algebra b;       // functions on 2 objects
  BaseEmbedding s; // source indicator
  BaseEmbedding t; // target indicator
};

PairFn make_pairfn() {
  std::vector<StructConst> sc;
  Vec unit(4);
  for (std::size_t i = 0; i < 4; ++i) {
    sc.push_back({i, i, i, one()});
    unit[i] = one();
  }
  Algebra a = make_algebra(Field::Q, LabeledSpace{{"a00", "a01", "a10", "a11"}},
                           sc, unit);
  std::vector<StructConst> scb = {{0, 0, 0, one()}, {1, 1, 1, one()}};
  Algebra b = make_algebra(Field::Q, LabeledSpace{{"p0", "p1"}}, scb,
                           Vec{one(), one()});
  std::vector<MultiplierPair> simg, timg;
  for (std::size_t obj = 0; obj < 2; ++obj) {
    Vec src(4), tgt(4);
    for (std::size_t u = 0; u < 2; ++u)
      for (std::size_t v = 0; v < 2; ++v) {
        if (v == obj) src[2 * u + v] = one();
        if (u == obj) tgt[2 * u + v] = one();
      }
    simg.push_back(multiplier_of(a, src));
    timg.push_back(multiplier_of(a, tgt));
  }
  BaseEmbedding s = make_base_embedding(a, b, simg, false);
  BaseEmbedding t = make_base_embedding(a, b, timg, true);
  return {a, b, s, t};
}

}  // namespace

TEST_CASE("leg operators, flips and the (1,3) conjugation") {
  Mat f(2, 2);
  f.at(0, 1) = one();  // e1 ↦ e0
  Mat l0 = leg_op(f, 0, 2, 2);
  Mat l1 = leg_op(f, 1, 2, 2);
  CHECK(l0 == kron(f, Mat::identity(2)));
  CHECK(l1 == kron(Mat::identity(2), f));
  Mat fl = flip_mat(2);
  CHECK(fl * fl == Mat::identity(4));
  CHECK(fl * l0 * fl == l1);

  // on legs (1,3): flipping legs 2,3 conjugates a legs-(1,2) operator
  Mat g = kron(f, f);
  Mat g13 = on_legs_13(g, 2);
  CHECK(g13 == leg_op(f, 0, 3, 2) * leg_op(f, 2, 3, 2));
}

TEST_CASE("source-target balanced square of a pair groupoid has dim 8") {
  PairFn p = make_pairfn();
  ModuleStruct left = module_from_embedding(p.a, p.s, ModType::LeftBySource);
  ModuleStruct right = module_from_embedding(p.a, p.t, ModType::RightByTarget);
  BalancedTensorSpace sp = btensor(p.a, 2, {{0, 1, left, right}});
  // basis classes are δ_γ ⊗ δ_c with source(γ) = target(c): 8 of them
  CHECK(sp.dim() == 8);
  for (const auto& r : sp.q.relations) CHECK(is_zero(sp.q.project(r)));
  // δ_(0,1) ⊗ δ_(0,0) is killed: source(γ) = 1 ≠ 0 = target(c)
  Vec v(16);
  v[1 * 4 + 0] = one();
  CHECK(is_zero(sp.q.project(v)));
  // δ_(0,1) ⊗ δ_(1,0) survives: source(γ) = 1 = target(c)
  Vec w(16);
  w[1 * 4 + 2] = one();
  CHECK(!is_zero(sp.q.project(w)));
  CHECK_NOTHROW(check_A3(sp, p.a, false));
}

TEST_CASE("triple balancing stacks two conditions") {
  PairFn p = make_pairfn();
  ModuleStruct left = module_from_embedding(p.a, p.s, ModType::LeftBySource);
  ModuleStruct right = module_from_embedding(p.a, p.t, ModType::RightByTarget);
  BalancedTensorSpace sp =
      btensor(p.a, 3, {{0, 1, left, right}, {1, 2, left, right}});
  // composable triples: 4 arrows, each extendable by 2 on each side: 16
  CHECK(sp.dim() == 16);
}

TEST_CASE("non-degeneracy check fails on a square-zero algebra") {
  Algebra nil = make_algebra(Field::Q, LabeledSpace{{"x"}}, {}, std::nullopt);
  BalancedTensorSpace sp = btensor(nil, 2, {});
  CHECK(sp.dim() == 1);
  CHECK_THROWS_AS(check_A3(sp, nil, false), CheckError);
  CHECK_THROWS_AS(check_A3(sp, nil, true), CheckError);
}

TEST_CASE("balancing validation rejects mismatched data") {
  PairFn p = make_pairfn();
  ModuleStruct left = module_from_embedding(p.a, p.s, ModType::LeftBySource);
  ModuleStruct right = module_from_embedding(p.a, p.t, ModType::RightByTarget);
  CHECK_THROWS_AS(btensor(p.a, 2, {{0, 0, left, right}}), CheckError);
  CHECK_THROWS_AS(btensor(p.a, 2, {{0, 1, left, left}}), CheckError);
}
