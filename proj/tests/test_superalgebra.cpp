#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superw/superalgebra.hpp"

using namespace superw;

namespace {

SuperVector basisOf(const LieSuperalgebra& alg, const std::string& label) {
  return SuperVector::basis(alg.indexOf(label));
}

} // namespace

TEST_CASE("family dimensions and parities") {
  auto gl11 = buildAlgebra(Family::GL, {1, 1});
  REQUIRE(gl11.dim() == 4);
  CHECK(gl11.parity(gl11.indexOf("E_{11}")) == Parity::Even);
  CHECK(gl11.parity(gl11.indexOf("E_{12}")) == Parity::Odd);
  CHECK(gl11.parity(gl11.indexOf("E_{21}")) == Parity::Odd);
  CHECK(gl11.parity(gl11.indexOf("E_{22}")) == Parity::Even);

  auto gl32 = buildAlgebra(Family::GL, {3, 2});
  CHECK(gl32.dim() == 25);

  auto p2 = buildAlgebra(Family::P, {2});
  REQUIRE(p2.dim() == 8);
  int oddCount = 0;
  for (int i = 0; i < p2.dim(); ++i) {
    if (p2.parity(i) == Parity::Odd) ++oddCount;
  }
  CHECK(oddCount == 4);
  for (const char* label : {"s_{11}", "s_{12}", "s_{22}", "y_{12}"}) {
    CHECK(p2.parity(p2.indexOf(label)) == Parity::Odd);
  }

  auto q3 = buildAlgebra(Family::Q, {3});
  CHECK(q3.dim() == 18);

  auto osp12 = buildAlgebra(Family::OSP12, {});
  REQUIRE(osp12.dim() == 5);
  for (const char* label : {"e", "f", "h", "E", "F"}) {
    CHECK_NOTHROW(osp12.indexOf(label));
  }

  auto osp22 = buildAlgebra(Family::OSP22, {});
  CHECK(osp22.dim() == 8);

  CHECK_THROWS_AS(buildAlgebra(Family::P, {0}), std::invalid_argument);
  CHECK_THROWS_AS(buildAlgebra(Family::GL, {2}), std::invalid_argument);
  CHECK_THROWS_AS(buildAlgebra(Family::OSP12, {1}), std::invalid_argument);
}

TEST_CASE("named bracket values") {
  auto gl12 = buildAlgebra(Family::GL, {1, 2});
  // indices in the odd block, so both elements are even
  auto b = gl12.bracket(basisOf(gl12, "E_{23}"), basisOf(gl12, "E_{32}"));
  CHECK(b == (basisOf(gl12, "E_{22}") - basisOf(gl12, "E_{33}")));
  // odd-odd pair: anticommutator
  b = gl12.bracket(basisOf(gl12, "E_{12}"), basisOf(gl12, "E_{21}"));
  CHECK(b == (basisOf(gl12, "E_{11}") + basisOf(gl12, "E_{22}")));

  auto p2 = buildAlgebra(Family::P, {2});
  b = p2.bracket(basisOf(p2, "s_{11}"), basisOf(p2, "y_{12}"));
  CHECK(b == basisOf(p2, "e_{12}"));
}

TEST_CASE("structure table matches matrix supercommutators") {
  for (auto alg : {buildAlgebra(Family::GL, {1, 2}), buildAlgebra(Family::Q, {3}),
                   buildAlgebra(Family::P, {3}), buildAlgebra(Family::OSP12, {}),
                   buildAlgebra(Family::OSP22, {})}) {
    CHECK(alg.checkStructureAgainstMatrices());
  }
}

TEST_CASE("super anticommutativity on all basis pairs") {
  for (auto alg : {buildAlgebra(Family::P, {3}), buildAlgebra(Family::Q, {2}),
                   buildAlgebra(Family::OSP22, {})}) {
    for (int i = 0; i < alg.dim(); ++i) {
      for (int j = 0; j < alg.dim(); ++j) {
        // [x,y] + (-1)^{|x||y|}[y,x] = 0
        const int sign = (alg.parityBitOf(i) && alg.parityBitOf(j)) ? -1 : 1;
        auto lhs = alg.bracket(SuperVector::basis(i), SuperVector::basis(j));
        auto rhs = alg.bracket(SuperVector::basis(j), SuperVector::basis(i));
        CHECK((lhs + rhs * Rational(sign)).isZero());
      }
    }
  }
}

TEST_CASE("jacobi identity holds and perturbation is detected") {
  auto q4 = buildAlgebra(Family::Q, {4});
  auto report = q4.checkJacobi();
  CHECK(report.pass);
  CHECK(report.checkedTriples == 32L * 32 * 32);

  auto p4 = buildAlgebra(Family::P, {4});
  CHECK(p4.checkJacobi().pass);

  auto broken = buildAlgebra(Family::P, {2});
  broken.perturbStructureConstant(0, 1, 2, 1);
  auto bad = broken.checkJacobi();
  CHECK_FALSE(bad.pass);
  CHECK(bad.i >= 0);
  CHECK_FALSE(bad.residual.isZero());
}

TEST_CASE("bilinear form values") {
  auto osp12 = buildAlgebra(Family::OSP12, {});
  auto h = basisOf(osp12, "h");
  CHECK(osp12.bilinearForm(BilinearFormKind::NegSupertrace, h, h) == Rational(2));

  auto gl11 = buildAlgebra(Family::GL, {1, 1});
  auto e11 = basisOf(gl11, "E_{11}");
  auto e22 = basisOf(gl11, "E_{22}");
  CHECK(gl11.bilinearForm(BilinearFormKind::Supertrace, e11, e11) == Rational(1));
  CHECK(gl11.bilinearForm(BilinearFormKind::Supertrace, e22, e22) == Rational(-1));

  auto p2 = buildAlgebra(Family::P, {2});
  CHECK(p2.bilinearForm(BilinearFormKind::EvenTrace, basisOf(p2, "e_{12}"),
                        basisOf(p2, "e_{21}")) == Rational(2));
  // odd arguments are zero by definition for the even-trace form
  CHECK(p2.bilinearForm(BilinearFormKind::EvenTrace, basisOf(p2, "s_{11}"),
                        basisOf(p2, "y_{12}")) == Rational(0));

  CHECK_THROWS_AS(p2.bilinearForm(BilinearFormKind::Supertrace, basisOf(p2, "e_{11}"),
                                  basisOf(p2, "e_{11}")),
                  std::invalid_argument);
}

TEST_CASE("form invariance on basis triples") {
  for (auto alg : {buildAlgebra(Family::GL, {1, 2}), buildAlgebra(Family::P, {2}),
                   buildAlgebra(Family::Q, {2}), buildAlgebra(Family::OSP12, {}),
                   buildAlgebra(Family::OSP22, {})}) {
    const BilinearFormKind kind = alg.designatedForm();
    // the even-trace form is a form on the even part only; its invariance is
    // that of the trace form of gl(n), so odd elements stay out of the triple
    const bool evenOnly = kind == BilinearFormKind::EvenTrace;
    for (int i = 0; i < alg.dim(); ++i) {
      if (evenOnly && alg.parity(i) == Parity::Odd) continue;
      for (int j = 0; j < alg.dim(); ++j) {
        if (evenOnly && alg.parity(j) == Parity::Odd) continue;
        for (int k = 0; k < alg.dim(); ++k) {
          if (evenOnly && alg.parity(k) == Parity::Odd) continue;
          auto x = SuperVector::basis(i), y = SuperVector::basis(j), z = SuperVector::basis(k);
          CHECK(alg.bilinearForm(kind, alg.bracket(x, y), z) ==
                alg.bilinearForm(kind, x, alg.bracket(y, z)));
        }
      }
    }
  }
}

TEST_CASE("json serialization shape") {
  auto gl11 = buildAlgebra(Family::GL, {1, 1});
  const std::string doc = gl11.toJson();
  CHECK(doc.find("\"family\":\"gl\"") != std::string::npos);
  CHECK(doc.find("\"dim\":4") != std::string::npos);
  CHECK(doc.find("E_{12}") != std::string::npos);
  CHECK(doc.find("\"odd\"") != std::string::npos);
}
