#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superw/skryabin.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace superw;

namespace {

struct Setup {
  LieSuperalgebra A;
  SL2Triple triple;
  ZGrading grading;
  NilpotentData nil;
};

Setup setup(Family family, int n) {
  LieSuperalgebra A = buildAlgebra(family, {n});
  SL2Triple triple = principalSl2(A);
  ZGrading grading = dynkinGrading(A, triple.h);
  NilpotentData nil = buildNilpotentData(A, grading, triple.e);
  return {std::move(A), std::move(triple), std::move(grading), std::move(nil)};
}

SuperVector named(const LieSuperalgebra& A, const std::string& label) {
  return SuperVector::basis(A.indexOf(label));
}

} // namespace

TEST_CASE("q(n) datum construction") {
  auto [A, triple, grading, nil] = setup(Family::Q, 2);
  auto datum = qnDatum(A);
  REQUIRE(datum.size() == 2);
  CHECK(datum.evenCount == 1);
  CHECK(datum.u[0] == named(A, "e_{12}"));
  CHECK(datum.u[1] == named(A, "f_{12}"));
  CHECK(datum.x[0] == named(A, "e_{22}"));
  CHECK(datum.x[1] == named(A, "f_{22}"));
  CHECK(datum.d == std::vector<int>{2, 2});

  auto [A3, t3, g3, n3] = setup(Family::Q, 3);
  auto d3 = qnDatum(A3);
  REQUIRE(d3.size() == 6);
  // u order: e_12, e_13, e_23, f_12, f_13, f_23
  CHECK(d3.x[0] == named(A3, "e_{22}") + named(A3, "e_{33}"));
  CHECK(d3.x[1] == named(A3, "e_{32}"));
  CHECK(d3.d[1] == 4);
  CHECK(*g3.degreeOf(d3.x[1]) == -2 + d3.d[1]);
  // alternating signs in the f-sums
  CHECK(d3.x[3] == named(A3, "f_{22}") - named(A3, "f_{33}"));
  for (int s = 0; s < d3.size(); ++s) {
    CHECK(*g3.degreeOf(d3.x[s]) == -2 + d3.d[s]);
  }
}

TEST_CASE("p(n) datum construction") {
  auto [A, triple, grading, nil] = setup(Family::P, 2);
  auto datum = pnDatum(A);
  REQUIRE(datum.size() == 2);
  CHECK(datum.u[0] == named(A, "e_{12}"));
  CHECK(datum.u[1] == named(A, "s_{11}"));
  CHECK(datum.x[0] == named(A, "e_{22}"));
  CHECK(datum.x[1] == named(A, "y_{12}"));
  CHECK(static_cast<int>(nil.mBasis.size()) == 2);

  auto [A3, t3, g3, n3] = setup(Family::P, 3);
  auto d3 = pnDatum(A3);
  CHECK(d3.size() == static_cast<int>(n3.mBasis.size()));
  // truncated sums: ov s_12 keeps only the k = 0 term
  const auto itS12 = std::find(d3.u.begin(), d3.u.end(), named(A3, "s_{12}"));
  REQUIRE(itS12 != d3.u.end());
  CHECK(d3.x[static_cast<std::size_t>(itS12 - d3.u.begin())] == named(A3, "y_{13}"));

  auto [A4, t4, g4, n4] = setup(Family::P, 4);
  auto d4 = pnDatum(A4);
  const auto itY24 = std::find(d4.u.begin(), d4.u.end(), named(A4, "y_{24}"));
  REQUIRE(itY24 != d4.u.end());
  CHECK(d4.x[static_cast<std::size_t>(itY24 - d4.u.begin())] == named(A4, "s_{23}"));
}

TEST_CASE("hypotheses hold for the constructed data") {
  for (int n = 2; n <= 5; ++n) {
    {
      auto [A, triple, grading, nil] = setup(Family::Q, n);
      auto report = checkConditions(A, grading, nil, qnDatum(A));
      CHECK(report.pass());
      CHECK(report.checks.size() == 3);
    }
    {
      auto [A, triple, grading, nil] = setup(Family::P, n);
      auto report = checkConditions(A, grading, nil, pnDatum(A));
      CHECK(report.pass());
    }
  }
}

TEST_CASE("dropped sum tails are detected") {
  {
    auto [A, triple, grading, nil] = setup(Family::Q, 3);
    auto datum = qnDatum(A);
    REQUIRE(datum.u[0] == named(A, "e_{12}"));
    datum.x[0] = named(A, "e_{22}"); // k = 0 term only
    auto report = checkConditions(A, grading, nil, datum);
    CHECK_FALSE(report.pass());
    REQUIRE(report.checks[2].name == "cross-brackets-value-zero");
    CHECK_FALSE(report.checks[2].pass);
    CHECK_FALSE(report.checks[2].witnesses.empty());
  }
  {
    auto [A, triple, grading, nil] = setup(Family::P, 3);
    auto datum = pnDatum(A);
    REQUIRE(datum.u[0] == named(A, "e_{12}"));
    datum.x[0] = named(A, "e_{22}");
    auto report = checkConditions(A, grading, nil, datum);
    CHECK_FALSE(report.pass());
    CHECK_FALSE(report.checks[2].witnesses.empty());
  }
}

TEST_CASE("hypothesis checks are invariant under permuting the pairs") {
  auto [A, triple, grading, nil] = setup(Family::Q, 3);
  auto datum = qnDatum(A);
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 5; ++trial) {
    // permute within each parity block to keep the even-first shape
    SkryabinDatum shuffled = datum;
    std::vector<int> perm(static_cast<std::size_t>(datum.size()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.begin() + datum.evenCount, rng);
    std::shuffle(perm.begin() + datum.evenCount, perm.end(), rng);
    for (int i = 0; i < datum.size(); ++i) {
      shuffled.u[static_cast<std::size_t>(i)] = datum.u[static_cast<std::size_t>(perm[i])];
      shuffled.x[static_cast<std::size_t>(i)] = datum.x[static_cast<std::size_t>(perm[i])];
      shuffled.d[static_cast<std::size_t>(i)] = datum.d[static_cast<std::size_t>(perm[i])];
    }
    CHECK(checkConditions(A, grading, nil, shuffled).pass());
  }
}

TEST_CASE("p(n) zeta bracket tables") {
  for (int n = 2; n <= 6; ++n) {
    auto report = checkPnZetaTables(buildAlgebra(Family::P, {n}));
    CHECK(report.pass());
    for (const auto& check : report.checks) {
      CHECK(check.witnesses.empty());
    }
  }

  // spot values behind the table
  auto [A, triple, grading, nil] = setup(Family::P, 4);
  auto zeta = [&](const SuperVector& v) { return nil.zeta.evaluate(v); };
  CHECK(zeta(A.bracket(named(A, "s_{13}"), named(A, "y_{14}"))) == 1);
  CHECK(zeta(A.bracket(named(A, "s_{13}"), named(A, "y_{23}"))) == -1);
  // ov s_13 = y_14; shifted partner s_22 pairs to zero
  CHECK(zeta(A.bracket(named(A, "s_{22}"), named(A, "y_{14}"))) == 0);
  // linearity of the evaluation
  auto sum = named(A, "y_{14}") + named(A, "y_{23}") * Rational(3);
  CHECK(zeta(A.bracket(named(A, "s_{13}"), sum)) ==
        zeta(A.bracket(named(A, "s_{13}"), named(A, "y_{14}"))) +
            3 * zeta(A.bracket(named(A, "s_{13}"), named(A, "y_{23}"))));
}

TEST_CASE("theorem conclusions by reduction in Q_zeta") {
  {
    auto [A, triple, grading, nil] = setup(Family::Q, 2);
    auto datum = qnDatum(A);
    auto report = verifyConclusions(A, grading, nil, datum, 6);
    CHECK(report.pass());
    REQUIRE(report.checks[0].name == "diagonal-scalar");
    auto find = [&](const std::vector<int>& indices) {
      for (const auto& w : report.checks[0].witnesses) {
        if (w.indices == indices) return w.computed;
      }
      return std::string("missing");
    };
    CHECK(find({1, 0, 1, 0}) == "1"); // (e_12 - 1) e_22 = 1 in Q_zeta
    CHECK(find({0, 1, 0, 1}) == "1"); // f_12 f_22 = [f_12, f_22] = e_12
  }
  for (int n : {2, 3}) {
    auto [A, triple, grading, nil] = setup(Family::P, n);
    auto report = verifyConclusions(A, grading, nil, pnDatum(A), 6);
    CHECK(report.pass());
  }
}

TEST_CASE("images of the x-monomials are independent") {
  {
    auto [A, triple, grading, nil] = setup(Family::Q, 2);
    CHECK(checkFreeness(A, grading, nil, qnDatum(A), 6).pass());
  }
  {
    auto [A, triple, grading, nil] = setup(Family::P, 2);
    CHECK(checkFreeness(A, grading, nil, pnDatum(A), 6).pass());

    // duplicated generators give a rank-deficient family
    SkryabinDatum degenerate;
    degenerate.u = {named(A, "e_{12}"), named(A, "e_{12}")};
    degenerate.x = {named(A, "e_{22}"), named(A, "e_{22}")};
    degenerate.d = {2, 2};
    degenerate.evenCount = 2;
    CHECK_FALSE(checkFreeness(A, grading, nil, degenerate, 6).pass());
  }
}

TEST_CASE("report serialization") {
  auto [A, triple, grading, nil] = setup(Family::Q, 2);
  auto report = checkConditions(A, grading, nil, qnDatum(A));
  const std::string json = report.toJson();
  CHECK(json.find("\"check\"") != std::string::npos);
  CHECK(json.find("\"status\":\"pass\"") != std::string::npos);
}
