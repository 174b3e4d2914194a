#include "superw/skryabin.hpp"

#include "superw/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace superw {

namespace {

std::string pairLabel(const std::string& prefix, int a, int b) {
  std::ostringstream out;
  out << prefix << "_{" << a << b << "}";
  return out.str();
}

SuperVector basisElem(const LieSuperalgebra& A, const std::string& prefix, int a, int b) {
  return SuperVector::basis(A.indexOf(pairLabel(prefix, a, b)));
}

std::string describeVector(const LieSuperalgebra& A, const SuperVector& v) {
  if (v.isZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [idx, c] : v.terms()) {
    if (!first) out << " + ";
    out << rationalToString(c) << "*" << A.label(idx);
    first = false;
  }
  return out.str();
}

bool inSubset(const SuperVector& v, const std::set<int>& allowed) {
  for (const auto& [idx, c] : v.terms()) {
    if (!allowed.count(idx)) return false;
  }
  return true;
}

// nonzero and every term of the given degree
bool homogeneousOfDegree(const ZGrading& grading, const SuperVector& v, int degree) {
  if (v.isZero()) return false;
  for (const auto& [idx, c] : v.terms()) {
    if (grading.degree(idx) != degree) return false;
  }
  return true;
}

bool allEven(const LieSuperalgebra& A, const SuperVector& v) {
  for (const auto& [idx, c] : v.terms()) {
    if (A.parityBitOf(idx)) return false;
  }
  return true;
}

void validateDatum(const LieSuperalgebra& A, const ZGrading& grading,
                   const SkryabinDatum& datum) {
  const std::size_t m = datum.u.size();
  if (datum.x.size() != m || datum.d.size() != m) {
    throw std::invalid_argument("datum lists must have equal length");
  }
  if (datum.evenCount < 0 || datum.evenCount > static_cast<int>(m)) {
    throw std::invalid_argument("even count out of range");
  }
  for (std::size_t s = 0; s < m; ++s) {
    if (datum.d[s] <= 0) throw std::invalid_argument("degree offsets must be positive");
    const bool shouldBeEven = static_cast<int>(s) < datum.evenCount;
    for (const SuperVector* v : {&datum.u[s], &datum.x[s]}) {
      if (v->isZero()) throw std::invalid_argument("datum entries must be non-zero");
      for (const auto& [idx, c] : v->terms()) {
        if ((A.parityBitOf(idx) == 0) != shouldBeEven) {
          throw std::invalid_argument("datum entry parity inconsistent with its slot");
        }
      }
    }
    if (!homogeneousOfDegree(grading, datum.x[s], -2 + datum.d[s])) {
      throw std::invalid_argument("x entries must be homogeneous of degree -2 + d");
    }
  }
}


int wtOf(const SkryabinDatum& datum, const std::vector<int>& a) {
  int w = 0;
  for (std::size_t s = 0; s < a.size(); ++s) w += datum.d[s] * a[s];
  return w;
}

int normOf(const std::vector<int>& a) {
  int n = 0;
  for (int v : a) n += v;
  return n;
}

// single scalar when the element is c*1; nullopt otherwise
std::optional<Rational> asScalar(const UEAElement& u) {
  if (u.isZero()) return Rational(0);
  if (u.terms().size() != 1) return std::nullopt;
  const auto& [mon, c] = *u.terms().begin();
  if (!mon.empty()) return std::nullopt;
  return c;
}

} // namespace

bool SkryabinReport::pass() const {
  for (const auto& check : checks) {
    if (!check.pass) return false;
  }
  return true;
}

std::string SkryabinReport::toJson() const {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& check : checks) {
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
    for (const auto& w : check.witnesses) {
      witnesses.push_back({{"indices", w.indices}, {"expected", w.expected},
                           {"computed", w.computed}});
    }
    doc.push_back({{"check", check.name}, {"status", check.pass ? "pass" : "fail"},
                   {"witnesses", witnesses}});
  }
  return doc.dump();
}

SkryabinDatum qnDatum(const LieSuperalgebra& A) {
  if (A.family() != Family::Q) throw std::invalid_argument("expected a q(n) algebra");
  const int n = A.params().at(0);
  if (n < 2) throw std::invalid_argument("need n >= 2");

  SkryabinDatum datum;
  for (int pass = 0; pass < 2; ++pass) {
    const std::string prefix = pass == 0 ? "e" : "f";
    for (int a = 1; a < n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        datum.u.push_back(basisElem(A, prefix, a, b));
        SuperVector x;
        for (int k = 0; b + k <= n && a + k + 1 <= n; ++k) {
          const Rational sign = (pass == 1 && k % 2 == 1) ? -1 : 1;
          x.add(A.indexOf(pairLabel(prefix, b + k, a + k + 1)), sign);
        }
        datum.x.push_back(x);
        datum.d.push_back(2 * (b - a)); // x is homogeneous of degree 2(b-a) - 2
      }
    }
    if (pass == 0) datum.evenCount = datum.size();
  }
  return datum;
}

SkryabinDatum pnDatum(const LieSuperalgebra& A) {
  if (A.family() != Family::P) throw std::invalid_argument("expected a p(n) algebra");
  const int n = A.params().at(0);
  if (n < 2) throw std::invalid_argument("need n >= 2");

  SkryabinDatum datum;
  // even part: e_ab of negative degree 2(a-b), i.e. a < b
  for (int a = 1; a < n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      datum.u.push_back(basisElem(A, "e", a, b));
      SuperVector x;
      for (int k = 0; b + k <= n && a + k + 1 <= n; ++k) {
        x.add(A.indexOf(pairLabel("e", b + k, a + k + 1)), 1);
      }
      datum.x.push_back(x);
      datum.d.push_back(2 * (b - a));
    }
  }
  datum.evenCount = datum.size();
  // odd part: s_ab with deg = 2(a+b) - 2n - 2 < 0 and y_cd with deg > 0 negated
  for (int a = 1; a <= n; ++a) {
    for (int b = a; b <= n; ++b) {
      if (2 * (a + b) - 2 * n - 2 >= 0) continue;
      datum.u.push_back(basisElem(A, "s", a, b));
      SuperVector x;
      for (int k = 0; a - k >= 1 && b + k + 1 <= n; ++k) {
        x.add(A.indexOf(pairLabel("y", a - k, b + k + 1)), 1);
      }
      datum.x.push_back(x);
      datum.d.push_back(2 * n - 2 * (a + b) + 2); // deg ov s_ab = 2n - 2(a+b)
    }
  }
  for (int c = 1; c < n; ++c) {
    for (int d = c + 1; d <= n; ++d) {
      if (2 * n + 2 - 2 * (c + d) >= 0) continue;
      datum.u.push_back(basisElem(A, "y", c, d));
      SuperVector x;
      for (int k = 0; c + k <= d - k - 1; ++k) {
        x.add(A.indexOf(pairLabel("s", c + k, d - k - 1)), 1);
      }
      datum.x.push_back(x);
      datum.d.push_back(2 * (c + d) - 2 * n - 2); // deg ov y_cd = 2(c+d) - 2n - 4
    }
  }
  return datum;
}

SkryabinReport checkConditions(const LieSuperalgebra& A, const ZGrading& grading,
                               const NilpotentData& nil, const SkryabinDatum& datum) {
  validateDatum(A, grading, datum);
  const std::set<int> mSet(nil.mBasis.begin(), nil.mBasis.end());
  const int m = datum.size();
  SkryabinReport report;

  SkryabinReport::Check basisCheck{"u-spans-m", true, {}};
  bool contained = true;
  for (int i = 0; i < m; ++i) {
    if (!inSubset(datum.u[i], mSet)) {
      contained = false;
      basisCheck.pass = false;
      basisCheck.witnesses.push_back(
          {{i + 1}, "element of m", describeVector(A, datum.u[i])});
    }
  }
  if (contained) {
    RatMatrix mat = RatMatrix::Zero(m, A.dim());
    for (int i = 0; i < m; ++i) {
      for (const auto& [idx, c] : datum.u[i].terms()) mat(i, idx) = c;
    }
    const auto r = rank(mat);
    if (r != static_cast<Eigen::Index>(nil.mBasis.size()) || m != static_cast<int>(nil.mBasis.size())) {
      basisCheck.pass = false;
      basisCheck.witnesses.push_back({{}, "rank " + std::to_string(nil.mBasis.size()),
                                      "rank " + std::to_string(r) + " from " +
                                          std::to_string(m) + " elements"});
    }
  }
  report.checks.push_back(std::move(basisCheck));

  SkryabinReport::Check diag{"paired-brackets-value-one", true, {}};
  for (int i = 0; i < m; ++i) {
    const SuperVector br = A.bracket(datum.u[i], datum.x[i]);
    if (!homogeneousOfDegree(grading, br, -2) || !allEven(A, br)) {
      diag.pass = false;
      diag.witnesses.push_back(
          {{i + 1, i + 1}, "even element of g(-2)", describeVector(A, br)});
      continue;
    }
    const Rational value = nil.zeta.evaluate(br);
    if (value != 1) {
      diag.pass = false;
      diag.witnesses.push_back({{i + 1, i + 1}, "1", rationalToString(value)});
    }
  }
  report.checks.push_back(std::move(diag));

  SkryabinReport::Check offDiag{"cross-brackets-value-zero", true, {}};
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const SuperVector br = A.bracket(datum.u[i], datum.x[j]);
      if (br.isZero() || !homogeneousOfDegree(grading, br, -2)) continue;
      const Rational value = nil.zeta.evaluate(br);
      if (value != 0) {
        offDiag.pass = false;
        offDiag.witnesses.push_back({{i + 1, j + 1}, "0", rationalToString(value)});
      }
    }
  }
  report.checks.push_back(std::move(offDiag));
  return report;
}

SkryabinReport checkPnZetaTables(const LieSuperalgebra& A) {
  if (A.family() != Family::P) throw std::invalid_argument("expected a p(n) algebra");
  const int n = A.params().at(0);
  const auto triple = principalSl2(A);
  const auto grading = dynkinGrading(A, triple.h);
  const auto nil = buildNilpotentData(A, grading, triple.e);
  const std::set<int> mSet(nil.mBasis.begin(), nil.mBasis.end());

  SkryabinReport report;
  SkryabinReport::Check table{"pairing-table", true, {}};
  for (int a = 1; a <= n; ++a) {
    for (int b = a; b <= n; ++b) {
      for (int c = 1; c < n; ++c) {
        for (int d = c + 1; d <= n; ++d) {
          const SuperVector br =
              A.bracket(basisElem(A, "s", a, b), basisElem(A, "y", c, d));
          if (!inSubset(br, mSet)) continue;
          const Rational expected =
              (c == a && d == b + 1) ? 1 : (c == a + 1 && d == b) ? -1 : 0;
          const Rational value = nil.zeta.evaluate(br);
          if (value != expected) {
            table.pass = false;
            table.witnesses.push_back(
                {{a, b, c, d}, rationalToString(expected), rationalToString(value)});
          }
        }
      }
    }
  }
  report.checks.push_back(std::move(table));

  auto ovS = [&](int a, int b) {
    SuperVector x;
    for (int k = 0; a - k >= 1 && b + k + 1 <= n; ++k) {
      x.add(A.indexOf(pairLabel("y", a - k, b + k + 1)), 1);
    }
    return x;
  };
  auto ovY = [&](int c, int d) {
    SuperVector x;
    for (int k = 0; c + k <= d - k - 1; ++k) {
      x.add(A.indexOf(pairLabel("s", c + k, d - k - 1)), 1);
    }
    return x;
  };
  auto record = [](SkryabinReport::Check& check, std::vector<int> indices,
                   const Rational& expected, const Rational& value) {
    if (value != expected) {
      check.pass = false;
      check.witnesses.push_back(
          {std::move(indices), rationalToString(expected), rationalToString(value)});
    }
  };

  // the identities hold on the negative-degree range used by the pairing
  // construction; outside it the truncated sums lose boundary terms
  SkryabinReport::Check ov{"ov-identities", true, {}};
  for (int a = 1; a <= n; ++a) {
    for (int b = a; b <= n; ++b) {
      if (a + b > n) continue; // s_ab has degree 2(a+b) - 2n - 2 >= 0
      const SuperVector bar = ovS(a, b);
      record(ov, {a, b, 0}, 1,
             nil.zeta.evaluate(A.bracket(basisElem(A, "s", a, b), bar)));
      for (int l = -n; l <= n; ++l) {
        if (l == 0 || a + l < 1 || a + l > b - l || b - l > n) continue;
        record(ov, {a, b, l}, 0,
               nil.zeta.evaluate(A.bracket(basisElem(A, "s", a + l, b - l), bar)));
      }
    }
  }
  for (int c = 1; c < n; ++c) {
    for (int d = c + 1; d <= n; ++d) {
      if (c + d < n + 2) continue; // y_cd has degree 2n + 2 - 2(c+d) >= 0
      const SuperVector bar = ovY(c, d);
      record(ov, {c, d, 0}, 1,
             nil.zeta.evaluate(A.bracket(basisElem(A, "y", c, d), bar)));
      for (int l = -n; l <= n; ++l) {
        if (l == 0 || c + l < 1 || c + l >= d - l || d - l > n) continue;
        record(ov, {c, d, l}, 0,
               nil.zeta.evaluate(A.bracket(basisElem(A, "y", c + l, d - l), bar)));
      }
    }
  }
  report.checks.push_back(std::move(ov));
  return report;
}

std::vector<std::vector<int>> multiIndices(const SkryabinDatum& datum, int wtBound) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(datum.size()), 0);
  const auto recurse = [&](auto&& self, int slot, int budget) -> void {
    if (slot == datum.size()) {
      out.push_back(current);
      return;
    }
    const int maxExp = slot < datum.evenCount ? budget / datum.d[static_cast<std::size_t>(slot)]
                                              : std::min(1, budget / datum.d[static_cast<std::size_t>(slot)]);
    for (int a = 0; a <= maxExp; ++a) {
      current[static_cast<std::size_t>(slot)] = a;
      self(self, slot + 1, budget - a * datum.d[static_cast<std::size_t>(slot)]);
    }
    current[static_cast<std::size_t>(slot)] = 0;
  };
  recurse(recurse, 0, wtBound);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

UEAElement productPower(PBWEngine& engine, const std::vector<UEAElement>& factors,
                        const std::vector<int>& a) {
  UEAElement out = UEAElement::unit();
  for (std::size_t s = 0; s < a.size(); ++s) {
    for (int rep = 0; rep < a[s]; ++rep) out = engine.multiply(out, factors[s]);
  }
  return out;
}

} // namespace

SkryabinReport verifyConclusions(const LieSuperalgebra& A, const ZGrading& grading,
                                 const NilpotentData& nil, const SkryabinDatum& datum,
                                 int wtBound) {
  validateDatum(A, grading, datum);
  PBWEngine engine(A, PBWOrder::mLast(A, grading, nil));

  std::vector<UEAElement> uFactors, xFactors;
  for (int s = 0; s < datum.size(); ++s) {
    UEAElement f = engine.fromVector(datum.u[static_cast<std::size_t>(s)]);
    if (s < datum.evenCount) {
      f = f - UEAElement::unit() * nil.zeta.evaluate(datum.u[static_cast<std::size_t>(s)]);
    }
    uFactors.push_back(std::move(f));
    xFactors.push_back(engine.fromVector(datum.x[static_cast<std::size_t>(s)]));
  }

  const auto indices = multiIndices(datum, wtBound);
  std::vector<UEAElement> uPowers, xPowers;
  uPowers.reserve(indices.size());
  xPowers.reserve(indices.size());
  for (const auto& a : indices) {
    uPowers.push_back(productPower(engine, uFactors, a));
    xPowers.push_back(productPower(engine, xFactors, a));
  }

  SkryabinReport report;
  SkryabinReport::Check diag{"diagonal-scalar", true, {}};
  SkryabinReport::Check zero{"zero-above-diagonal", true, {}};
  for (std::size_t ia = 0; ia < indices.size(); ++ia) {
    const int wa = wtOf(datum, indices[ia]), na = normOf(indices[ia]);
    for (std::size_t ib = 0; ib < indices.size(); ++ib) {
      const bool diagonal = ia == ib;
      const int wb = wtOf(datum, indices[ib]), nb = normOf(indices[ib]);
      const bool mustVanish =
          !diagonal && (wa > wb || (wa == wb && (na < nb || na == nb)));
      if (!diagonal && !mustVanish) continue;

      const UEAElement image =
          reduceInQ(engine, nil.zeta, engine.multiply(uPowers[ia], xPowers[ib]));
      std::vector<int> witness = indices[ia];
      witness.insert(witness.end(), indices[ib].begin(), indices[ib].end());
      if (diagonal) {
        const auto c = asScalar(image);
        const std::string computed =
            c ? rationalToString(*c) : "non-scalar " + engine.toJson(image);
        if (!c || *c == 0) {
          diag.pass = false;
          diag.witnesses.push_back({witness, "non-zero scalar", computed});
        } else {
          diag.witnesses.push_back({witness, "non-zero scalar", computed});
        }
      } else if (!image.isZero()) {
        zero.pass = false;
        zero.witnesses.push_back({witness, "0", engine.toJson(image)});
      }
    }
  }
  report.checks.push_back(std::move(diag));
  report.checks.push_back(std::move(zero));
  return report;
}

SkryabinReport checkFreeness(const LieSuperalgebra& A, const ZGrading& grading,
                             const NilpotentData& nil, const SkryabinDatum& datum,
                             int wtBound) {
  validateDatum(A, grading, datum);
  PBWEngine engine(A, PBWOrder::mLast(A, grading, nil));
  std::vector<UEAElement> xFactors;
  for (const auto& x : datum.x) xFactors.push_back(engine.fromVector(x));

  const auto indices = multiIndices(datum, wtBound);
  std::vector<UEAElement> images;
  std::map<PBWMonomial, Eigen::Index> columns;
  for (const auto& a : indices) {
    images.push_back(reduceInQ(engine, nil.zeta, productPower(engine, xFactors, a)));
    for (const auto& [mon, c] : images.back().terms()) {
      columns.emplace(mon, static_cast<Eigen::Index>(columns.size()));
    }
  }
  RatMatrix mat = RatMatrix::Zero(static_cast<Eigen::Index>(images.size()),
                                  std::max<Eigen::Index>(1, static_cast<Eigen::Index>(columns.size())));
  for (std::size_t r = 0; r < images.size(); ++r) {
    for (const auto& [mon, c] : images[r].terms()) {
      mat(static_cast<Eigen::Index>(r), columns.at(mon)) = c;
    }
  }
  const auto r = rank(mat);

  SkryabinReport report;
  SkryabinReport::Check check{"independent-images", true, {}};
  if (r != static_cast<Eigen::Index>(images.size())) {
    check.pass = false;
  }
  check.witnesses.push_back({{}, "rank " + std::to_string(images.size()),
                             "rank " + std::to_string(r)});
  report.checks.push_back(std::move(check));
  return report;
}

} // namespace superw
