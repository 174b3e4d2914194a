// Acceptance gate: one line per criterion, exit 0 iff all pass.
#include "superw/automorphism.hpp"
#include "superw/skryabin.hpp"
#include "superw/weights.hpp"
#include "superw/whittaker.hpp"

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

using namespace superw;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<bool()>& body) {
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  std::cout << "criterion " << number << " (" << title << "): " << (ok ? "pass" : "FAIL");
  if (!error.empty()) std::cout << " [" << error << "]";
  std::cout << std::endl;
  if (!ok) ++failures;
}

NilpotentData principalNil(const LieSuperalgebra& A) {
  const auto t = principalSl2(A);
  return buildNilpotentData(A, dynkinGrading(A, t.h), t.e);
}

Eigen::Index spanRank(const std::vector<ModuleVector>& vecs, int masks, int K) {
  RatMatrix mat = RatMatrix::Zero(static_cast<Eigen::Index>(vecs.size()),
                                  static_cast<Eigen::Index>(masks) * (K + 1));
  for (std::size_t r = 0; r < vecs.size(); ++r) {
    for (const auto& [key, c] : vecs[r].terms()) {
      mat(static_cast<Eigen::Index>(r),
          static_cast<Eigen::Index>(key.first) * (K + 1) + key.second) = c;
    }
  }
  return rank(mat);
}

bool sameSpan(const std::vector<ModuleVector>& a, const std::vector<ModuleVector>& b, int masks,
              int K) {
  auto joint = a;
  joint.insert(joint.end(), b.begin(), b.end());
  const auto ra = spanRank(a, masks, K);
  return ra == spanRank(b, masks, K) && ra == spanRank(joint, masks, K);
}

bool inSpan(const std::vector<ModuleVector>& basis, const ModuleVector& v, int masks, int K) {
  auto joint = basis;
  joint.push_back(v);
  return spanRank(joint, masks, K) == spanRank(basis, masks, K);
}

std::string runCli(const std::string& args, int& exitCode) {
  const std::string cmd = std::string(SUPERW_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    exitCode = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
  const int status = pclose(pipe);
  exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

bool structureSoundness() {
  const std::vector<std::pair<Family, std::vector<int>>> algebras = {
      {Family::GL, {3, 2}}, {Family::Q, {4}}, {Family::P, {4}}, {Family::OSP12, {}},
      {Family::OSP22, {}}};
  for (const auto& [family, params] : algebras) {
    const auto A = buildAlgebra(family, params);
    if (!A.checkJacobi().pass) return false;
    if (!A.checkStructureAgainstMatrices()) return false;
  }
  return true;
}

bool gl12Vectors() {
  const auto A = buildAlgebra(Family::GL, {1, 2});
  const auto nil = principalNil(A);
  const int K = 12;
  const unsigned m21 = 1, m31 = 2;
  const std::vector<ModuleVector> listed = {
      ModuleVector::basis(0, 0), ModuleVector::basis(m21, 0), ModuleVector::basis(m21 | m31, 0),
      ModuleVector::basis(m31, 0) * Rational(2) - ModuleVector::basis(m21, 1)};

  {
    const Weight lam = {Rational(3), Rational(1), Rational(0)};
    const Rational c = lam[0] + (lam[1] + lam[2]) / 2;
    if (c == 1) return false;
    const auto M = TypeIModule::forGl12(A, lam);
    const auto even = whittakerVectors(M, nil, true, K);
    if (even.dimension != 4 || !even.stable) return false;
    if (!sameSpan(even.basis, listed, 4, K)) return false;
    const auto full = whittakerVectors(M, nil, false, K);
    if (full.dimension != 2 || !full.stable) return false;
    const auto w = listed[1] + listed[3] * (1 / (2 * (1 - c)));
    if (!inSpan(full.basis, w, 4, K)) return false;
  }
  {
    const Weight lam = {Rational(1), Rational(0), Rational(0)}; // c = 1
    const auto M = TypeIModule::forGl12(A, lam);
    const auto full = whittakerVectors(M, nil, false, K);
    if (full.dimension != 2) return false;
    if (!inSpan(full.basis, listed[3], 4, K)) return false;
  }
  return true;
}

bool osp12Series() {
  const auto A = buildAlgebra(Family::OSP12, {});
  for (const Rational& lamH : {Rational(1), Rational(2), Rational(5, 2)}) {
    const auto coeffs = osp12WhittakerSeries(lamH, 21);
    if (coeffs.at(0) != 1) return false;
    for (int k = 0; k <= 20; ++k) {
      if (coeffs.at(static_cast<std::size_t>(k) + 1) * ((k + 1) * (k + lamH)) !=
          -coeffs.at(static_cast<std::size_t>(k))) {
        return false;
      }
    }
    if (!osp12VerifySeries(A, lamH, coeffs)) return false;
  }
  for (const Rational& bad : {Rational(0), Rational(-1)}) {
    try {
      osp12WhittakerSeries(bad, 21);
      return false;
    } catch (const std::domain_error&) {
    }
  }
  return true;
}

bool osp22Example() {
  const auto A = buildAlgebra(Family::OSP22, {});
  const auto nil = principalNil(A);
  const int K = 12;
  const unsigned mV = 1, mU = 2;
  const auto X = SuperVector::basis(A.indexOf("X"));
  const auto Y = SuperVector::basis(A.indexOf("Y"));

  {
    const Weight lam = {Rational(5), Rational(2)};
    const auto M = TypeIModule::forOsp22(A, lam);
    const auto even = whittakerVectors(M, nil, true, K);
    const std::vector<ModuleVector> listed = {
        ModuleVector::basis(0, 0), ModuleVector::basis(mV, 0), ModuleVector::basis(mV | mU, 0),
        ModuleVector::basis(mU, 0) * Rational(2) + ModuleVector::basis(mV, 1)};
    if (even.dimension != 4 || !sameSpan(even.basis, listed, 4, K)) return false;
    if (M.act(X, listed[1], 8) != ModuleVector::basis(0, 0) * Rational(-2)) return false;
    if (M.act(X, listed[3], 8) != ModuleVector::basis(0, 0) * (2 * lam[0] - 4)) return false;
    const auto w = listed[1] * (lam[0] - 2) + listed[3];
    const Rational gamma = casimirScalarOsp22(lam);
    if (gamma != (lam[1] - 1) * (lam[1] - 1) - 1) return false;
    if (M.act(Y, w, 8) != ModuleVector::basis(0, 0) * ((2 - lam[0]) * lam[0] + gamma)) {
      return false;
    }
  }

  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> coord(-8, 8);
  int typicalSeen = 0, atypicalSeen = 0;
  while (typicalSeen < 10 || atypicalSeen < 10) {
    Rational l1 = coord(rng), l2 = coord(rng);
    if (atypicalSeen < typicalSeen) l2 = 2 - l1; // second typicality factor vanishes
    const Weight lam = {l1, l2};
    const auto M = TypeIModule::forOsp22(A, lam);
    const auto w = ModuleVector::basis(mV, 0) * (l1 - 2) + ModuleVector::basis(mU, 0) * Rational(2) +
                   ModuleVector::basis(mV, 1);
    const bool vanished = M.act(Y, w, 8).isZero();
    const bool typical = typicalOsp22(lam);
    if (typical == vanished) return false;
    (typical ? typicalSeen : atypicalSeen) += 1;
  }

  // operator identity in the enveloping algebra
  PBWEngine engine(A, PBWOrder::identity(A));
  const auto e = engine.generator(A.indexOf("e"));
  const auto f = engine.generator(A.indexOf("f"));
  const auto h = engine.generator(A.indexOf("h"));
  const auto lhs = engine.multiply(h, h) + h * Rational(2) + engine.multiply(f, e) * Rational(4);
  const auto rhs = engine.multiply(h, h) - h * Rational(2) + engine.multiply(e, f) * Rational(4);
  return lhs == rhs;
}

bool pnTables() {
  for (int n = 2; n <= 6; ++n) {
    const auto report = checkPnZetaTables(buildAlgebra(Family::P, {n}));
    if (!report.pass()) return false;
    for (const auto& check : report.checks) {
      if (!check.witnesses.empty()) return false;
    }
  }
  return true;
}

bool conditions() {
  for (int n = 2; n <= 5; ++n) {
    for (const Family family : {Family::Q, Family::P}) {
      const auto A = buildAlgebra(family, {n});
      const auto t = principalSl2(A);
      const auto grading = dynkinGrading(A, t.h);
      const auto nil = buildNilpotentData(A, grading, t.e);
      const auto datum = family == Family::Q ? qnDatum(A) : pnDatum(A);
      if (!checkConditions(A, grading, nil, datum).pass()) return false;
      // drop the sum tail of the first pairing element (a real tail needs n >= 3)
      if (datum.x[0].terms().size() < 2) continue;
      auto mutated = datum;
      mutated.x[0] = SuperVector::basis(mutated.x[0].terms().begin()->first);
      const auto report = checkConditions(A, grading, nil, mutated);
      if (report.pass()) return false;
      bool witnessed = false;
      for (const auto& check : report.checks) {
        if (!check.witnesses.empty()) witnessed = true;
      }
      if (!witnessed) return false;
    }
  }
  return true;
}

bool conclusions() {
  {
    const auto A = buildAlgebra(Family::Q, {2});
    const auto t = principalSl2(A);
    const auto grading = dynkinGrading(A, t.h);
    const auto nil = buildNilpotentData(A, grading, t.e);
    if (!verifyConclusions(A, grading, nil, qnDatum(A), 6).pass()) return false;
    if (!checkFreeness(A, grading, nil, qnDatum(A), 6).pass()) return false;
  }
  for (int n : {2, 3}) {
    const auto A = buildAlgebra(Family::P, {n});
    const auto t = principalSl2(A);
    const auto grading = dynkinGrading(A, t.h);
    const auto nil = buildNilpotentData(A, grading, t.e);
    if (!verifyConclusions(A, grading, nil, pnDatum(A), 6).pass()) return false;
    if (n == 2 && !checkFreeness(A, grading, nil, pnDatum(A), 6).pass()) return false;
  }
  return true;
}

bool p2Example() {
  const auto A = buildAlgebra(Family::P, {2});
  const auto nil = principalNil(A);
  {
    const auto M = TypeIModule::forP2(A, {Rational(0), Rational(2)});
    if (M.act(SuperVector::basis(A.indexOf("s_{11}")), ModuleVector::basis(1, 0), 8) !=
        ModuleVector::basis(0, 0)) {
      return false;
    }
  }
  for (const Weight& lam : {Weight{Rational(0), Rational(2)}, Weight{Rational(-1), Rational(1)},
                            Weight{Rational(1), Rational(3)}}) {
    const auto M = TypeIModule::forP2(A, lam);
    const auto full = whittakerVectors(M, nil, false, 12);
    if (full.dimension != 1 || !full.stable) return false;
  }
  return true;
}

bool appendixB() {
  static const std::vector<Rational> pool = {Rational(1),   Rational(-1),   Rational(2),
                                             Rational(-2),  Rational(1, 3), Rational(-1, 3),
                                             Rational(5)};
  std::mt19937 rng(1789);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (const Family family : {Family::P, Family::Q}) {
    for (int n = 2; n <= 5; ++n) {
      const auto A = buildAlgebra(family, {n});
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> entries;
        for (int i = 0; i < n - 1; ++i) entries.push_back(pool[pick(rng)]);
        if (!isAutomorphism(A, buildPhi(A, ScalingSequence(entries))).pass) return false;
      }
      if (!buildPhi(A, ScalingSequence(std::vector<Rational>(
                           static_cast<std::size_t>(n - 1), Rational(1))))
               .isIdentity()) {
        return false;
      }
    }
  }

  const auto q4 = buildAlgebra(Family::Q, {4});
  auto nil = principalNil(q4);
  auto zeta = nil.zeta;
  const auto simple = simpleEvenRootIndices(q4);
  zeta.set(simple.at(0), 2);
  zeta.set(simple.at(1), 0);
  zeta.set(simple.at(2), 5);
  const auto phi = buildPhi(q4, ScalingSequence(normalizationScaling(q4, zeta)));
  const auto hat = transportCharacter(q4, phi, zeta);
  return hat.value(simple.at(0)) == 1 && hat.value(simple.at(1)) == 0 &&
         hat.value(simple.at(2)) == 1;
}

bool linkage() {
  // 0 is linked to eps_1 - delta_1 = (1, -1) in gl(1|1)
  if (!linkageGl(1, 1, {Rational(0), Rational(0)}, {Rational(1), Rational(-1)}, 8).linked) {
    return false;
  }
  // a typical weight sits alone across orbits
  if (linkageGl(1, 1, {Rational(1), Rational(0)}, {Rational(2), Rational(-1)}, 8).linked) {
    return false;
  }
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> coord(-3, 3), dims(1, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = dims(rng), n = dims(rng);
    Weight lam, mu;
    for (int i = 0; i < m + n; ++i) {
      lam.push_back(coord(rng));
      mu.push_back(coord(rng));
    }
    if (!linkageGl(m, n, lam, lam, 6).linked) return false;
    if (linkageGl(m, n, lam, mu, 6).linked != linkageGl(m, n, mu, lam, 6).linked) return false;
  }
  return true;
}

bool cliDeterminism() {
  const std::vector<std::string> runs = {
      "--command automorphism --algebra p:4 --seed 31",
      "--command whittaker-vectors --algebra gl:1,2 --weight 3,1,0",
      "--command skryabin-conclusions --algebra q:2"};
  for (const auto& args : runs) {
    int codeA = -1, codeB = -1;
    const std::string a = runCli(args, codeA);
    const std::string b = runCli(args, codeB);
    if (codeA != 0 || codeB != 0 || a.empty() || a != b) return false;
  }
  return true;
}

} // namespace

int main() {
  criterion(1, "structure soundness", structureSoundness);
  criterion(2, "gl(1|2) whittaker vectors", gl12Vectors);
  criterion(3, "osp(1|2) series", osp12Series);
  criterion(4, "osp(2|2) example", osp22Example);
  criterion(5, "p(n) bracket tables", pnTables);
  criterion(6, "pairing hypotheses", conditions);
  criterion(7, "reduction conclusions and freeness", conclusions);
  criterion(8, "p(2) example", p2Example);
  criterion(9, "scaling automorphisms", appendixB);
  criterion(10, "linkage relation", linkage);
  criterion(11, "CLI determinism", cliDeterminism);
  if (failures == 0) {
    std::cout << "all criteria pass" << std::endl;
    return 0;
  }
  std::cout << failures << " criteria failing" << std::endl;
  return 1;
}
