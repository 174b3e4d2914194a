#include "superw/automorphism.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace superw {

namespace {

std::string pairLabel(const std::string& prefix, int a, int b) {
  std::ostringstream out;
  out << prefix << "_{" << a << b << "}";
  return out.str();
}

} // namespace

ScalingSequence::ScalingSequence(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("need at least one scaling entry");
  for (const auto& e : entries_) {
    if (e == 0) throw std::invalid_argument("scaling entries must be non-zero");
  }
  for (int i = 1; i <= n(); ++i) {
    for (int j = 1; j <= n(); ++j) {
      for (int k = 1; k <= n(); ++k) {
        if (at(i, j) * at(j, k) != at(i, k)) {
          throw std::logic_error("coefficient table violates the cocycle identity");
        }
      }
    }
  }
}

Rational ScalingSequence::at(int i, int j) const {
  if (i < 1 || j < 1 || i > n() || j > n()) throw std::out_of_range("index out of range");
  if (i == j) return 1;
  if (i > j) return 1 / at(j, i);
  Rational prod = 1;
  for (int k = i; k < j; ++k) prod *= entries_[static_cast<std::size_t>(k - 1)];
  return prod;
}

SuperVector AlgebraMap::apply(const SuperVector& x) const {
  SuperVector out;
  for (const auto& [idx, c] : x.terms()) {
    out.add(idx, c * scalars.at(static_cast<std::size_t>(idx)));
  }
  return out;
}

bool AlgebraMap::isIdentity() const {
  for (const auto& s : scalars) {
    if (s != 1) return false;
  }
  return true;
}

std::string AutomorphismReport::toJson() const {
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
  for (const auto& w : this->witnesses) {
    witnesses.push_back({{"indices", {w.i, w.j}}, {"expected", w.expected},
                         {"computed", w.computed}});
  }
  nlohmann::ordered_json doc = {{"check", "bracket-preservation"},
                                {"status", pass ? "pass" : "fail"},
                                {"witnesses", witnesses}};
  return doc.dump();
}

AlgebraMap buildPhi(const LieSuperalgebra& A, const ScalingSequence& a, bool literalDiagonal) {
  if (A.family() != Family::P && A.family() != Family::Q) {
    throw std::invalid_argument("scaling automorphisms are defined for p(n) and q(n)");
  }
  const int n = A.params().at(0);
  if (a.n() != n) throw std::invalid_argument("scaling sequence length must be n - 1");

  AlgebraMap phi;
  phi.scalars.assign(static_cast<std::size_t>(A.dim()), Rational(1));
  auto set = [&](const std::string& prefix, int i, int j, const Rational& c) {
    phi.scalars.at(static_cast<std::size_t>(A.indexOf(pairLabel(prefix, i, j)))) = c;
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      set("e", i, j, a.at(i, j));
      if (A.family() == Family::Q) set("f", i, j, a.at(i, j));
    }
  }
  if (A.family() == Family::P) {
    for (int p = 1; p <= n; ++p) {
      for (int q = p; q <= n; ++q) {
        const Rational c =
            (p == q && literalDiagonal) ? Rational(1) : Rational(a.at(p, n) * a.at(q, n));
        set("s", p, q, c);
        if (p < q) set("y", p, q, 1 / (a.at(p, n) * a.at(q, n)));
      }
    }
  }
  return phi;
}

AutomorphismReport isAutomorphism(const LieSuperalgebra& A, const AlgebraMap& phi) {
  if (static_cast<int>(phi.scalars.size()) != A.dim()) {
    throw std::invalid_argument("map must be defined on the whole basis");
  }
  AutomorphismReport report;
  for (const auto& s : phi.scalars) {
    if (s == 0) {
      report.pass = false;
      report.witnesses.push_back({0, 0, "invertible diagonal", "zero scalar"});
      return report;
    }
  }
  for (int i = 0; i < A.dim(); ++i) {
    for (int j = 0; j < A.dim(); ++j) {
      const SuperVector lhs =
          phi.apply(A.bracket(SuperVector::basis(i), SuperVector::basis(j)));
      const SuperVector rhs = A.bracket(phi.apply(SuperVector::basis(i)),
                                        phi.apply(SuperVector::basis(j)));
      if (!(lhs - rhs).isZero()) {
        report.pass = false;
        report.witnesses.push_back(
            {i, j, "phi([" + A.label(i) + "," + A.label(j) + "]) = [phi,phi]",
             "mismatch"});
      }
    }
  }
  return report;
}

WhittakerCharacter transportCharacter(const LieSuperalgebra& A, const AlgebraMap& phi,
                                      const WhittakerCharacter& zeta) {
  if (static_cast<int>(phi.scalars.size()) != A.dim()) {
    throw std::invalid_argument("map must be defined on the whole basis");
  }
  WhittakerCharacter out;
  for (const auto& [idx, value] : zeta.values()) {
    out.set(idx, value * phi.scalars.at(static_cast<std::size_t>(idx)));
  }
  return out;
}

std::vector<Rational> normalizationScaling(const LieSuperalgebra& A,
                                           const WhittakerCharacter& zeta) {
  std::vector<Rational> entries;
  for (int idx : simpleEvenRootIndices(A)) {
    const Rational v = zeta.value(idx);
    entries.push_back(v == 0 ? Rational(1) : 1 / v);
  }
  return entries;
}

} // namespace superw
