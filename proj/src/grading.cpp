#include "superw/grading.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace superw {

std::optional<int> ZGrading::degreeOf(const SuperVector& x) const {
  std::optional<int> result;
  for (const auto& [idx, c] : x.terms()) {
    const int d = degree(idx);
    if (!result) {
      result = d;
    } else if (*result != d) {
      return std::nullopt;
    }
  }
  return result;
}

std::vector<int> ZGrading::component(int degree) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (degrees_[static_cast<std::size_t>(i)] == degree) out.push_back(i);
  }
  return out;
}

Rational WhittakerCharacter::value(int index) const {
  auto it = values_.find(index);
  return it == values_.end() ? Rational(0) : it->second;
}

Rational WhittakerCharacter::evaluate(const SuperVector& x) const {
  Rational acc = 0;
  for (const auto& [idx, c] : x.terms()) acc += c * value(idx);
  return acc;
}

void WhittakerCharacter::set(int index, const Rational& v) { values_[index] = v; }

namespace {

SuperVector labelled(const LieSuperalgebra& A, const std::string& label) {
  return SuperVector::basis(A.indexOf(label));
}

std::string eLabel(int a, int b) {
  std::ostringstream out;
  out << "e_{" << a << b << "}";
  return out.str();
}

void requireSl2Relations(const LieSuperalgebra& A, const SL2Triple& t) {
  const bool ok = A.bracket(t.h, t.e) == t.e * Rational(2) &&
                  A.bracket(t.h, t.f) == t.f * Rational(-2) && A.bracket(t.e, t.f) == t.h;
  if (!ok) throw std::logic_error("sl(2) relations fail for the principal triple");
}

} // namespace

SL2Triple principalSl2(const LieSuperalgebra& A) {
  SL2Triple t;
  switch (A.family()) {
    case Family::P:
    case Family::Q: {
      const int n = A.params().at(0);
      if (n < 2) throw std::invalid_argument("principal triple needs n >= 2");
      for (int a = 1; a < n; ++a) {
        t.e += labelled(A, eLabel(a + 1, a));
        t.f += labelled(A, eLabel(a, a + 1)) * Rational(a * (n - a));
      }
      for (int a = 1; a <= n; ++a) {
        t.h += labelled(A, eLabel(a, a)) * Rational(2 * a - 1 - n);
      }
      break;
    }
    case Family::GL: {
      if (A.params() != std::vector<int>{1, 2})
        throw std::invalid_argument("principal triple implemented for gl(1|2) only");
      t.e = labelled(A, "E_{32}");
      t.h = labelled(A, "E_{33}") - labelled(A, "E_{22}");
      t.f = labelled(A, "E_{23}");
      break;
    }
    case Family::OSP12:
    case Family::OSP22: {
      t.e = labelled(A, "e");
      t.h = labelled(A, "h");
      t.f = labelled(A, "f");
      break;
    }
  }
  requireSl2Relations(A, t);
  return t;
}

ZGrading dynkinGrading(const LieSuperalgebra& A, const SuperVector& h) {
  std::vector<int> degrees(static_cast<std::size_t>(A.dim()), 0);
  for (int i = 0; i < A.dim(); ++i) {
    const SuperVector b = A.bracket(h, SuperVector::basis(i));
    if (b.isZero()) continue;
    const Rational c = b.coeff(i);
    if (b != SuperVector::basis(i) * c) {
      throw std::invalid_argument("basis element " + A.label(i) + " is not an ad(h)-eigenvector");
    }
    if (c.get_den() != 1) {
      throw std::invalid_argument("non-integer ad(h)-eigenvalue on " + A.label(i));
    }
    degrees[static_cast<std::size_t>(i)] = static_cast<int>(c.get_num().get_si());
  }
  ZGrading grading(degrees);
  // [g(i), g(j)] lands in g(i+j)
  for (int i = 0; i < A.dim(); ++i) {
    for (int j = i; j < A.dim(); ++j) {
      for (const auto& [k, c] : A.bracketBasis(i, j).terms()) {
        if (grading.degree(k) != grading.degree(i) + grading.degree(j)) {
          throw std::logic_error("grading incompatible with the bracket");
        }
      }
    }
  }
  return grading;
}

std::vector<int> simpleEvenRootIndices(const LieSuperalgebra& A) {
  switch (A.family()) {
    case Family::P:
    case Family::Q: {
      const int n = A.params().at(0);
      std::vector<int> out;
      for (int a = 1; a < n; ++a) out.push_back(A.indexOf(eLabel(a, a + 1)));
      return out;
    }
    case Family::GL:
      if (A.params() != std::vector<int>{1, 2})
        throw std::invalid_argument("simple even roots fixed for gl(1|2) only");
      return {A.indexOf("E_{23}")};
    case Family::OSP12:
    case Family::OSP22:
      return {A.indexOf("f")};
  }
  return {};
}

namespace {

Rational chiBracket(const LieSuperalgebra& A, const SuperVector& e, int i, int j) {
  return A.bilinearForm(A.designatedForm(), e,
                        A.bracket(SuperVector::basis(i), SuperVector::basis(j)));
}

std::vector<int> defaultLagrangian(const LieSuperalgebra& A, const SuperVector& e,
                                   const std::vector<int>& gMinus1) {
  if (A.family() == Family::GL && A.params() == std::vector<int>{1, 2})
    return {A.indexOf("E_{13}")};
  if (A.family() == Family::OSP22) return {A.indexOf("X")};
  // greedy isotropic extension in basis order
  std::vector<int> chosen;
  for (int cand : gMinus1) {
    bool ok = isZero(chiBracket(A, e, cand, cand));
    for (int prev : chosen) ok = ok && isZero(chiBracket(A, e, prev, cand));
    if (ok) chosen.push_back(cand);
  }
  return chosen;
}

} // namespace

NilpotentData buildNilpotentData(const LieSuperalgebra& A, const ZGrading& grading,
                                 const SuperVector& e, const std::vector<int>* lagrangian) {
  NilpotentData nil;
  const std::vector<int> gMinus1 = grading.component(-1);

  std::vector<int> l;
  if (!gMinus1.empty()) {
    l = lagrangian ? *lagrangian : defaultLagrangian(A, e, gMinus1);
    // isotropy of l for the form chi([.,.]) on g(-1)
    for (std::size_t r = 0; r < l.size(); ++r) {
      for (std::size_t s = r; s < l.size(); ++s) {
        if (!isZero(chiBracket(A, e, l[r], l[s]))) {
          throw std::invalid_argument("supplied subspace is not isotropic");
        }
      }
    }
    // maximality: kernel of the Gram matrix plus half its nondegenerate rank
    const Eigen::Index d = static_cast<Eigen::Index>(gMinus1.size());
    RatMatrix gram(d, d);
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index s = 0; s < d; ++s)
        gram(r, s) = chiBracket(A, e, gMinus1[static_cast<std::size_t>(r)],
                                gMinus1[static_cast<std::size_t>(s)]);
    const Eigen::Index rk = rank(gram);
    const Eigen::Index expected = d - rk + rk / 2;
    if (static_cast<Eigen::Index>(l.size()) < expected) {
      throw std::invalid_argument("supplied isotropic subspace is not maximal");
    }
  } else if (lagrangian && !lagrangian->empty()) {
    throw std::invalid_argument("lagrangian supplied but g(-1) is zero");
  }

  for (int i = 0; i < A.dim(); ++i) {
    if (grading.degree(i) <= -2) nil.mBasis.push_back(i);
  }
  for (int i : l) nil.mBasis.push_back(i);
  nil.lagrangian = l;

  // zeta = (e|x) on the even part, rescaled so simple values are 1, zero on
  // odd elements
  const std::vector<int> simples = simpleEvenRootIndices(A);
  const Rational ref = A.bilinearForm(A.designatedForm(), e, SuperVector::basis(simples.front()));
  if (isZero(ref)) throw std::logic_error("form vanishes on the first simple root space");
  for (int i : nil.mBasis) {
    if (A.parity(i) == Parity::Odd) {
      nil.zeta.set(i, 0);
    } else {
      nil.zeta.set(i, A.bilinearForm(A.designatedForm(), e, SuperVector::basis(i)) / ref);
    }
  }

  // character property: m closes under the bracket and zeta kills [m,m]
  for (int x : nil.mBasis) {
    for (int y : nil.mBasis) {
      const SuperVector b = A.bracket(SuperVector::basis(x), SuperVector::basis(y));
      for (const auto& [k, c] : b.terms()) {
        if (grading.degree(k) > -2 &&
            std::find(nil.mBasis.begin(), nil.mBasis.end(), k) == nil.mBasis.end()) {
          throw std::logic_error("m is not closed under the bracket");
        }
      }
      if (!isZero(nil.zeta.evaluate(b))) {
        throw std::logic_error("character property fails on [m,m]");
      }
    }
  }
  if (!isNonsingular(A, nil.zeta)) {
    throw std::logic_error("principal character is singular");
  }
  return nil;
}

bool isNonsingular(const LieSuperalgebra& A, const WhittakerCharacter& zeta) {
  for (int i : simpleEvenRootIndices(A)) {
    if (isZero(zeta.value(i))) return false;
  }
  return true;
}

} // namespace superw
