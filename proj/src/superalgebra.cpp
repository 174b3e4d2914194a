#include "superw/superalgebra.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace superw {

namespace {

std::string subscript(int a, int b) {
  std::ostringstream out;
  out << "{" << a << b << "}";
  return out.str();
}

} // namespace

std::string familyName(Family family) {
  switch (family) {
    case Family::GL: return "gl";
    case Family::Q: return "q";
    case Family::P: return "p";
    case Family::OSP12: return "osp12";
    case Family::OSP22: return "osp22";
  }
  return "?";
}

Family familyFromName(const std::string& name) {
  if (name == "gl") return Family::GL;
  if (name == "q") return Family::Q;
  if (name == "p") return Family::P;
  if (name == "osp12") return Family::OSP12;
  if (name == "osp22") return Family::OSP22;
  throw std::invalid_argument("unknown algebra family: " + name);
}

void SuperVector::add(int index, const Rational& coeff) {
  if (superw::isZero(coeff)) return;
  auto it = terms_.find(index);
  if (it == terms_.end()) {
    terms_.emplace(index, coeff);
  } else {
    it->second += coeff;
    if (superw::isZero(it->second)) terms_.erase(it);
  }
}

void SuperVector::scale(const Rational& factor) {
  if (superw::isZero(factor)) {
    terms_.clear();
    return;
  }
  for (auto& [idx, c] : terms_) c *= factor;
}

SuperVector& SuperVector::operator+=(const SuperVector& other) {
  for (const auto& [idx, c] : other.terms_) add(idx, c);
  return *this;
}

SuperVector SuperVector::operator*(const Rational& factor) const {
  SuperVector out = *this;
  out.scale(factor);
  return out;
}

SuperVector SuperVector::operator-() const { return *this * Rational(-1); }

SuperVector SuperVector::operator+(const SuperVector& other) const {
  SuperVector out = *this;
  out += other;
  return out;
}

SuperVector SuperVector::operator-(const SuperVector& other) const {
  SuperVector out = *this;
  out += -other;
  return out;
}

Rational SuperVector::coeff(int index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LieSuperalgebra::indexOf(const std::string& label) const {
  for (int i = 0; i < dim(); ++i) {
    if (labels_[static_cast<std::size_t>(i)] == label) return i;
  }
  throw std::out_of_range("no basis element labelled " + label);
}

std::optional<Parity> LieSuperalgebra::homogeneousParity(const SuperVector& x) const {
  std::optional<Parity> result;
  for (const auto& [idx, c] : x.terms()) {
    Parity p = parity(idx);
    if (!result) {
      result = p;
    } else if (*result != p) {
      return std::nullopt;
    }
  }
  if (!result) return Parity::Even;
  return result;
}

const SuperVector& LieSuperalgebra::bracketBasis(int i, int j) const {
  static const SuperVector kZero;
  if (i > j) throw std::logic_error("bracketBasis expects i <= j");
  auto it = structure_.find({i, j});
  return it == structure_.end() ? kZero : it->second;
}

SuperVector LieSuperalgebra::bracket(const SuperVector& x, const SuperVector& y) const {
  SuperVector out;
  for (const auto& [i, ci] : x.terms()) {
    if (i < 0 || i >= dim()) throw std::out_of_range("basis index out of range");
    for (const auto& [j, cj] : y.terms()) {
      if (j < 0 || j >= dim()) throw std::out_of_range("basis index out of range");
      const Rational c = ci * cj;
      if (i <= j) {
        out += bracketBasis(i, j) * c;
      } else {
        // [x_i, x_j] = -(-1)^{|i||j|} [x_j, x_i]
        const int sign = (parityBitOf(i) && parityBitOf(j)) ? 1 : -1;
        out += bracketBasis(j, i) * (c * sign);
      }
    }
  }
  return out;
}

RatMatrix LieSuperalgebra::realize(const SuperVector& x) const {
  const int n = matrixSize();
  RatMatrix out = RatMatrix::Zero(n, n);
  for (const auto& [idx, c] : x.terms()) {
    out += c * matrices_[static_cast<std::size_t>(idx)];
  }
  return out;
}

RatMatrix LieSuperalgebra::superCommutator(int i, int j) const {
  const RatMatrix& a = matrices_[static_cast<std::size_t>(i)];
  const RatMatrix& b = matrices_[static_cast<std::size_t>(j)];
  if (parityBitOf(i) && parityBitOf(j)) return a * b + b * a;
  return a * b - b * a;
}

namespace {

/// left inverse of the (full column rank) matrix whose columns are the
/// vectorized basis matrices
RatMatrix leftInverse(const RatMatrix& basisMat) {
  const Eigen::Index d = basisMat.cols();
  RatMatrix gram = basisMat.transpose() * basisMat;
  RatMatrix aug(d, 2 * d);
  aug.leftCols(d) = gram;
  aug.rightCols(d) = RatMatrix::Identity(d, d);
  auto pivots = rowReduce(aug);
  if (static_cast<Eigen::Index>(pivots.size()) != d) {
    throw std::logic_error("basis matrices are linearly dependent");
  }
  return aug.rightCols(d) * basisMat.transpose();
}

} // namespace

SuperVector LieSuperalgebra::coordinates(const RatMatrix& mat) const {
  const int n = matrixSize();
  if (coordMap_.size() == 0) {
    RatMatrix basisMat(n * n, dim());
    for (int k = 0; k < dim(); ++k) {
      const RatMatrix& m = matrices_[static_cast<std::size_t>(k)];
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) basisMat(r * n + c, k) = m(r, c);
    }
    coordMap_ = leftInverse(basisMat);
  }
  SuperVector out;
  for (int k = 0; k < dim(); ++k) {
    Rational acc = 0;
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        if (!isZero(mat(r, c))) acc += coordMap_(k, r * n + c) * mat(r, c);
      }
    }
    out.add(k, acc);
  }
  if (realize(out) != mat) {
    throw std::domain_error("matrix does not lie in the algebra");
  }
  return out;
}

void LieSuperalgebra::generateStructure() {
  for (int i = 0; i < dim(); ++i) {
    for (int j = i; j < dim(); ++j) {
      SuperVector coords = coordinates(superCommutator(i, j));
      if (!coords.isZero()) structure_.emplace(std::make_pair(i, j), std::move(coords));
    }
  }
}

JacobiReport LieSuperalgebra::checkJacobi() const {
  JacobiReport report;
  const int d = dim();
  for (int i = 0; i < d; ++i) {
    const SuperVector xi = SuperVector::basis(i);
    for (int j = 0; j < d; ++j) {
      const SuperVector xj = SuperVector::basis(j);
      const SuperVector bij = bracket(xi, xj);
      for (int k = 0; k < d; ++k) {
        const SuperVector xk = SuperVector::basis(k);
        const int pi = parityBitOf(i), pj = parityBitOf(j), pk = parityBitOf(k);
        SuperVector res = bracket(xi, bracket(xj, xk)) * Rational((pi & pk) ? -1 : 1);
        res += bracket(xj, bracket(xk, xi)) * Rational((pj & pi) ? -1 : 1);
        res += bracket(xk, bij) * Rational((pk & pj) ? -1 : 1);
        ++report.checkedTriples;
        if (!res.isZero()) {
          report.pass = false;
          report.i = i;
          report.j = j;
          report.k = k;
          report.residual = std::move(res);
          return report;
        }
      }
    }
  }
  return report;
}

bool LieSuperalgebra::checkStructureAgainstMatrices() const {
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) {
      const SuperVector table = bracket(SuperVector::basis(i), SuperVector::basis(j));
      const RatMatrix& a = matrices_[static_cast<std::size_t>(i)];
      const RatMatrix& b = matrices_[static_cast<std::size_t>(j)];
      const RatMatrix direct = (parityBitOf(i) && parityBitOf(j)) ? RatMatrix(a * b + b * a)
                                                                  : RatMatrix(a * b - b * a);
      if (realize(table) != direct) return false;
    }
  }
  return true;
}

Rational LieSuperalgebra::bilinearForm(BilinearFormKind kind, const SuperVector& x,
                                       const SuperVector& y) const {
  switch (kind) {
    case BilinearFormKind::Supertrace:
      if (family_ != Family::GL) throw std::invalid_argument("supertrace form requires gl(m|n)");
      break;
    case BilinearFormKind::NegSupertrace:
      if (family_ != Family::OSP12 && family_ != Family::OSP22)
        throw std::invalid_argument("negated supertrace form requires osp(1|2) or osp(2|2)");
      break;
    case BilinearFormKind::EvenTrace:
      if (family_ != Family::P && family_ != Family::Q)
        throw std::invalid_argument("even trace form requires p(n) or q(n)");
      break;
  }
  if (kind == BilinearFormKind::EvenTrace) {
    for (const auto& [idx, c] : x.terms())
      if (parity(idx) == Parity::Odd) return 0;
    for (const auto& [idx, c] : y.terms())
      if (parity(idx) == Parity::Odd) return 0;
  }
  const RatMatrix prod = realize(x) * realize(y);
  Rational even = 0, odd = 0;
  for (int r = 0; r < matrixSize(); ++r) {
    (r < evenBlock_ ? even : odd) += prod(r, r);
  }
  switch (kind) {
    case BilinearFormKind::Supertrace: return even - odd;
    case BilinearFormKind::NegSupertrace: return odd - even;
    case BilinearFormKind::EvenTrace: return even + odd;
  }
  return 0;
}

BilinearFormKind LieSuperalgebra::designatedForm() const {
  switch (family_) {
    case Family::GL: return BilinearFormKind::Supertrace;
    case Family::OSP12:
    case Family::OSP22: return BilinearFormKind::NegSupertrace;
    case Family::P:
    case Family::Q: return BilinearFormKind::EvenTrace;
  }
  return BilinearFormKind::Supertrace;
}

void LieSuperalgebra::perturbStructureConstant(int i, int j, int k, const Rational& delta) {
  if (i > j) throw std::logic_error("perturb expects i <= j");
  structure_[{i, j}].add(k, delta);
  if (structure_[{i, j}].isZero()) structure_.erase({i, j});
}

std::string LieSuperalgebra::toJson() const {
  nlohmann::ordered_json doc;
  doc["family"] = familyName(family_);
  doc["params"] = params_;
  doc["dim"] = dim();
  nlohmann::ordered_json parity = nlohmann::ordered_json::array();
  for (Parity p : parities_) parity.push_back(p == Parity::Even ? "even" : "odd");
  doc["parity"] = parity;
  doc["labels"] = labels_;
  nlohmann::ordered_json structure = nlohmann::ordered_json::array();
  for (const auto& [key, vec] : structure_) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [k, c] : vec.terms()) {
      terms.push_back({k, rationalToString(c)});
    }
    structure.push_back({key.first, key.second, terms});
  }
  doc["structure"] = structure;
  return doc.dump();
}

namespace {

RatMatrix zero(int n) { return RatMatrix::Zero(n, n); }

void buildGl(int m, int n, std::vector<std::string>& labels, std::vector<Parity>& parities,
             std::vector<RatMatrix>& mats, std::vector<int>& cartan) {
  const int N = m + n;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      labels.push_back("E_" + subscript(i + 1, j + 1));
      parities.push_back(((i < m) != (j < m)) ? Parity::Odd : Parity::Even);
      RatMatrix M = zero(N);
      M(i, j) = 1;
      mats.push_back(std::move(M));
      if (i == j) cartan.push_back(static_cast<int>(labels.size()) - 1);
    }
  }
}

void buildQ(int n, std::vector<std::string>& labels, std::vector<Parity>& parities,
            std::vector<RatMatrix>& mats, std::vector<int>& cartan) {
  const int N = 2 * n;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      labels.push_back("e_" + subscript(a + 1, b + 1));
      parities.push_back(Parity::Even);
      RatMatrix M = zero(N);
      M(a, b) = 1;
      M(n + a, n + b) = 1;
      mats.push_back(std::move(M));
      if (a == b) cartan.push_back(static_cast<int>(labels.size()) - 1);
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      labels.push_back("f_" + subscript(a + 1, b + 1));
      parities.push_back(Parity::Odd);
      RatMatrix M = zero(N);
      M(a, n + b) = 1;
      M(n + a, b) = 1;
      mats.push_back(std::move(M));
      if (a == b) cartan.push_back(static_cast<int>(labels.size()) - 1);
    }
  }
}

void buildP(int n, std::vector<std::string>& labels, std::vector<Parity>& parities,
            std::vector<RatMatrix>& mats, std::vector<int>& cartan) {
  const int N = 2 * n;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      labels.push_back("e_" + subscript(a + 1, b + 1));
      parities.push_back(Parity::Even);
      RatMatrix M = zero(N);
      M(a, b) = 1;
      M(n + b, n + a) = -1;
      mats.push_back(std::move(M));
      if (a == b) cartan.push_back(static_cast<int>(labels.size()) - 1);
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      labels.push_back("s_" + subscript(a + 1, b + 1));
      parities.push_back(Parity::Odd);
      RatMatrix M = zero(N);
      M(a, n + b) += 1;
      if (a != b) M(b, n + a) += 1;
      mats.push_back(std::move(M));
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      labels.push_back("y_" + subscript(a + 1, b + 1));
      parities.push_back(Parity::Odd);
      RatMatrix M = zero(N);
      M(n + a, b) = 1;
      M(n + b, a) = -1;
      mats.push_back(std::move(M));
    }
  }
}

void buildOsp12(std::vector<std::string>& labels, std::vector<Parity>& parities,
                std::vector<RatMatrix>& mats, std::vector<int>& cartan) {
  auto push = [&](const std::string& label, Parity p, RatMatrix M) {
    labels.push_back(label);
    parities.push_back(p);
    mats.push_back(std::move(M));
  };
  RatMatrix e = zero(3), f = zero(3), h = zero(3), E = zero(3), F = zero(3);
  e(1, 2) = 1;
  f(2, 1) = 1;
  h(1, 1) = 1;
  h(2, 2) = -1;
  E(0, 2) = 1;
  E(1, 0) = 1;
  F(0, 1) = 1;
  F(2, 0) = -1;
  push("e", Parity::Even, e);
  push("f", Parity::Even, f);
  push("h", Parity::Even, h);
  push("E", Parity::Odd, E);
  push("F", Parity::Odd, F);
  cartan = {2};
}

void buildOsp22(std::vector<std::string>& labels, std::vector<Parity>& parities,
                std::vector<RatMatrix>& mats, std::vector<int>& cartan) {
  auto push = [&](const std::string& label, Parity p, RatMatrix M) {
    labels.push_back(label);
    parities.push_back(p);
    mats.push_back(std::move(M));
  };
  RatMatrix e = zero(4), f = zero(4), h = zero(4), hp = zero(4);
  RatMatrix X = zero(4), Y = zero(4), U = zero(4), V = zero(4);
  e(2, 3) = 1;
  f(3, 2) = 1;
  h(2, 2) = 1;
  h(3, 3) = -1;
  hp(0, 0) = 1;
  hp(1, 1) = -1;
  X(0, 2) = 1;
  X(3, 1) = -1;
  Y(0, 3) = 1;
  Y(2, 1) = 1;
  U(1, 3) = 1;
  U(2, 0) = 1;
  V(1, 2) = 1;
  V(3, 0) = -1;
  push("e", Parity::Even, e);
  push("f", Parity::Even, f);
  push("h", Parity::Even, h);
  push("h'", Parity::Even, hp);
  push("X", Parity::Odd, X);
  push("Y", Parity::Odd, Y);
  push("U", Parity::Odd, U);
  push("V", Parity::Odd, V);
  cartan = {3, 2}; // ordered {h', h}: weight coordinates are (lambda_1, lambda_2)
}

} // namespace

LieSuperalgebra buildAlgebra(Family family, const std::vector<int>& params) {
  LieSuperalgebra alg;
  alg.family_ = family;
  alg.params_ = params;
  switch (family) {
    case Family::GL: {
      if (params.size() != 2 || params[0] < 1 || params[1] < 1)
        throw std::invalid_argument("gl(m|n) needs m, n >= 1");
      alg.evenBlock_ = params[0];
      buildGl(params[0], params[1], alg.labels_, alg.parities_, alg.matrices_, alg.cartan_);
      break;
    }
    case Family::Q: {
      if (params.size() != 1 || params[0] < 1) throw std::invalid_argument("q(n) needs n >= 1");
      alg.evenBlock_ = params[0];
      buildQ(params[0], alg.labels_, alg.parities_, alg.matrices_, alg.cartan_);
      break;
    }
    case Family::P: {
      if (params.size() != 1 || params[0] < 1) throw std::invalid_argument("p(n) needs n >= 1");
      alg.evenBlock_ = params[0];
      buildP(params[0], alg.labels_, alg.parities_, alg.matrices_, alg.cartan_);
      break;
    }
    case Family::OSP12: {
      if (!params.empty()) throw std::invalid_argument("osp(1|2) takes no parameters");
      alg.evenBlock_ = 1;
      buildOsp12(alg.labels_, alg.parities_, alg.matrices_, alg.cartan_);
      break;
    }
    case Family::OSP22: {
      if (!params.empty()) throw std::invalid_argument("osp(2|2) takes no parameters");
      alg.evenBlock_ = 2;
      buildOsp22(alg.labels_, alg.parities_, alg.matrices_, alg.cartan_);
      break;
    }
  }
  alg.generateStructure();
  return alg;
}

} // namespace superw
