#include "superw/pbw.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace superw {

PBWOrder PBWOrder::identity(const LieSuperalgebra& A) {
  PBWOrder order;
  order.rankOf_.resize(static_cast<std::size_t>(A.dim()));
  order.indexAt_.resize(static_cast<std::size_t>(A.dim()));
  std::iota(order.rankOf_.begin(), order.rankOf_.end(), 0);
  std::iota(order.indexAt_.begin(), order.indexAt_.end(), 0);
  order.firstMRank_ = A.dim();
  return order;
}

PBWOrder PBWOrder::mLast(const LieSuperalgebra& A, const ZGrading& grading,
                         const NilpotentData& nil) {
  std::vector<bool> inM(static_cast<std::size_t>(A.dim()), false);
  for (int i : nil.mBasis) inM[static_cast<std::size_t>(i)] = true;

  std::vector<int> complement;
  for (int i = 0; i < A.dim(); ++i) {
    if (!inM[static_cast<std::size_t>(i)]) complement.push_back(i);
  }
  auto bucket = [&](int i) {
    const int d = grading.degree(i);
    return d < 0 ? 0 : d == 0 ? 1 : 2;
  };
  std::stable_sort(complement.begin(), complement.end(),
                   [&](int a, int b) { return bucket(a) < bucket(b); });

  PBWOrder order;
  order.indexAt_ = complement;
  order.firstMRank_ = static_cast<int>(complement.size());
  for (int i : nil.mBasis) order.indexAt_.push_back(i);
  order.rankOf_.resize(order.indexAt_.size());
  for (std::size_t r = 0; r < order.indexAt_.size(); ++r) {
    order.rankOf_[static_cast<std::size_t>(order.indexAt_[r])] = static_cast<int>(r);
  }
  return order;
}

PBWOrder PBWOrder::fromSequence(const LieSuperalgebra& A, std::vector<int> indexAt) {
  if (static_cast<int>(indexAt.size()) != A.dim()) {
    throw std::invalid_argument("order sequence must cover the basis");
  }
  PBWOrder order;
  order.indexAt_ = std::move(indexAt);
  order.firstMRank_ = A.dim();
  order.rankOf_.assign(static_cast<std::size_t>(A.dim()), -1);
  for (std::size_t r = 0; r < order.indexAt_.size(); ++r) {
    const int idx = order.indexAt_[r];
    if (idx < 0 || idx >= A.dim() || order.rankOf_[static_cast<std::size_t>(idx)] != -1) {
      throw std::invalid_argument("order sequence must list every basis index once");
    }
    order.rankOf_[static_cast<std::size_t>(idx)] = static_cast<int>(r);
  }
  return order;
}

int PBWMonomial::totalDegree() const {
  int d = 0;
  for (const auto& [rank, exp] : factors) d += exp;
  return d;
}

UEAElement UEAElement::unit() {
  UEAElement one;
  one.add(PBWMonomial{}, 1);
  return one;
}

void UEAElement::add(const PBWMonomial& mon, const Rational& coeff) {
  if (superw::isZero(coeff)) return;
  auto it = terms_.find(mon);
  if (it == terms_.end()) {
    terms_.emplace(mon, coeff);
  } else {
    it->second += coeff;
    if (superw::isZero(it->second)) terms_.erase(it);
  }
}

UEAElement& UEAElement::operator+=(const UEAElement& other) {
  for (const auto& [mon, c] : other.terms_) add(mon, c);
  return *this;
}

UEAElement UEAElement::operator+(const UEAElement& other) const {
  UEAElement out = *this;
  out += other;
  return out;
}

UEAElement UEAElement::operator-(const UEAElement& other) const {
  return *this + other * Rational(-1);
}

UEAElement UEAElement::operator*(const Rational& factor) const {
  UEAElement out;
  if (superw::isZero(factor)) return out;
  for (const auto& [mon, c] : terms_) out.terms_.emplace(mon, c * factor);
  return out;
}

int PBWEngine::parityBitOfMonomial(const PBWMonomial& mon) const {
  int p = 0;
  for (const auto& [rank, exp] : mon.factors) {
    p += A_.parityBitOf(order_.indexAt(rank)) * exp;
  }
  return p & 1;
}

UEAElement PBWEngine::fromVector(const SuperVector& x) const {
  UEAElement out;
  for (const auto& [idx, c] : x.terms()) {
    PBWMonomial mon;
    mon.factors.emplace_back(order_.rankOf(idx), 1);
    out.add(mon, c);
  }
  return out;
}

UEAElement PBWEngine::normWord(const std::vector<int>& ranks) {
  if (auto it = memo_.find(ranks); it != memo_.end()) return it->second;

  enum class Kind { None, Swap, Square } kind = Kind::None;
  std::size_t at = 0;
  for (std::size_t t = 0; t + 1 < ranks.size(); ++t) {
    const int ri = ranks[t], rj = ranks[t + 1];
    if (ri > rj) {
      kind = Kind::Swap;
      at = t;
      break;
    }
    if (ri == rj && A_.parityBitOf(order_.indexAt(ri))) {
      kind = Kind::Square;
      at = t;
      break;
    }
  }

  UEAElement result;
  if (kind == Kind::None) {
    PBWMonomial mon;
    for (int r : ranks) {
      if (!mon.factors.empty() && mon.factors.back().first == r) {
        ++mon.factors.back().second;
      } else {
        mon.factors.emplace_back(r, 1);
      }
    }
    result.add(mon, 1);
  } else {
    const int i = order_.indexAt(ranks[at]);
    const int j = order_.indexAt(ranks[at + 1]);
    if (kind == Kind::Swap) {
      std::vector<int> swapped = ranks;
      std::swap(swapped[at], swapped[at + 1]);
      const int sign = (A_.parityBitOf(i) && A_.parityBitOf(j)) ? -1 : 1;
      result += normWord(swapped) * Rational(sign);
    }
    // bracket substitution removes the pair; for Square the bracket is [x,x]
    // and carries the 1/2 from x^2 = [x,x]/2
    const SuperVector br = A_.bracket(SuperVector::basis(i), SuperVector::basis(j));
    const Rational scale = kind == Kind::Square ? Rational(1, 2) : Rational(1);
    for (const auto& [k, c] : br.terms()) {
      std::vector<int> sub;
      sub.reserve(ranks.size() - 1);
      sub.insert(sub.end(), ranks.begin(), ranks.begin() + static_cast<long>(at));
      sub.push_back(order_.rankOf(k));
      sub.insert(sub.end(), ranks.begin() + static_cast<long>(at) + 2, ranks.end());
      result += normWord(sub) * (c * scale);
    }
    if (kind == Kind::Square && br.isZero()) {
      // x^2 = 0: nothing to add
    }
  }
  memo_.emplace(ranks, result);
  return result;
}

UEAElement PBWEngine::normalOrder(const std::vector<int>& wordIndices) {
  if (wordIndices.empty()) throw std::invalid_argument("empty word");
  std::vector<int> ranks;
  ranks.reserve(wordIndices.size());
  for (int idx : wordIndices) ranks.push_back(order_.rankOf(idx));
  return normWord(ranks);
}

UEAElement PBWEngine::multiply(const UEAElement& u, const UEAElement& v) {
  UEAElement out;
  for (const auto& [mu, cu] : u.terms()) {
    for (const auto& [mv, cv] : v.terms()) {
      std::vector<int> word;
      for (const auto& [rank, exp] : mu.factors) word.insert(word.end(), exp, rank);
      for (const auto& [rank, exp] : mv.factors) word.insert(word.end(), exp, rank);
      if (word.empty()) {
        out.add(PBWMonomial{}, cu * cv);
      } else {
        out += normWord(word) * (cu * cv);
      }
    }
  }
  return out;
}

UEAElement PBWEngine::adjointAct(int xIndex, const UEAElement& u) {
  const UEAElement x = generator(xIndex);
  UEAElement out;
  for (const auto& [mon, c] : u.terms()) {
    UEAElement single;
    single.add(mon, c);
    const int sign =
        (A_.parityBitOf(xIndex) && parityBitOfMonomial(mon)) ? -1 : 1;
    out += multiply(x, single) - multiply(single, x) * Rational(sign);
  }
  return out;
}

std::string PBWEngine::toJson(const UEAElement& u) const {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& [mon, c] : u.terms()) {
    nlohmann::ordered_json factors = nlohmann::ordered_json::array();
    for (const auto& [rank, exp] : mon.factors) {
      factors.push_back({A_.label(order_.indexAt(rank)), exp});
    }
    doc.push_back({factors, rationalToString(c)});
  }
  return doc.dump();
}

} // namespace superw
