#ifndef SUPERW_RATIONAL_HPP
#define SUPERW_RATIONAL_HPP

#include <gmpxx.h>
#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace superw {

/// Exact rational scalar. GMP keeps values canonical (lowest terms,
/// positive denominator); no floating point is used anywhere.
using Rational = mpq_class;

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Parses "p", "-p/q" or "p/q" with q > 0 after canonicalization.
Rational rationalFromString(const std::string& text);

/// Serializes as "p" or "p/q" with gcd(p,q)=1 and q>0.
std::string rationalToString(const Rational& value);

inline bool isZero(const Rational& value) { return sgn(value) == 0; }

/// mpq_class(num, den) does not reduce; this does.
inline Rational makeRational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

} // namespace superw

namespace Eigen {
template <>
struct NumTraits<superw::Rational> : GenericNumTraits<superw::Rational> {
  typedef superw::Rational Real;
  typedef superw::Rational NonInteger;
  typedef superw::Rational Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};
} // namespace Eigen

#endif // SUPERW_RATIONAL_HPP
