// Exact scalar types used throughout: arbitrary-precision integers and
// rationals (GMP) plugged into Eigen dense matrices as custom scalars.

#ifndef WEYLKIT_SCALARS_HPP_
#define WEYLKIT_SCALARS_HPP_

#include <gmpxx.h>

#include <Eigen/Dense>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 60
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 120,
    MulCost = 120
  };
};

}  // namespace Eigen

namespace weylkit {

using Int = mpz_class;
using Rat = mpq_class;

using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int rat_num(const Rat& r) { return r.get_num(); }
inline Int rat_den(const Rat& r) { return r.get_den(); }

// "p/q" (or plain "p"); used by all JSON surfaces to keep fractions exact.
inline std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << r.get_num();
  if (r.get_den() != 1) os << '/' << r.get_den();
  return os.str();
}

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Rat r{Int(s)};
      return r;
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return make_rat(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("cannot parse rational '" + s + "'");
  }
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Floor division and the matching nonnegative remainder.
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int fmod_pos(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Exact quotient; caller guarantees divisibility.
inline Int exact_div(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline long to_long(const Int& a) {
  if (!a.fits_slong_p()) throw std::overflow_error("integer does not fit a machine long");
  return a.get_si();
}

// Lexicographic keys for associative containers over small integer vectors
// and matrices (group elements, roots).  Entries are expected to stay small.
using VecKey = std::vector<long>;

inline VecKey vec_key(const IVec& v) {
  VecKey k(static_cast<size_t>(v.size()));
  for (Index i = 0; i < v.size(); ++i) k[static_cast<size_t>(i)] = to_long(v(i));
  return k;
}

inline VecKey mat_key(const IMat& m) {
  VecKey k;
  k.reserve(static_cast<size_t>(m.size()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) k.push_back(to_long(m(i, j)));
  return k;
}

inline RMat to_rational(const IMat& m) {
  RMat r(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

inline RVec to_rational(const IVec& v) {
  RVec r(v.size());
  for (Index i = 0; i < v.size(); ++i) r(i) = Rat(v(i));
  return r;
}

// Clears denominators; returns the integer matrix and the common denominator.
inline std::pair<IMat, Int> clear_denominators(const RMat& m) {
  Int den = 1;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) den = lcm(den, m(i, j).get_den());
  IMat out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      out(i, j) = m(i, j).get_num() * exact_div(den, m(i, j).get_den());
  return {out, den};
}

inline bool is_integral(const RMat& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j).get_den() != 1) return false;
  return true;
}

inline IMat to_integral(const RMat& m) {
  if (!is_integral(m)) throw std::invalid_argument("matrix is not integral");
  IMat out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_num();
  return out;
}

}  // namespace weylkit

#endif  // WEYLKIT_SCALARS_HPP_
