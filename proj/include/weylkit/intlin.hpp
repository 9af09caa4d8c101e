// Exact integer linear algebra: Smith normal form, integer kernels and
// lattice bases, linear solving mod N with unsolvability certificates,
// finite abelian groups, and rational rotations (points of U(1) of finite
// order).  Everything is total and deterministic; entries are unbounded.

#ifndef WEYLKIT_INTLIN_HPP_
#define WEYLKIT_INTLIN_HPP_

#include "weylkit/errors.hpp"
#include "weylkit/scalars.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace weylkit {

// ---------------------------------------------------------------------------
// Smith normal form

struct SmithDecomposition {
  IMat U;  // unimodular, rows x rows
  IMat S;  // diagonal, d_1 | d_2 | ... | d_r, d_i >= 0
  IMat V;  // unimodular, cols x cols
  Index rank = 0;

  Int d(Index i) const { return (i < std::min(S.rows(), S.cols())) ? S(i, i) : Int(0); }
};

namespace detail {

// Pivot rule: smallest nonzero absolute value, ties broken by lowest row
// then column index.  Fixing this makes the decomposition reproducible.
inline bool find_pivot(const IMat& s, Index k, Index& pi, Index& pj) {
  bool found = false;
  Int best = 0;
  for (Index i = k; i < s.rows(); ++i)
    for (Index j = k; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      Int a = abs(s(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IMat& a) {
  const Index m = a.rows(), n = a.cols();
  SmithDecomposition out;
  out.U = IMat::Identity(m, m);
  out.V = IMat::Identity(n, n);
  out.S = a;
  IMat& U = out.U;
  IMat& V = out.V;
  IMat& S = out.S;

  const Index steps = std::min(m, n);
  Index k = 0;
  for (; k < steps; ++k) {
    Index pi, pj;
    if (!detail::find_pivot(S, k, pi, pj)) break;
    if (pi != k) {
      S.row(pi).swap(S.row(k));
      U.row(pi).swap(U.row(k));
    }
    if (pj != k) {
      S.col(pj).swap(S.col(k));
      V.col(pj).swap(V.col(k));
    }
    for (;;) {
      // Clear column k below the pivot, then row k to its right.  A nonzero
      // remainder becomes the new (strictly smaller) pivot.
      bool dirty = false;
      for (Index i = k + 1; i < m; ++i) {
        if (S(i, k) == 0) continue;
        Int q = S(i, k) / S(k, k);  // truncated
        if (q != 0) {
          S.row(i) -= (q * S.row(k)).eval();
          U.row(i) -= (q * U.row(k)).eval();
        }
        if (S(i, k) != 0) dirty = true;
      }
      for (Index j = k + 1; j < n; ++j) {
        if (S(k, j) == 0) continue;
        Int q = S(k, j) / S(k, k);
        if (q != 0) {
          S.col(j) -= (q * S.col(k)).eval();
          V.col(j) -= (q * V.col(k)).eval();
        }
        if (S(k, j) != 0) dirty = true;
      }
      if (dirty) {
        Index qi, qj;
        detail::find_pivot(S, k, qi, qj);
        if (qi != k) {
          S.row(qi).swap(S.row(k));
          U.row(qi).swap(U.row(k));
        }
        if (qj != k) {
          S.col(qj).swap(S.col(k));
          V.col(qj).swap(V.col(k));
        }
        continue;
      }
      // Column and row are clear.  Enforce the divisibility chain: the pivot
      // must divide every entry of the remaining submatrix.
      bool fixed = true;
      for (Index i = k + 1; i < m && fixed; ++i)
        for (Index j = k + 1; j < n && fixed; ++j)
          if (S(i, j) % S(k, k) != 0) {
            S.row(k) += S.row(i);
            U.row(k) += U.row(i);
            fixed = false;
          }
      if (fixed) break;
    }
    if (S(k, k) < 0) {
      S.row(k) = -S.row(k);
      U.row(k) = -U.row(k);
    }
  }
  out.rank = k;
  return out;
}

// Exact determinant (via rational elimination; input need not be unimodular).
inline Rat det_rational(const RMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  if (m.rows() == 0) return Rat(1);
  return Eigen::FullPivLU<RMat>(m).determinant();
}

inline Int det_integer(const IMat& m) {
  Rat d = det_rational(to_rational(m));
  if (d.get_den() != 1) throw std::logic_error("integer determinant not integral");
  return d.get_num();
}

inline bool is_unimodular(const IMat& m) {
  if (m.rows() != m.cols()) return false;
  Int d = det_integer(m);
  return d == 1 || d == -1;
}

// ---------------------------------------------------------------------------
// Lattices inside Z^n, presented by generator matrices (columns = generators).

// Basis of {x in Z^n : a x = 0}.  The result is a saturated sublattice.
inline IMat integer_kernel(const IMat& a) {
  SmithDecomposition snf = smith_normal_form(a);
  const Index n = a.cols();
  IMat basis(n, n - snf.rank);
  for (Index j = snf.rank; j < n; ++j) basis.col(j - snf.rank) = snf.V.col(j);
  return basis;
}

// Basis (n x r) of the lattice generated by the columns of g.
inline IMat lattice_basis(const IMat& g) {
  SmithDecomposition snf = smith_normal_form(g);
  RMat uinv = to_rational(snf.U).inverse();
  IMat ui = to_integral(uinv);
  IMat basis(g.rows(), snf.rank);
  for (Index j = 0; j < snf.rank; ++j) basis.col(j) = ui.col(j) * snf.d(j);
  return basis;
}

// Basis of the saturation QL ∩ Z^n of the lattice L spanned by g.
inline IMat lattice_saturation(const IMat& g) {
  SmithDecomposition snf = smith_normal_form(g);
  RMat uinv = to_rational(snf.U).inverse();
  IMat ui = to_integral(uinv);
  IMat basis(g.rows(), snf.rank);
  for (Index j = 0; j < snf.rank; ++j) basis.col(j) = ui.col(j);
  return basis;
}

inline bool in_lattice(const SmithDecomposition& snf, const IVec& x) {
  IVec u = snf.U * x;
  for (Index i = 0; i < u.size(); ++i) {
    Int di = snf.d(i);
    if (di == 0) {
      if (u(i) != 0) return false;
    } else if (u(i) % di != 0) {
      return false;
    }
  }
  return true;
}

inline bool in_lattice(const IMat& g, const IVec& x) {
  return in_lattice(smith_normal_form(g), x);
}

// ---------------------------------------------------------------------------
// Linear solving over Z/N

struct ModSolution {
  bool solvable = false;
  IVec x;            // one solution with A x = b (mod N), entries in [0, N)
  IVec certificate;  // if unsolvable: y with y^T A = 0 and y^T b != 0 (mod N)
};

// Modular inverse of a mod n, gcd(a, n) = 1.
inline Int mod_inverse(const Int& a, const Int& n) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()) == 0)
    throw std::invalid_argument("mod_inverse: not invertible");
  return r;
}

inline ModSolution solve_mod(const IMat& a, const IVec& b, const Int& modulus) {
  if (modulus < 2) throw schema_error("solve_mod: modulus must be >= 2");
  if (a.rows() != b.size()) throw schema_error("solve_mod: dimension mismatch");
  SmithDecomposition snf = smith_normal_form(a);
  IVec c = snf.U * b;
  IVec y = IVec::Zero(a.cols());
  ModSolution out;
  for (Index i = 0; i < a.rows(); ++i) {
    Int si = (i < snf.rank) ? snf.S(i, i) : Int(0);
    Int g = gcd(si, modulus);  // g = N when the row of S is zero
    if (fmod_pos(c(i), g) != 0) {
      out.solvable = false;
      out.certificate = (exact_div(modulus, g) * snf.U.row(i).transpose()).eval();
      for (Index t = 0; t < out.certificate.size(); ++t)
        out.certificate(t) = fmod_pos(out.certificate(t), modulus);
      return out;
    }
    if (i < snf.rank) {
      Int ng = exact_div(modulus, g);
      Int inv = mod_inverse(fmod_pos(exact_div(si, g), ng), ng);
      y(i) = fmod_pos(exact_div(c(i), g) * inv, ng);
    }
  }
  out.solvable = true;
  out.x = snf.V * y;
  for (Index t = 0; t < out.x.size(); ++t) out.x(t) = fmod_pos(out.x(t), modulus);
  return out;
}

// ---------------------------------------------------------------------------
// Finite abelian groups in invariant-factor form

struct FiniteAbelianGroup {
  std::vector<Int> factors;  // d_1 | d_2 | ... , every d_i >= 2; empty = trivial

  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<Int> f) : factors(std::move(f)) {
    for (size_t i = 0; i < factors.size(); ++i) {
      if (factors[i] < 2) throw std::invalid_argument("invariant factor < 2");
      if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
        throw std::invalid_argument("divisibility chain violated");
    }
  }

  size_t length() const { return factors.size(); }

  Int order() const {
    Int o = 1;
    for (const Int& d : factors) o *= d;
    return o;
  }

  IVec zero() const { return IVec::Zero(static_cast<Index>(factors.size())); }

  IVec reduce(const IVec& a) const {
    IVec r = a;
    for (Index i = 0; i < r.size(); ++i) r(i) = fmod_pos(r(i), factors[static_cast<size_t>(i)]);
    return r;
  }

  IVec add(const IVec& a, const IVec& b) const { return reduce(a + b); }
  IVec neg(const IVec& a) const { return reduce(-a); }

  Int element_order(const IVec& a) const {
    Int o = 1;
    for (Index i = 0; i < a.size(); ++i) {
      Int d = factors[static_cast<size_t>(i)];
      Int g = gcd(fmod_pos(a(i), d), d);
      o = lcm(o, exact_div(d, g));
    }
    return o;
  }

  std::vector<IVec> elements(const Int& guard = Int(1 << 20)) const {
    if (order() > guard) throw guard_error("finite abelian group too large to enumerate");
    std::vector<IVec> out;
    out.push_back(zero());
    for (size_t i = 0; i < factors.size(); ++i) {
      std::vector<IVec> next;
      next.reserve(out.size() * static_cast<size_t>(factors[i].get_ui()));
      for (Int v = 0; v < factors[i]; ++v)
        for (const IVec& e : out) {
          IVec f = e;
          f(static_cast<Index>(i)) = v;
          next.push_back(f);
        }
      out = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const IVec& a, const IVec& b) {
      for (Index i = 0; i < a.size(); ++i) {
        if (a(i) < b(i)) return true;
        if (a(i) > b(i)) return false;
      }
      return false;
    });
    return out;
  }
};

// ---------------------------------------------------------------------------
// Quotients Z^n / L with the explicit projection map

struct LatticeQuotient {
  FiniteAbelianGroup torsion;
  Index free_rank = 0;
  IMat u;                          // SNF row transform of the generator matrix
  std::vector<Index> torsion_rows; // rows of u with invariant factor >= 2

  // Image of x in the torsion part, as a tuple over the invariant factors.
  IVec project(const IVec& x) const {
    IVec ux = u * x;
    IVec out(static_cast<Index>(torsion_rows.size()));
    for (size_t i = 0; i < torsion_rows.size(); ++i)
      out(static_cast<Index>(i)) = fmod_pos(ux(torsion_rows[i]), torsion.factors[i]);
    return out;
  }
};

// Invariant factors of Z^ambient_rank / <columns of gens>.  Only the torsion
// part enters the group; the free rank is reported separately.
inline LatticeQuotient lattice_quotient(Index ambient_rank, const IMat& gens) {
  if (gens.rows() != ambient_rank)
    throw schema_error("lattice_quotient: generator length does not match ambient rank");
  SmithDecomposition snf = smith_normal_form(gens);
  LatticeQuotient out;
  out.u = snf.U;
  out.free_rank = ambient_rank - snf.rank;
  std::vector<Int> factors;
  for (Index i = 0; i < snf.rank; ++i) {
    if (snf.d(i) >= 2) {
      factors.push_back(snf.d(i));
      out.torsion_rows.push_back(i);
    }
  }
  out.torsion = FiniteAbelianGroup(std::move(factors));
  return out;
}

// ---------------------------------------------------------------------------
// Rational rotations: exp(2 pi i p/q) represented by p/q in [0, 1)

struct RationalRotation {
  Rat frac;  // normalized to [0, 1)

  RationalRotation() : frac(0) {}
  explicit RationalRotation(const Rat& turns) : frac(normalize(turns)) {}
  RationalRotation(const Int& p, const Int& q) : frac(normalize(make_rat(p, q))) {}

  static Rat normalize(const Rat& r) {
    Int fl = fdiv(r.get_num(), r.get_den());
    Rat out = r - Rat(fl);
    return out;
  }

  RationalRotation operator+(const RationalRotation& o) const {
    return RationalRotation(frac + o.frac);
  }
  RationalRotation operator-(const RationalRotation& o) const {
    return RationalRotation(frac - o.frac);
  }
  RationalRotation operator-() const { return RationalRotation(-frac); }
  RationalRotation scaled(const Int& k) const { return RationalRotation(Rat(k) * frac); }

  bool operator==(const RationalRotation& o) const { return frac == o.frac; }
  bool operator!=(const RationalRotation& o) const { return frac != o.frac; }
  bool operator<(const RationalRotation& o) const { return frac < o.frac; }

  bool is_zero() const { return frac == 0; }
  bool is_half() const { return frac == Rat(1, 2); }

  // Order as an element of U(1); equals the reduced denominator.
  Int order() const { return frac.get_den(); }

  std::string str() const { return rat_to_string(frac); }
};

}  // namespace weylkit

#endif  // WEYLKIT_INTLIN_HPP_
