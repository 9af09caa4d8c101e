// Root data (X, Y, R_0, R_0^v, F_0) with label functions, the associated
// non-reduced system R_nr and its reduced subsystem R_1, and parabolic
// restriction.  Roots are stored in coordinates with respect to a basis of
// the lattice X, so that X = Z^n, Y = Z^n under the standard pairing and
// every Weyl element is an integer matrix.

#ifndef WEYLKIT_ROOTDATUM_HPP_
#define WEYLKIT_ROOTDATUM_HPP_

#include "weylkit/errors.hpp"
#include "weylkit/intlin.hpp"
#include "weylkit/scalars.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace weylkit {

inline bool all_zero(const RMat& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

struct RootDatum {
  Index rank = 0;               // rank of X
  std::vector<IVec> roots;      // R_0 in X-coordinates
  std::vector<IVec> coroots;    // matched coroots in Y-coordinates
  std::vector<int> simple;      // indices into roots: the ordered basis F_0
  std::vector<bool> positive;   // per root
  std::vector<RVec> simple_coefficients;  // per root: expansion over F_0

  // Construction metadata (realization coordinates), kept for reports.
  std::string family = "custom";
  Index semisimple_rank = 0;
  std::string lattice_name = "custom";
  RMat realization_basis;  // columns: basis of X in the standard realization

  Index num_roots() const { return static_cast<Index>(roots.size()); }
  Index num_simple() const { return static_cast<Index>(simple.size()); }

  const IVec& simple_root(int i) const { return roots[static_cast<size_t>(simple[static_cast<size_t>(i)])]; }
  const IVec& simple_coroot(int i) const { return coroots[static_cast<size_t>(simple[static_cast<size_t>(i)])]; }

  static Int pairing(const IVec& x, const IVec& y) {
    Int s = 0;
    for (Index i = 0; i < x.size(); ++i) s += x(i) * y(i);
    return s;
  }

  // s_alpha(x) = x - <x, alpha^v> alpha as a matrix on X.
  IMat reflection_matrix(int root_index) const {
    const IVec& a = roots[static_cast<size_t>(root_index)];
    const IVec& av = coroots[static_cast<size_t>(root_index)];
    IMat m = IMat::Identity(rank, rank);
    m -= (a * av.transpose()).eval();
    return m;
  }

  IMat simple_reflection(int i) const { return reflection_matrix(simple[static_cast<size_t>(i)]); }

  int find_root(const IVec& v) const {
    auto it = root_index_.find(vec_key(v));
    return it == root_index_.end() ? -1 : it->second;
  }

  bool semisimple() const { return semisimple_rank == rank; }

  // Populates derived fields and checks the root-datum axioms.
  void finalize();

 private:
  std::map<VecKey, int> root_index_;
};

inline void RootDatum::finalize() {
  if (roots.size() != coroots.size()) throw schema_error("roots/coroots length mismatch");
  root_index_.clear();
  for (size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].size() != rank || coroots[i].size() != rank)
      throw schema_error("root of wrong rank");
    if (pairing(roots[i], coroots[i]) != 2)
      throw schema_error("<alpha, alpha^v> != 2");
    if (!root_index_.emplace(vec_key(roots[i]), static_cast<int>(i)).second)
      throw schema_error("duplicate root");
  }
  // Reduced: 2*alpha is never a root.
  for (const IVec& a : roots)
    if (root_index_.count(vec_key((2 * a).eval()))) throw schema_error("R_0 is not reduced");

  // F_0 linearly independent.
  semisimple_rank = static_cast<Index>(simple.size());
  if (semisimple_rank == 0) {
    if (!roots.empty()) throw schema_error("roots present but F_0 is empty");
    positive.clear();
    simple_coefficients.clear();
    return;
  }
  RMat f(rank, semisimple_rank);
  for (Index j = 0; j < semisimple_rank; ++j)
    f.col(j) = to_rational(roots[static_cast<size_t>(simple[static_cast<size_t>(j)])]);
  Eigen::FullPivLU<RMat> lu(f);
  if (lu.rank() != semisimple_rank)
    throw schema_error("simple roots not linearly independent");

  // Every root is a nonnegative or nonpositive integer combination of F_0.
  positive.assign(roots.size(), false);
  simple_coefficients.assign(roots.size(), RVec());
  for (size_t i = 0; i < roots.size(); ++i) {
    RVec rhs = to_rational(roots[i]);
    RVec c = lu.solve(rhs);
    if (!all_zero(f * c - rhs)) throw schema_error("root outside the span of F_0");
    bool nonneg = true, nonpos = true;
    for (Index j = 0; j < c.size(); ++j) {
      if (c(j).get_den() != 1) throw schema_error("root is not an integer combination of F_0");
      if (c(j) > 0) nonpos = false;
      if (c(j) < 0) nonneg = false;
    }
    if (!nonneg && !nonpos) throw schema_error("root neither positive nor negative");
    positive[i] = nonneg;
    simple_coefficients[i] = c;
  }

  // Reflections permute R_0 and respect the coroot matching.
  for (int s = 0; s < static_cast<int>(simple.size()); ++s) {
    IMat m = simple_reflection(s);
    const IVec& sv = simple_coroot(s);
    const IVec& sr = simple_root(s);
    for (size_t i = 0; i < roots.size(); ++i) {
      IVec img = m * roots[i];
      int j = find_root(img);
      if (j < 0) throw schema_error("reflection does not permute R_0");
      IVec cimg = coroots[i] - (sv * pairing(sr, coroots[i])).eval();
      if (cimg != coroots[static_cast<size_t>(j)])
        throw schema_error("reflection does not permute coroots consistently");
    }
  }
}

// ---------------------------------------------------------------------------
// The non-reduced system R_nr and the reduced subsystem R_1

struct NonReducedData {
  std::vector<IVec> roots;      // R_nr: the roots of R_0 first, then doubles
  std::vector<IVec> coroots;    // (2a)^v = a^v / 2
  std::vector<bool> positive;
  std::vector<int> double_of;   // index of 2a in this list, or -1; sized |R_0|
  std::vector<int> r1;          // indices forming R_1 = {a : 2a not in R_nr}
  std::vector<int> f1;          // simple basis of R_1

  int find(const IVec& v) const {
    auto it = index_.find(vec_key(v));
    return it == index_.end() ? -1 : it->second;
  }
  void build_index() {
    index_.clear();
    for (size_t i = 0; i < roots.size(); ++i) index_[vec_key(roots[i])] = static_cast<int>(i);
  }

 private:
  std::map<VecKey, int> index_;
};

// R_nr = R_0 ∪ {2a : a^v in 2Y}.
inline NonReducedData nonreduced_and_r1(const RootDatum& rd) {
  NonReducedData nr;
  nr.roots = rd.roots;
  nr.coroots = rd.coroots;
  nr.positive = rd.positive;
  nr.double_of.assign(rd.roots.size(), -1);
  for (size_t i = 0; i < rd.roots.size(); ++i) {
    bool halvable = true;
    for (Index k = 0; k < rd.rank; ++k)
      if (rd.coroots[i](k) % 2 != 0) halvable = false;
    if (halvable) {
      nr.double_of[i] = static_cast<int>(nr.roots.size());
      nr.roots.push_back((2 * rd.roots[i]).eval());
      IVec cv(rd.rank);
      for (Index k = 0; k < rd.rank; ++k) cv(k) = exact_div(rd.coroots[i](k), Int(2));
      nr.coroots.push_back(cv);
      nr.positive.push_back(rd.positive[i]);
    }
  }
  nr.build_index();
  for (size_t i = 0; i < nr.roots.size(); ++i)
    if (nr.find((2 * nr.roots[i]).eval()) < 0) nr.r1.push_back(static_cast<int>(i));
  for (int si : rd.simple) {
    int d = nr.double_of[static_cast<size_t>(si)];
    nr.f1.push_back(d >= 0 ? d : si);
  }
  return nr;
}

// ---------------------------------------------------------------------------
// Label functions

// Positive W_0-invariant weights q_{a^v} on R_nr^v, keyed by the root vector.
struct LabelFunction {
  std::map<VecKey, Rat> q;

  const Rat& operator()(const IVec& nr_root) const {
    auto it = q.find(vec_key(nr_root));
    if (it == q.end()) throw schema_error("label requested for a vector outside R_nr");
    return it->second;
  }
  bool has(const IVec& v) const { return q.count(vec_key(v)) > 0; }
};

namespace detail {

// Orbit of one R_nr element under the simple reflections.
inline std::vector<int> nr_orbit(const RootDatum& rd, const NonReducedData& nr, int start) {
  std::vector<int> orbit{start};
  std::set<int> seen{start};
  for (size_t h = 0; h < orbit.size(); ++h)
    for (int s = 0; s < static_cast<int>(rd.simple.size()); ++s) {
      IVec img = rd.simple_reflection(s) * nr.roots[static_cast<size_t>(orbit[h])];
      int j = nr.find(img);
      if (j < 0) throw std::logic_error("R_nr not closed under W_0");
      if (seen.insert(j).second) orbit.push_back(j);
    }
  return orbit;
}

}  // namespace detail

inline LabelFunction uniform_labels(const RootDatum&, const NonReducedData& nr, const Rat& value) {
  if (value <= 0) throw schema_error("labels must be positive");
  LabelFunction lf;
  for (const IVec& a : nr.roots) lf.q[vec_key(a)] = value;
  return lf;
}

// Assignments are given on orbit representatives (as R_nr root vectors in
// X-coordinates) and closed under W_0.  Every orbit must get exactly one value.
inline LabelFunction make_labels(const RootDatum& rd, const NonReducedData& nr,
                                 const std::vector<std::pair<IVec, Rat>>& assignments) {
  LabelFunction lf;
  for (const auto& [vec, value] : assignments) {
    if (value <= 0) throw schema_error("labels must be positive");
    int i = nr.find(vec);
    if (i < 0) throw schema_error("label assigned to a vector outside R_nr");
    for (int j : detail::nr_orbit(rd, nr, i)) {
      auto [it, fresh] = lf.q.emplace(vec_key(nr.roots[static_cast<size_t>(j)]), value);
      if (!fresh && it->second != value)
        throw schema_error("label assignment is not W_0-invariant");
    }
  }
  if (lf.q.size() != nr.roots.size())
    throw schema_error("label assignment does not cover all of R_nr");
  return lf;
}

// q(w) = prod over R_nr,+ ∩ w^{-1} R_nr,- of q_{a^v}; exact rational.
inline Rat label_of_weyl_element(const RootDatum&, const NonReducedData& nr,
                                 const LabelFunction& labels, const IMat& w) {
  Rat out(1);
  for (size_t i = 0; i < nr.roots.size(); ++i) {
    if (!nr.positive[i]) continue;
    IVec img = w * nr.roots[i];
    int j = nr.find(img);
    if (j < 0) throw std::logic_error("Weyl element does not permute R_nr");
    if (!nr.positive[static_cast<size_t>(j)]) out *= labels(nr.roots[i]);
  }
  return out;
}

// l(w) = |R_{0,+} ∩ w^{-1} R_{0,-}|.
inline Index weyl_length(const RootDatum& rd, const IMat& w) {
  Index len = 0;
  for (size_t i = 0; i < rd.roots.size(); ++i) {
    if (!rd.positive[i]) continue;
    int j = rd.find_root((w * rd.roots[i]).eval());
    if (j < 0) throw std::logic_error("not a Weyl matrix");
    if (!rd.positive[static_cast<size_t>(j)]) ++len;
  }
  return len;
}

// ---------------------------------------------------------------------------
// Classical constructions

enum class Family { A, B, C, D };

inline Family family_from_string(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw schema_error("unknown family '" + s + "'");
}

// Lattice choice: a named lattice or an explicit generator matrix in the
// standard realization coordinates (columns = generators).
struct LatticeSpec {
  std::string name = "root";  // root | weight | standard | plus | minus
  std::optional<RMat> generators;
};

namespace detail {

struct Realization {
  Index dim;  // ambient dimension
  std::vector<RVec> simple_roots;
  std::vector<RVec> simple_coroots;
};

inline Realization classical_realization(Family fam, Index n) {
  Realization re;
  auto unit = [](Index m, Index i) {
    RVec v = RVec::Zero(m);
    v(i) = 1;
    return v;
  };
  switch (fam) {
    case Family::A: {
      if (n < 1) throw schema_error("family A needs rank >= 1");
      re.dim = n + 1;
      for (Index i = 0; i < n; ++i) {
        RVec r = unit(re.dim, i) - unit(re.dim, i + 1);
        re.simple_roots.push_back(r);
        re.simple_coroots.push_back(r);
      }
      break;
    }
    case Family::B: {
      if (n < 2) throw schema_error("family B needs rank >= 2");
      re.dim = n;
      for (Index i = 0; i + 1 < n; ++i) {
        RVec r = unit(n, i) - unit(n, i + 1);
        re.simple_roots.push_back(r);
        re.simple_coroots.push_back(r);
      }
      re.simple_roots.push_back(unit(n, n - 1));
      re.simple_coroots.push_back(2 * unit(n, n - 1));
      break;
    }
    case Family::C: {
      if (n < 2) throw schema_error("family C needs rank >= 2");
      re.dim = n;
      for (Index i = 0; i + 1 < n; ++i) {
        RVec r = unit(n, i) - unit(n, i + 1);
        re.simple_roots.push_back(r);
        re.simple_coroots.push_back(r);
      }
      re.simple_roots.push_back(2 * unit(n, n - 1));
      re.simple_coroots.push_back(unit(n, n - 1));
      break;
    }
    case Family::D: {
      if (n < 4) throw schema_error("family D needs rank >= 4");
      re.dim = n;
      for (Index i = 0; i + 1 < n; ++i) {
        RVec r = unit(n, i) - unit(n, i + 1);
        re.simple_roots.push_back(r);
        re.simple_coroots.push_back(r);
      }
      RVec r = unit(n, n - 2) + unit(n, n - 1);
      re.simple_roots.push_back(r);
      re.simple_coroots.push_back(r);
      break;
    }
  }
  return re;
}

// Fundamental weights as combinations of the simple roots, so they stay in
// the root span even when the realization is not of full rank (family A).
inline std::vector<RVec> fundamental_weights(const Realization& re) {
  const Index n = static_cast<Index>(re.simple_roots.size());
  RMat cartan(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      cartan(i, j) =
          re.simple_roots[static_cast<size_t>(j)].dot(re.simple_coroots[static_cast<size_t>(i)]);
  RMat cinv = cartan.inverse();
  std::vector<RVec> out;
  for (Index i = 0; i < n; ++i) {
    RVec w = RVec::Zero(re.dim);
    for (Index k = 0; k < n; ++k) w += cinv(k, i) * re.simple_roots[static_cast<size_t>(k)];
    out.push_back(w);
  }
  return out;
}

inline RMat classical_lattice(Family fam, Index n, const Realization& re, const LatticeSpec& spec) {
  if (spec.generators) {
    if (spec.generators->rows() != re.dim)
      throw schema_error("lattice generators have the wrong ambient dimension");
    return *spec.generators;
  }
  if (spec.name == "root") {
    RMat l(re.dim, n);
    for (Index j = 0; j < n; ++j) l.col(j) = re.simple_roots[static_cast<size_t>(j)];
    return l;
  }
  if (spec.name == "weight") {
    auto w = fundamental_weights(re);
    RMat l(re.dim, n);
    for (Index j = 0; j < n; ++j) l.col(j) = w[static_cast<size_t>(j)];
    return l;
  }
  if (spec.name == "standard") {
    if (fam == Family::A) throw schema_error("lattice 'standard' is not defined for family A");
    return RMat::Identity(re.dim, n);
  }
  if (spec.name == "plus" || spec.name == "minus") {
    if (fam != Family::D || n % 2 != 0)
      throw schema_error("lattices 'plus'/'minus' exist only for D_n with n even");
    RMat l = RMat::Zero(re.dim, n);
    for (Index j = 0; j + 1 < n; ++j) {
      l(j, j) = 1;
      l(j + 1, j) = -1;
    }
    for (Index i = 0; i < n; ++i) l(i, n - 1) = Rat(1, 2);
    if (spec.name == "minus") l(n - 1, n - 1) = Rat(-1, 2);
    return l;
  }
  throw schema_error("unknown lattice '" + spec.name + "'");
}

}  // namespace detail

// Builds a validated classical root datum in X-coordinates.  The lattice
// must contain the root lattice and be W_0-stable; stability is equivalent
// to all coroots pairing integrally with it (X inside the weight lattice).
inline RootDatum build_classical(Family fam, Index n, const LatticeSpec& spec) {
  detail::Realization re = detail::classical_realization(fam, n);
  RMat l = detail::classical_lattice(fam, n, re, spec);
  if (l.cols() != n) throw schema_error("lattice must have full rank");
  {
    Eigen::FullPivLU<RMat> lu(l);
    if (lu.rank() != n) throw schema_error("lattice generators are not independent");
  }

  // Close the simple roots under the simple reflections in realization
  // coordinates (roots of classical systems are integer vectors there).
  std::vector<RVec> roots = re.simple_roots;
  std::vector<RVec> coroots = re.simple_coroots;
  auto realization_key = [](const RVec& v) {
    VecKey k;
    for (Index i = 0; i < v.size(); ++i) {
      if (v(i).get_den() != 1) throw std::logic_error("non-integral realization root");
      k.push_back(to_long(v(i).get_num()));
    }
    return k;
  };
  std::map<VecKey, int> seen;
  for (size_t i = 0; i < roots.size(); ++i) seen[realization_key(roots[i])] = static_cast<int>(i);
  for (size_t h = 0; h < roots.size(); ++h) {
    for (size_t s = 0; s < re.simple_roots.size(); ++s) {
      Rat pair = roots[h].dot(re.simple_coroots[s]);
      RVec img = roots[h] - pair * re.simple_roots[s];
      Rat cpair = re.simple_roots[s].dot(coroots[h]);
      RVec cimg = coroots[h] - cpair * re.simple_coroots[s];
      VecKey k = realization_key(img);
      if (!seen.count(k)) {
        seen[k] = static_cast<int>(roots.size());
        roots.push_back(img);
        coroots.push_back(cimg);
      }
    }
  }

  RootDatum rd;
  rd.rank = n;
  rd.family = (fam == Family::A ? "A" : fam == Family::B ? "B" : fam == Family::C ? "C" : "D");
  rd.lattice_name = spec.generators ? "custom" : spec.name;
  rd.realization_basis = l;
  Eigen::FullPivLU<RMat> solver(l);
  for (size_t i = 0; i < roots.size(); ++i) {
    RVec cx = solver.solve(roots[i]);
    if (!all_zero((l * cx - roots[i]).eval()))
      throw schema_error("invalid lattice: roots do not lie in its span");
    RMat cxm(n, 1);
    cxm.col(0) = cx;
    if (!is_integral(cxm))
      throw schema_error("invalid lattice: does not contain the root lattice");
    RMat cvm(n, 1);
    for (Index j = 0; j < n; ++j) cvm(j, 0) = l.col(j).dot(coroots[i]);
    if (!is_integral(cvm))
      throw schema_error("invalid lattice: not W_0-stable (a coroot pairs non-integrally)");
    rd.roots.push_back(to_integral(cxm).col(0));
    rd.coroots.push_back(to_integral(cvm).col(0));
  }
  for (Index s = 0; s < n; ++s) rd.simple.push_back(static_cast<int>(s));
  rd.finalize();
  return rd;
}

inline RootDatum build_classical(Family fam, Index n, const std::string& lattice) {
  LatticeSpec spec;
  spec.name = lattice;
  return build_classical(fam, n, spec);
}

// ---------------------------------------------------------------------------
// Parabolic restriction

struct ParabolicRestriction {
  std::vector<int> p;            // positions in F_0, sorted
  std::vector<int> roots_p;      // indices of R_P inside rd.roots
  RMat projection;               // pi_P on X ⊗ Q, in X-coordinates
  RMat xp_basis;                 // n x |P|: basis of X_P (inside X ⊗ Q)
  IMat x_cap_span;               // n x |P|: basis of X ∩ RP
  IMat x_cap_perp;               // basis of X ∩ (P^v)-perp
  Int index = 1;                 // [X_P : X ∩ RP]
  RootDatum semisimple_quotient; // the datum (X_P, Y_P, R_P, P) in X_P coords
};

inline ParabolicRestriction parabolic_restriction(const RootDatum& rd, const std::vector<int>& p) {
  ParabolicRestriction out;
  out.p = p;
  std::sort(out.p.begin(), out.p.end());
  out.p.erase(std::unique(out.p.begin(), out.p.end()), out.p.end());
  for (int i : out.p)
    if (i < 0 || i >= static_cast<int>(rd.simple.size()))
      throw schema_error("P index out of range");
  const Index np = static_cast<Index>(out.p.size());
  const Index n = rd.rank;

  // R_P: roots whose F_0-expansion is supported on P.
  std::vector<bool> in_p(rd.simple.size(), false);
  for (int i : out.p) in_p[static_cast<size_t>(i)] = true;
  for (size_t r = 0; r < rd.roots.size(); ++r) {
    bool ok = true;
    for (Index j = 0; j < rd.simple_coefficients[r].size(); ++j)
      if (rd.simple_coefficients[r](j) != 0 && !in_p[static_cast<size_t>(j)]) ok = false;
    if (ok) out.roots_p.push_back(static_cast<int>(r));
  }

  RMat a(n, np), c(n, np);
  for (Index j = 0; j < np; ++j) {
    a.col(j) = to_rational(rd.simple_root(out.p[static_cast<size_t>(j)]));
    c.col(j) = to_rational(rd.simple_coroot(out.p[static_cast<size_t>(j)]));
  }

  // Projection onto RP along the annihilator of P^v.
  if (np > 0) {
    RMat m = c.transpose() * a;
    out.projection = a * m.inverse() * c.transpose();
  } else {
    out.projection = RMat::Zero(n, n);
  }

  // X_P = pi_P(Z^n), as a lattice inside RP.
  if (np > 0) {
    auto [cleared, den] = clear_denominators(out.projection);
    IMat basis = lattice_basis(cleared);
    out.xp_basis = to_rational(basis) / Rat(den);
  } else {
    out.xp_basis = RMat::Zero(n, 0);
  }

  // X ∩ RP = integer points annihilated by every functional vanishing on RP.
  if (np > 0) {
    RMat funcs = Eigen::FullPivLU<RMat>(a.transpose().eval()).kernel();  // n x (n - np)
    if (funcs.cols() == 0) {
      out.x_cap_span = IMat::Identity(n, n);
    } else {
      auto [fc, fden] = clear_denominators(funcs.transpose().eval());
      (void)fden;
      out.x_cap_span = integer_kernel(fc);
    }
  } else {
    out.x_cap_span = IMat::Zero(n, 0);
  }

  // X ∩ (P^v)-perp.
  {
    IMat rows(np, n);
    for (Index j = 0; j < np; ++j)
      for (Index i = 0; i < n; ++i) rows(j, i) = rd.simple_coroot(out.p[static_cast<size_t>(j)])(i);
    out.x_cap_perp = integer_kernel(rows);
  }

  // Index [X_P : X ∩ RP].
  if (np > 0) {
    Eigen::FullPivLU<RMat> xb(out.xp_basis);
    RMat coords = xb.solve(to_rational(out.x_cap_span));
    if (!all_zero((out.xp_basis * coords - to_rational(out.x_cap_span)).eval()))
      throw std::logic_error("X ∩ RP does not lie in X_P");
    Rat d = det_rational(coords);
    if (d.get_den() != 1) throw std::logic_error("X ∩ RP not a sublattice of X_P");
    out.index = abs(d.get_num());
  }

  // The semisimple quotient datum in X_P-coordinates.
  RootDatum q;
  q.rank = np;
  q.family = rd.family + "|P";
  q.lattice_name = rd.lattice_name;
  std::optional<Eigen::FullPivLU<RMat>> xb;
  if (np > 0) xb.emplace(out.xp_basis);
  for (size_t k = 0; k < out.roots_p.size(); ++k) {
    int r = out.roots_p[k];
    IVec rx, cv;
    if (np > 0) {
      RMat cxm(np, 1);
      cxm.col(0) = xb->solve(to_rational(rd.roots[static_cast<size_t>(r)]));
      if (!is_integral(cxm)) throw std::logic_error("R_P root not integral in X_P basis");
      rx = to_integral(cxm).col(0);
      cv = IVec(np);
      for (Index j = 0; j < np; ++j) {
        Rat v = out.xp_basis.col(j).dot(to_rational(rd.coroots[static_cast<size_t>(r)]));
        if (v.get_den() != 1) throw std::logic_error("coroot not integral on X_P");
        cv(j) = v.get_num();
      }
    } else {
      rx = IVec::Zero(0);
      cv = IVec::Zero(0);
    }
    q.roots.push_back(rx);
    q.coroots.push_back(cv);
  }
  for (size_t j = 0; j < out.p.size(); ++j) {
    int rp_index = -1;
    for (size_t k = 0; k < out.roots_p.size(); ++k)
      if (out.roots_p[k] == rd.simple[static_cast<size_t>(out.p[j])])
        rp_index = static_cast<int>(k);
    q.simple.push_back(rp_index);
  }
  q.finalize();
  out.semisimple_quotient = std::move(q);
  return out;
}

// Restriction q_P of a label function to R_{P,nr} = QR_P ∩ R_nr, re-keyed to
// the coordinates of the semisimple quotient datum.
inline LabelFunction restrict_labels(const RootDatum& rd, const NonReducedData& nr,
                                     const LabelFunction& labels,
                                     const ParabolicRestriction& pr) {
  NonReducedData nr_q = nonreduced_and_r1(pr.semisimple_quotient);
  LabelFunction out;
  for (size_t k = 0; k < pr.roots_p.size(); ++k) {
    int r = pr.roots_p[k];
    out.q[vec_key(pr.semisimple_quotient.roots[k])] = labels(rd.roots[static_cast<size_t>(r)]);
    int damb = nr.double_of[static_cast<size_t>(r)];
    int dq = nr_q.double_of[k];
    if ((damb >= 0) != (dq >= 0))
      throw std::logic_error("doubled roots disagree between ambient and parabolic datum");
    if (dq >= 0)
      out.q[vec_key(nr_q.roots[static_cast<size_t>(dq)])] =
          labels(nr.roots[static_cast<size_t>(damb)]);
  }
  if (out.q.size() != nr_q.roots.size())
    throw std::logic_error("restricted labels do not cover R_{P,nr}");
  return out;
}

}  // namespace weylkit

#endif  // WEYLKIT_ROOTDATUM_HPP_
