// The Weyl groupoid: objects are the subsets P of F_0, morphisms are the
// Weyl elements with w(P) = Q.  Includes the restricted root systems R^P,
// the chamber complexes of the wall arrangements in a^P, heights, minimal
// galleries and the decomposition of arrows into elementary conjugations.

#ifndef WEYLKIT_GROUPOID_HPP_
#define WEYLKIT_GROUPOID_HPP_

#include "weylkit/errors.hpp"
#include "weylkit/rootdatum.hpp"
#include "weylkit/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace weylkit {

inline constexpr long kChamberGuard = 1'000'000L;

using PSet = std::vector<int>;  // sorted positions in F_0

inline PSet normalize_pset(const RootDatum& rd, PSet p) {
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  for (int i : p)
    if (i < 0 || i >= static_cast<int>(rd.simple.size())) throw schema_error("P index out of range");
  return p;
}

inline std::string pset_name(const PSet& p) {
  std::string s = "{";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "}";
}

inline std::vector<PSet> all_objects(const RootDatum& rd) {
  const int n = static_cast<int>(rd.simple.size());
  std::vector<PSet> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    PSet p;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) p.push_back(i);
    out.push_back(p);
  }
  return out;
}

// Image of P (a set of simple roots) under w, as a subset of F_0 if it is
// one; returns nullopt otherwise.
inline std::optional<PSet> image_object(const RootDatum& rd, const IMat& w, const PSet& p) {
  PSet out;
  for (int s : p) {
    IVec img = w * rd.simple_root(s);
    int r = rd.find_root(img);
    if (r < 0) return std::nullopt;
    int pos = -1;
    for (size_t j = 0; j < rd.simple.size(); ++j)
      if (rd.simple[j] == r) pos = static_cast<int>(j);
    if (pos < 0) return std::nullopt;
    out.push_back(pos);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Hom_W(P, Q) = {w : w(P) = Q}, as indices into the enumerated Weyl group.
inline std::vector<int> hom_set(const RootDatum& rd, const WeylGroup& w, const PSet& p,
                                const PSet& q) {
  PSet ps = normalize_pset(rd, p), qs = normalize_pset(rd, q);
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    auto img = image_object(rd, w.elements[static_cast<size_t>(i)], ps);
    if (img && *img == qs) out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Restricted roots R^P

struct RestrictedRoot {
  RVec value;               // projection of a source root onto a^{P,*}
  bool positive = false;
  bool simple = false;      // indecomposable in Z_+ R^P_+
  std::vector<int> sources; // indices into rd.roots with restriction in Z * value
};

struct RestrictedRootSystem {
  PSet p;
  std::vector<RestrictedRoot> roots;
  std::vector<int> positive_indices;

  int find_value(const RVec& v) const {
    for (size_t i = 0; i < roots.size(); ++i)
      if (roots[i].value == v) return static_cast<int>(i);
    return -1;
  }
};

namespace detail {

inline std::optional<Rat> proportionality(const RVec& a, const RVec& b) {
  // returns c with a = c b, if it exists (b != 0)
  Rat c;
  bool have = false;
  for (Index i = 0; i < a.size(); ++i) {
    if (b(i) == 0) {
      if (a(i) != 0) return std::nullopt;
    } else {
      Rat ci = a(i) / b(i);
      if (!have) {
        c = ci;
        have = true;
      } else if (ci != c) {
        return std::nullopt;
      }
    }
  }
  if (!have) return std::nullopt;
  return c;
}

}  // namespace detail

inline RestrictedRootSystem restricted_roots(const RootDatum& rd, const PSet& p_in) {
  RestrictedRootSystem out;
  out.p = normalize_pset(rd, p_in);
  ParabolicRestriction pr = parabolic_restriction(rd, out.p);
  std::set<int> rp(pr.roots_p.begin(), pr.roots_p.end());

  // Group the nonzero projections by line; keep the primitive ones.
  struct Entry {
    RVec value;
    int source;
  };
  std::vector<Entry> entries;
  for (size_t r = 0; r < rd.roots.size(); ++r) {
    if (rp.count(static_cast<int>(r))) continue;
    RVec v = to_rational(rd.roots[r]) - pr.projection * to_rational(rd.roots[r]);
    entries.push_back({v, static_cast<int>(r)});
  }
  std::vector<bool> used(entries.size(), false);
  for (size_t i = 0; i < entries.size(); ++i) {
    if (used[i]) continue;
    // the proportionality class of entries[i]
    std::vector<std::pair<size_t, Rat>> cls;  // (entry, ratio to entries[i])
    for (size_t j = i; j < entries.size(); ++j) {
      if (used[j]) continue;
      auto c = detail::proportionality(entries[j].value, entries[i].value);
      if (c) {
        cls.push_back({j, *c});
        used[j] = true;
      }
    }
    // primitive members: those dividing every other ratio integrally
    for (auto& [j, cj] : cls) {
      bool primitive = true;
      for (auto& [k, ck] : cls) {
        Rat ratio = ck / cj;
        if (ratio.get_den() != 1) primitive = false;
        (void)k;
      }
      if (!primitive) continue;
      int existing = out.find_value(entries[j].value);
      if (existing < 0) {
        RestrictedRoot rr;
        rr.value = entries[j].value;
        int src = entries[j].source;
        rr.positive = rd.positive[static_cast<size_t>(src)];
        // sources restricting to a positive integer multiple of the value
        for (auto& [k, ck] : cls) {
          Rat ratio = ck / cj;
          if (ratio > 0 && ratio.get_den() == 1) rr.sources.push_back(entries[k].source);
        }
        std::sort(rr.sources.begin(), rr.sources.end());
        out.roots.push_back(std::move(rr));
      }
    }
  }
  // positivity sanity: a restricted root and its negative both appear
  for (size_t i = 0; i < out.roots.size(); ++i) {
    if (out.roots[i].positive) out.positive_indices.push_back(static_cast<int>(i));
    RVec neg = -out.roots[i].value;
    if (out.find_value(neg) < 0) throw std::logic_error("R^P is not symmetric");
  }
  // simple = indecomposable in Z_+ R^P_+; equivalently the restriction of a
  // simple root outside P (checked against each other in the tests).
  for (int pi : out.positive_indices) {
    RestrictedRoot& rr = out.roots[static_cast<size_t>(pi)];
    bool decomposable = false;
    for (int a : out.positive_indices)
      for (int b : out.positive_indices) {
        if (a == pi || b == pi) continue;
        if (out.roots[static_cast<size_t>(a)].value + out.roots[static_cast<size_t>(b)].value ==
            rr.value)
          decomposable = true;
      }
    rr.simple = !decomposable;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chamber complexes

struct Chamber {
  PSet source;            // P' with C = u(a^{P'+})
  int arrow = -1;         // index of u in the Weyl group enumeration
  std::vector<int> signs; // one entry in {+1,-1} per positive restricted root
  RVec witness;           // rational interior point (coordinates in a = Y ⊗ Q)
  Index height = 0;       // walls separating C from the positive chamber
};

struct ChamberComplex {
  PSet p;
  RestrictedRootSystem walls;  // of the object P
  std::vector<Chamber> chambers;
  int positive_chamber = -1;

  int find_signs(const std::vector<int>& s) const {
    auto it = by_signs_.find(s);
    return it == by_signs_.end() ? -1 : it->second;
  }
  void build_index() {
    by_signs_.clear();
    for (size_t i = 0; i < chambers.size(); ++i) by_signs_[chambers[i].signs] = static_cast<int>(i);
  }

 private:
  std::map<std::vector<int>, int> by_signs_;
};

// A rational point in the interior of a^{P,+}: any y with <beta, y> = 0 for
// beta in P and <gamma, y> = 1 for gamma in F_0 \ P.  Every positive
// restricted root is then strictly positive on y.
inline RVec positive_chamber_witness(const RootDatum& rd, const PSet& p) {
  const Index ns = static_cast<Index>(rd.simple.size());
  if (ns == 0) return RVec::Zero(rd.rank);
  RMat rows(ns, rd.rank);
  RVec rhs(ns);
  std::set<int> ps(p.begin(), p.end());
  for (Index j = 0; j < ns; ++j) {
    rows.row(j) = to_rational(rd.simple_root(static_cast<int>(j))).transpose();
    rhs(j) = ps.count(static_cast<int>(j)) ? 0 : 1;
  }
  Eigen::FullPivLU<RMat> lu(rows);
  RVec y = lu.solve(rhs);
  if (!all_zero((rows * y - rhs).eval())) throw std::logic_error("no chamber witness");
  return y;
}

inline std::vector<int> chamber_signs(const RestrictedRootSystem& rp, const RVec& y,
                                      bool* on_wall = nullptr) {
  std::vector<int> signs;
  if (on_wall) *on_wall = false;
  for (int i : rp.positive_indices) {
    Rat v = rp.roots[static_cast<size_t>(i)].value.dot(y);
    if (v == 0 && on_wall) *on_wall = true;
    signs.push_back(v > 0 ? 1 : (v < 0 ? -1 : 0));
  }
  return signs;
}

// Enumerates the chambers of the wall arrangement in a^P as the orbit of the
// positive chambers: every chamber is u(a^{P'+}) for a unique pair (P', u)
// with u(P') = P.  Freeness and completeness are re-checked on the fly; the
// complex also records heights (= number of separating walls) and verifies
// that they agree with the gallery metric.
inline ChamberComplex chamber_complex(const RootDatum& rd, const WeylGroup& w, const PSet& p_in,
                                      long guard = kChamberGuard) {
  ChamberComplex cc;
  cc.p = normalize_pset(rd, p_in);
  cc.walls = restricted_roots(rd, cc.p);

  for (const PSet& q : all_objects(rd)) {
    std::vector<int> arrows = hom_set(rd, w, q, cc.p);
    if (arrows.empty()) continue;
    RVec base = positive_chamber_witness(rd, q);
    for (int a : arrows) {
      if (static_cast<long>(cc.chambers.size()) >= guard)
        throw guard_error("chamber complex exceeds the enumeration guard");
      Chamber ch;
      ch.source = q;
      ch.arrow = a;
      // u acts on a (the Y side) by the contragredient matrix.
      IMat uy = integer_inverse(w.elements[static_cast<size_t>(a)]).transpose();
      ch.witness = to_rational(uy) * base;
      bool on_wall = false;
      ch.signs = chamber_signs(cc.walls, ch.witness, &on_wall);
      if (on_wall) throw math_error("chamber witness lies on a wall");
      ch.height = static_cast<Index>(std::count(ch.signs.begin(), ch.signs.end(), -1));
      cc.chambers.push_back(std::move(ch));
    }
  }
  cc.build_index();
  if (static_cast<size_t>(cc.find_signs(std::vector<int>(cc.walls.positive_indices.size(), 1))) >=
      cc.chambers.size())
    throw math_error("no positive chamber found");
  cc.positive_chamber = cc.find_signs(std::vector<int>(cc.walls.positive_indices.size(), 1));

  // Freeness: distinct arrows must give distinct chambers.
  std::set<std::vector<int>> seen;
  for (const Chamber& ch : cc.chambers)
    if (!seen.insert(ch.signs).second)
      throw math_error("two groupoid arrows map a positive chamber to the same chamber");

  // Heights agree with the gallery metric (breadth-first over wall flips).
  const size_t m = cc.walls.positive_indices.size();
  std::vector<Index> dist(cc.chambers.size(), -1);
  std::deque<int> queue{cc.positive_chamber};
  dist[static_cast<size_t>(cc.positive_chamber)] = 0;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (size_t k = 0; k < m; ++k) {
      std::vector<int> s = cc.chambers[static_cast<size_t>(c)].signs;
      s[k] = -s[k];
      int d = cc.find_signs(s);
      if (d >= 0 && dist[static_cast<size_t>(d)] < 0) {
        dist[static_cast<size_t>(d)] = dist[static_cast<size_t>(c)] + 1;
        queue.push_back(d);
      }
    }
  }
  for (size_t i = 0; i < cc.chambers.size(); ++i)
    if (dist[i] != cc.chambers[i].height)
      throw math_error("gallery distance does not equal the number of separating walls");
  return cc;
}

// ---------------------------------------------------------------------------
// Elementary conjugations and gallery decompositions

struct ElementaryConjugation {
  PSet p;        // source
  PSet q;        // P ⊂ Q with |Q \ P| = 1
  PSet p_image;  // sigma(P) ⊂ Q
  IMat w;        // sigma_Q^P = w_Q w_P
  bool self_opposed = false;
};

inline ElementaryConjugation elementary_conjugation(const RootDatum& rd, const PSet& p_in,
                                                    const PSet& q_in) {
  ElementaryConjugation out;
  out.p = normalize_pset(rd, p_in);
  out.q = normalize_pset(rd, q_in);
  if (!std::includes(out.q.begin(), out.q.end(), out.p.begin(), out.p.end()) ||
      out.q.size() != out.p.size() + 1)
    throw schema_error("elementary conjugation needs P ⊂ Q with |Q \\ P| = 1");
  IMat wq = longest_element(rd, out.q);
  IMat wp = out.p.empty() ? IMat::Identity(rd.rank, rd.rank) : longest_element(rd, out.p);
  out.w = wq * wp;
  auto img = image_object(rd, out.w, out.p);
  if (!img) throw std::logic_error("sigma_Q^P does not map P to a standard parabolic");
  out.p_image = *img;
  out.self_opposed = (out.p_image == out.p);
  // self-opposed iff sigma is an involution
  bool involution = (out.w * out.w) == IMat::Identity(rd.rank, rd.rank);
  if (involution != out.self_opposed)
    throw std::logic_error("self-opposedness disagrees with being an involution");
  return out;
}

// w^P = w_0 w_P, the canonical arrow from P to its conjugate \bar P.
inline ElementaryConjugation conjugate_parabolic_arrow(const RootDatum& rd, const PSet& p) {
  ElementaryConjugation out;  // not elementary in general; reuse the fields
  out.p = normalize_pset(rd, p);
  PSet all;
  for (int i = 0; i < static_cast<int>(rd.simple.size()); ++i) all.push_back(i);
  out.q = all;
  IMat w0 = longest_element(rd, all);
  IMat wp = out.p.empty() ? IMat::Identity(rd.rank, rd.rank) : longest_element(rd, out.p);
  out.w = w0 * wp;
  auto img = image_object(rd, out.w, out.p);
  if (!img) throw std::logic_error("w^P does not map P to a standard parabolic");
  out.p_image = *img;
  out.self_opposed = (out.p_image == out.p);
  return out;
}

struct GalleryDecomposition {
  std::vector<int> gallery;  // chamber indices in the complex of the target
  std::vector<ElementaryConjugation> factors;  // product equals the arrow
};

// Decomposes w ∈ Hom(P, Q) into elementary conjugations along a minimal
// gallery from a^{Q,+} to w(a^{P,+}).  Ties between neighboring chambers are
// broken by wall index, so the output is deterministic.
inline GalleryDecomposition decompose_arrow(const RootDatum& rd, const WeylGroup& wg,
                                            const PSet& p_in, const PSet& q_in, const IMat& w,
                                            const ChamberComplex& cc) {
  PSet p = normalize_pset(rd, p_in), q = normalize_pset(rd, q_in);
  if (cc.p != q) throw schema_error("chamber complex does not belong to the target object");
  auto img = image_object(rd, w, p);
  if (!img || *img != q) throw schema_error("matrix is not an arrow from P to Q");

  // Locate the target chamber w(a^{P,+}).
  IMat wy = integer_inverse(w).transpose();
  RVec target_witness = to_rational(wy) * positive_chamber_witness(rd, p);
  bool on_wall = false;
  std::vector<int> target_signs = chamber_signs(cc.walls, target_witness, &on_wall);
  if (on_wall) throw std::logic_error("target chamber witness lies on a wall");
  int target = cc.find_signs(target_signs);
  if (target < 0) throw std::logic_error("target chamber missing from the complex");

  // Breadth-first search for a minimal gallery, deterministic tie-breaking.
  const size_t m = cc.walls.positive_indices.size();
  std::vector<int> parent(cc.chambers.size(), -2);
  std::deque<int> queue{cc.positive_chamber};
  parent[static_cast<size_t>(cc.positive_chamber)] = -1;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    if (c == target) break;
    for (size_t k = 0; k < m; ++k) {
      std::vector<int> s = cc.chambers[static_cast<size_t>(c)].signs;
      s[k] = -s[k];
      int d = cc.find_signs(s);
      if (d >= 0 && parent[static_cast<size_t>(d)] == -2) {
        parent[static_cast<size_t>(d)] = c;
        queue.push_back(d);
      }
    }
  }
  GalleryDecomposition out;
  for (int c = target; c != -1; c = parent[static_cast<size_t>(c)]) out.gallery.push_back(c);
  std::reverse(out.gallery.begin(), out.gallery.end());

  // Convert the gallery into elementary conjugations: x_i = w_{i-1}^{-1} w_i.
  const Chamber& last = cc.chambers[static_cast<size_t>(target)];
  if (last.source != p || wg.elements[static_cast<size_t>(last.arrow)] != w)
    throw math_error("chamber freeness violated: target chamber carries a different arrow");
  for (size_t i = 1; i < out.gallery.size(); ++i) {
    const Chamber& prev = cc.chambers[static_cast<size_t>(out.gallery[i - 1])];
    const Chamber& cur = cc.chambers[static_cast<size_t>(out.gallery[i])];
    IMat x = integer_inverse(wg.elements[static_cast<size_t>(prev.arrow)]) *
             wg.elements[static_cast<size_t>(cur.arrow)];
    // x is the elementary conjugation sigma_{Q_i}^{P_i} for a unique Q_i
    // containing P_i = cur.source as a maximal proper subset.
    bool found = false;
    for (int g = 0; g < static_cast<int>(rd.simple.size()) && !found; ++g) {
      if (std::binary_search(cur.source.begin(), cur.source.end(), g)) continue;
      PSet qi = cur.source;
      qi.push_back(g);
      std::sort(qi.begin(), qi.end());
      ElementaryConjugation ec = elementary_conjugation(rd, cur.source, qi);
      if (ec.w == x && ec.p_image == prev.source) {
        out.factors.push_back(std::move(ec));
        found = true;
      }
    }
    if (!found) throw math_error("gallery step is not an elementary conjugation");
  }
  // The factor product must reproduce the arrow exactly.
  IMat prod = IMat::Identity(rd.rank, rd.rank);
  for (const auto& f : out.factors) prod = (prod * f.w).eval();
  if (prod != w) throw math_error("elementary factors do not multiply to the arrow");
  return out;
}

// ---------------------------------------------------------------------------
// Exact feasibility of strict sign systems (independent chamber oracle)

// Decides whether some y solves sign_i * <row_i, y> > 0 for all i, by
// Fourier-Motzkin elimination over the rationals.  Used to enumerate the
// chambers of an arrangement without reference to the groupoid action.
inline bool strict_sign_feasible(std::vector<RVec> rows, const std::vector<int>& signs) {
  if (rows.size() != signs.size()) throw std::invalid_argument("signs/rows mismatch");
  std::vector<RVec> sys;
  for (size_t i = 0; i < rows.size(); ++i) sys.push_back(signs[i] > 0 ? rows[i] : RVec(-rows[i]));
  const Index n = sys.empty() ? 0 : sys[0].size();
  for (const RVec& r : sys) {
    bool all0 = true;
    for (Index k = 0; k < r.size(); ++k)
      if (r(k) != 0) all0 = false;
    if (all0) return false;
  }
  for (Index var = 0; var < n; ++var) {
    std::vector<RVec> zero, pos, neg;
    for (RVec& r : sys) {
      if (r(var) == 0)
        zero.push_back(r);
      else if (r(var) > 0)
        pos.push_back(r);
      else
        neg.push_back(r);
    }
    std::vector<RVec> next = zero;
    for (const RVec& a : pos)
      for (const RVec& b : neg) next.push_back((a / a(var) - b / b(var)).eval());
    sys = std::move(next);
    for (const RVec& r : sys) {
      bool all0 = true;
      for (Index k = 0; k < r.size(); ++k)
        if (r(k) != 0) all0 = false;
      if (all0) return false;  // 0 > 0
    }
  }
  return true;  // no contradiction survived elimination
}

// All realizable chamber sign vectors of the arrangement in a^P, computed by
// brute force over sign assignments.  Exponential in |R^P_+|: meant for the
// small-rank verification suites.
inline std::vector<std::vector<int>> chambers_by_feasibility(const RootDatum& rd,
                                                             const PSet& p_in) {
  PSet p = normalize_pset(rd, p_in);
  RestrictedRootSystem rp = restricted_roots(rd, p);
  // Parametrize a^P by a rational basis (kernel of the P-pairings).
  RMat rows(static_cast<Index>(p.size()), rd.rank);
  for (size_t j = 0; j < p.size(); ++j)
    rows.row(static_cast<Index>(j)) = to_rational(rd.simple_root(p[j])).transpose();
  RMat basis;
  if (p.empty()) {
    basis = RMat::Identity(rd.rank, rd.rank);
  } else {
    basis = Eigen::FullPivLU<RMat>(rows).kernel();
  }
  const size_t m = rp.positive_indices.size();
  if (m > 24) throw guard_error("too many walls for brute-force chamber enumeration");
  std::vector<RVec> wall_rows;
  for (int i : rp.positive_indices)
    wall_rows.push_back(
        (basis.transpose() * rp.roots[static_cast<size_t>(i)].value).eval());
  std::vector<std::vector<int>> out;
  for (long mask = 0; mask < (1L << m); ++mask) {
    std::vector<int> signs(m);
    for (size_t k = 0; k < m; ++k) signs[k] = (mask & (1L << k)) ? -1 : 1;
    if (strict_sign_feasible(wall_rows, signs)) out.push_back(signs);
  }
  return out;
}

}  // namespace weylkit

#endif  // WEYLKIT_GROUPOID_HPP_
