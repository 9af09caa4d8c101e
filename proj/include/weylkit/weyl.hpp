// Finite Weyl groups as enumerated matrix groups, and the exact action on
// torus points with rational-rotation coordinates.

#ifndef WEYLKIT_WEYL_HPP_
#define WEYLKIT_WEYL_HPP_

#include "weylkit/errors.hpp"
#include "weylkit/intlin.hpp"
#include "weylkit/rootdatum.hpp"
#include "weylkit/scalars.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace weylkit {

inline constexpr long kWeylGroupGuard = 10'000'000L;

inline IMat integer_inverse(const IMat& m) {
  RMat inv = to_rational(m).inverse();
  return to_integral(inv);
}

// Enumerated W_0.  Elements are canonicalized by their matrix; index 0 is the
// identity.  Enumeration is breadth-first over the simple reflections, each
// layer sorted lexicographically by matrix entries, so indices (and any
// report built from them) are reproducible.
struct WeylGroup {
  std::vector<IMat> elements;
  std::vector<std::vector<int>> words;  // one reduced word per element
  std::vector<int> inverse;

  Index size() const { return static_cast<Index>(elements.size()); }

  int find(const IMat& m) const {
    auto it = index_.find(mat_key(m));
    return it == index_.end() ? -1 : it->second;
  }

  int mult(int i, int j) const {
    IMat m = elements[static_cast<size_t>(i)] * elements[static_cast<size_t>(j)];
    int k = find(m);
    if (k < 0) throw std::logic_error("group not closed under multiplication");
    return k;
  }

  void build_index() {
    index_.clear();
    for (size_t i = 0; i < elements.size(); ++i) index_[mat_key(elements[i])] = static_cast<int>(i);
  }

 private:
  std::map<VecKey, int> index_;
};

inline WeylGroup generate_weyl_group(const RootDatum& rd, long guard = kWeylGroupGuard) {
  std::vector<IMat> gens;
  for (int s = 0; s < static_cast<int>(rd.simple.size()); ++s) gens.push_back(rd.simple_reflection(s));

  WeylGroup w;
  w.elements.push_back(IMat::Identity(rd.rank, rd.rank));
  w.words.push_back({});
  std::map<VecKey, int> seen;
  seen[mat_key(w.elements[0])] = 0;

  std::vector<int> layer{0};
  while (!layer.empty()) {
    // Collect the next layer, then sort it for a canonical order.
    std::map<VecKey, std::pair<IMat, std::vector<int>>> next;
    for (int idx : layer) {
      for (size_t s = 0; s < gens.size(); ++s) {
        IMat m = w.elements[static_cast<size_t>(idx)] * gens[s];
        VecKey k = mat_key(m);
        if (seen.count(k) || next.count(k)) continue;
        std::vector<int> word = w.words[static_cast<size_t>(idx)];
        word.push_back(static_cast<int>(s));
        next.emplace(std::move(k), std::make_pair(std::move(m), std::move(word)));
      }
    }
    layer.clear();
    for (auto& [k, mw] : next) {  // map iteration = lexicographic order
      int id = static_cast<int>(w.elements.size());
      if (id > guard) throw guard_error("Weyl group larger than the enumeration guard");
      seen[k] = id;
      w.elements.push_back(std::move(mw.first));
      w.words.push_back(std::move(mw.second));
      layer.push_back(id);
    }
  }
  w.build_index();
  w.inverse.resize(w.elements.size());
  for (size_t i = 0; i < w.elements.size(); ++i) {
    int j = w.find(integer_inverse(w.elements[i]));
    if (j < 0) throw std::logic_error("inverse not found");
    w.inverse[i] = j;
  }
  return w;
}

// Closure of a set of integer matrices under multiplication (for subgroups:
// parabolic subgroups, stabilizers, reflection groups of mirror systems).
inline std::vector<IMat> matrix_group_closure(const std::vector<IMat>& gens, Index dim,
                                              long guard = kWeylGroupGuard) {
  std::vector<IMat> elements{IMat::Identity(dim, dim)};
  std::map<VecKey, int> seen{{mat_key(elements[0]), 0}};
  for (size_t h = 0; h < elements.size(); ++h) {
    for (const IMat& g : gens) {
      IMat m = elements[h] * g;
      VecKey k = mat_key(m);
      if (seen.count(k)) continue;
      if (static_cast<long>(elements.size()) >= guard)
        throw guard_error("group closure exceeded the enumeration guard");
      seen[k] = static_cast<int>(elements.size());
      elements.push_back(std::move(m));
    }
  }
  return elements;
}

// The longest element w_P of the standard parabolic W_P: the unique element
// of W_P sending every root of R_{P,+} to a negative root.
inline IMat longest_element(const RootDatum& rd, const std::vector<int>& p) {
  std::vector<IMat> gens;
  for (int i : p) {
    if (i < 0 || i >= static_cast<int>(rd.simple.size())) throw schema_error("P index out of range");
    gens.push_back(rd.simple_reflection(i));
  }
  std::vector<IMat> wp = matrix_group_closure(gens, rd.rank);
  Index best_len = -1;
  const IMat* best = nullptr;
  for (const IMat& m : wp) {
    Index len = weyl_length(rd, m);
    if (len > best_len) {
      best_len = len;
      best = &m;
    }
  }
  return *best;
}

// Minimal-length representatives of the left cosets w W_P:
// W^P = {w : w(P) ⊂ R_{0,+}}, ordered by (length, enumeration index).
inline std::vector<int> coset_representatives(const RootDatum& rd, const WeylGroup& w,
                                              const std::vector<int>& p) {
  std::vector<int> reps;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    bool ok = true;
    for (int s : p) {
      IVec img = w.elements[static_cast<size_t>(i)] * rd.simple_root(s);
      int j = rd.find_root(img);
      if (j < 0) throw std::logic_error("not a root image");
      if (!rd.positive[static_cast<size_t>(j)]) ok = false;
    }
    if (ok) reps.push_back(i);
  }
  std::stable_sort(reps.begin(), reps.end(), [&](int a, int b) {
    return w.words[static_cast<size_t>(a)].size() < w.words[static_cast<size_t>(b)].size();
  });
  return reps;
}

// ---------------------------------------------------------------------------
// Torus points

// A unitary character of X of finite order, stored by its values (as
// fractions of a full turn) on the standard basis of X.
struct TorusPoint {
  std::vector<RationalRotation> rot;

  TorusPoint() = default;
  explicit TorusPoint(Index n) : rot(static_cast<size_t>(n)) {}

  Index rank() const { return static_cast<Index>(rot.size()); }

  static TorusPoint identity(Index n) { return TorusPoint(n); }

  RationalRotation evaluate(const IVec& x) const {
    RationalRotation out;
    for (Index i = 0; i < x.size(); ++i)
      out = out + rot[static_cast<size_t>(i)].scaled(x(i));
    return out;
  }

  TorusPoint operator*(const TorusPoint& o) const {
    TorusPoint out(rank());
    for (size_t i = 0; i < rot.size(); ++i) out.rot[i] = rot[i] + o.rot[i];
    return out;
  }

  TorusPoint inverse_point() const {
    TorusPoint out(rank());
    for (size_t i = 0; i < rot.size(); ++i) out.rot[i] = -rot[i];
    return out;
  }

  bool operator==(const TorusPoint& o) const { return rot == o.rot; }
  bool operator!=(const TorusPoint& o) const { return !(*this == o); }
  bool operator<(const TorusPoint& o) const { return rot < o.rot; }

  bool is_identity() const {
    for (const auto& r : rot)
      if (!r.is_zero()) return false;
    return true;
  }

  // Order as a group element: lcm of the coordinate orders.
  Int order() const {
    Int o = 1;
    for (const auto& r : rot) o = lcm(o, r.order());
    return o;
  }
};

// (w t)(x) = t(w^{-1} x).
inline TorusPoint act_on_torus(const IMat& w, const TorusPoint& t) {
  IMat winv = integer_inverse(w);
  TorusPoint out(t.rank());
  for (Index i = 0; i < t.rank(); ++i)
    out.rot[static_cast<size_t>(i)] = t.evaluate(winv.col(i));
  return out;
}

}  // namespace weylkit

#endif  // WEYLKIT_WEYL_HPP_
