// Truncated simplicial sets: every simplex up to a degree bound, with explicit
// face and degeneracy tables and canonical Eilenberg-Zilber decompositions.
#ifndef SIMPCAT_SSET_SIMPLICIAL_SET_HPP_
#define SIMPCAT_SSET_SIMPLICIAL_SET_HPP_

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "simpcat/common.hpp"
#include "simpcat/sset/identities.hpp"
#include "simpcat/sset/ordinal.hpp"

namespace simpcat {

struct Simplex {
  int degree = 0;
  int id = 0;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

// x = s_{w[0]} s_{w[1]} ... s_{w[k-1]} base, with w strictly decreasing.
struct EzForm {
  int base = 0;  // id of a nondegenerate simplex in degree (degree - word.size())
  std::vector<int> degeneracy_word;
  friend bool operator==(const EzForm&, const EzForm&) = default;
};

using FaceTable = std::vector<std::vector<std::vector<int>>>;  // [n][i][x]

class SimplicialSet {
 public:
  SimplicialSet() = default;

  // faces[n][i] for 1 <= n <= bound (faces[0] empty); degeneracies[n][j] for
  // n < bound. Computes EZ data; throws AuditFailure on malformed tables
  // (wrong sizes, out-of-range entries). Identities are not checked here; see
  // audit().
  static SimplicialSet from_tables(int bound, std::vector<int> sizes, FaceTable faces,
                                   FaceTable degeneracies, std::optional<int> basepoint = {});

  int bound() const { return bound_; }
  int size(int n) const { return sizes_.at(n); }
  const std::vector<int>& sizes() const { return sizes_; }
  int face(int n, int i, int x) const { return faces_[n][i][x]; }
  int degeneracy(int n, int j, int x) const { return degens_[n][j][x]; }
  const FaceTable& face_table() const { return faces_; }
  const FaceTable& degeneracy_table() const { return degens_; }

  const EzForm& ez(int n, int x) const { return ez_[n][x]; }
  bool is_nondegenerate(int n, int x) const { return ez_[n][x].degeneracy_word.empty(); }
  const std::vector<int>& nondegenerate(int n) const { return nondegenerate_[n]; }
  // Largest degree holding a nondegenerate simplex (-1 when empty).
  int dimension() const;

  std::optional<int> basepoint() const { return basepoint_; }
  SimplicialSet with_basepoint(std::optional<int> v) const;

  // x . theta for x in X_m and theta: [n] -> [m]; requires n, m <= bound.
  int act(int m, int x, const ordinal::Map& theta) const;
  // Apply an EZ degeneracy word to a simplex of degree n.
  int apply_degeneracies(int n, int x, const std::vector<int>& word) const;
  // Vertex ids of x (vertex k is x . (k)).
  std::vector<int> vertices(int n, int x) const;

  std::vector<IdentityViolation> audit(std::size_t limit = 16) const;

  friend bool operator==(const SimplicialSet& a, const SimplicialSet& b) {
    return a.bound_ == b.bound_ && a.sizes_ == b.sizes_ && a.faces_ == b.faces_ &&
           a.degens_ == b.degens_ && a.basepoint_ == b.basepoint_;
  }

 private:
  void compute_ez();

  int bound_ = 0;
  std::vector<int> sizes_;
  FaceTable faces_;
  FaceTable degens_;
  std::vector<std::vector<EzForm>> ez_;
  std::vector<std::vector<int>> nondegenerate_;
  std::optional<int> basepoint_;
};

using SSetPtr = std::shared_ptr<const SimplicialSet>;

inline SSetPtr share(SimplicialSet x) { return std::make_shared<const SimplicialSet>(std::move(x)); }

// Builds the sub-simplicial set generated by `seeds` (keys per degree) under
// faces and degeneracies up to `bound`. Keys are sorted in each degree, which
// fixes the simplex numbering.
template <class Key, class Face, class Degen>
SimplicialSet build_closed(int bound, const std::vector<std::vector<Key>>& seeds, Face face,
                           Degen degen, std::vector<std::vector<Key>>* keys_out = nullptr) {
  std::vector<std::set<Key>> found(bound + 1);
  std::vector<std::vector<Key>> work(bound + 1);
  auto add = [&](int n, const Key& k) {
    if (found[n].insert(k).second) work[n].push_back(k);
  };
  for (int n = 0; n < static_cast<int>(seeds.size()) && n <= bound; ++n)
    for (const Key& k : seeds[n]) add(n, k);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int n = bound; n >= 0; --n) {
      while (!work[n].empty()) {
        Key k = std::move(work[n].back());
        work[n].pop_back();
        changed = true;
        if (n > 0)
          for (int i = 0; i <= n; ++i) add(n - 1, face(n, i, k));
        if (n < bound)
          for (int j = 0; j <= n; ++j) add(n + 1, degen(n, j, k));
      }
    }
  }
  std::vector<std::vector<Key>> keys(bound + 1);
  std::vector<std::map<Key, int>> index(bound + 1);
  std::vector<int> sizes(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    keys[n].assign(found[n].begin(), found[n].end());
    sizes[n] = static_cast<int>(keys[n].size());
    for (int x = 0; x < sizes[n]; ++x) index[n].emplace(keys[n][x], x);
  }
  FaceTable faces(bound + 1), degens(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    if (n > 0) {
      faces[n].assign(n + 1, std::vector<int>(sizes[n]));
      for (int i = 0; i <= n; ++i)
        for (int x = 0; x < sizes[n]; ++x) faces[n][i][x] = index[n - 1].at(face(n, i, keys[n][x]));
    }
    if (n < bound) {
      degens[n].assign(n + 1, std::vector<int>(sizes[n]));
      for (int j = 0; j <= n; ++j)
        for (int x = 0; x < sizes[n]; ++x) degens[n][j][x] = index[n + 1].at(degen(n, j, keys[n][x]));
    }
  }
  if (keys_out) *keys_out = std::move(keys);
  return SimplicialSet::from_tables(bound, std::move(sizes), std::move(faces), std::move(degens));
}

// Maps of truncated simplicial sets, stored as total per-degree assignments.
struct SimplicialMap {
  SSetPtr source;
  SSetPtr target;
  std::vector<std::vector<int>> image;  // [n][x]

  int operator()(int n, int x) const { return image[n][x]; }
  // Commutes with faces and degeneracies; preserves basepoints when both pointed.
  std::vector<std::string> audit() const;
  static SimplicialMap identity(SSetPtr x);
  // g o f
  static SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);
};

}  // namespace simpcat

#endif  // SIMPCAT_SSET_SIMPLICIAL_SET_HPP_
