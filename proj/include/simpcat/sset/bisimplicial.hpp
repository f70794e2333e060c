// Truncated bisimplicial sets over a downward-closed set of bidegrees (p, q).
// Horizontal operators act in p, vertical operators in q.
#ifndef SIMPCAT_SSET_BISIMPLICIAL_HPP_
#define SIMPCAT_SSET_BISIMPLICIAL_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "simpcat/sset/simplicial_set.hpp"

namespace simpcat {

class BidegreeShape {
 public:
  BidegreeShape() = default;
  // max_p[q] is the largest supported p in row q; must be nonincreasing and
  // nonnegative, and non-empty.
  explicit BidegreeShape(std::vector<int> max_p);

  static BidegreeShape rectangle(int max_p, int max_q);
  // {(p, q) : p + q + 1 <= d}, d >= 1.
  static BidegreeShape staircase(int d);

  bool contains(int p, int q) const {
    return p >= 0 && q >= 0 && q < static_cast<int>(max_p_.size()) && p <= max_p_[q];
  }
  int max_q() const { return static_cast<int>(max_p_.size()) - 1; }
  int max_p(int q) const { return max_p_.at(q); }
  // Largest q with (p, q) supported, or -1.
  int max_q_at(int p) const;
  // Largest N with (N, N) supported, or -1.
  int diagonal_bound() const;
  const std::vector<int>& rows() const { return max_p_; }

  friend bool operator==(const BidegreeShape&, const BidegreeShape&) = default;

 private:
  std::vector<int> max_p_;
};

class BisimplicialSet {
 public:
  struct Cell {
    int size = 0;
    std::vector<std::vector<int>> dh, sh, dv, sv;  // [i][x]
    friend bool operator==(const Cell&, const Cell&) = default;
  };

  BisimplicialSet() = default;
  // cells[p][q] for every supported bidegree. dh present when p >= 1, sh when
  // (p+1, q) is supported, dv when q >= 1, sv when (p, q+1) is supported.
  // Shape and table sizes are validated; identities are left to audit().
  BisimplicialSet(BidegreeShape shape, std::vector<std::vector<Cell>> cells,
                  std::optional<int> basepoint = {});

  const BidegreeShape& shape() const { return shape_; }
  int size(int p, int q) const { return cell(p, q).size; }
  int dh(int p, int q, int i, int x) const { return cell(p, q).dh[i][x]; }
  int sh(int p, int q, int j, int x) const { return cell(p, q).sh[j][x]; }
  int dv(int p, int q, int i, int x) const { return cell(p, q).dv[i][x]; }
  int sv(int p, int q, int j, int x) const { return cell(p, q).sv[j][x]; }
  const Cell& cell(int p, int q) const;

  // A (0,0) simplex, propagated to every bidegree by degeneracies.
  std::optional<int> basepoint() const { return basepoint_; }
  std::optional<int> basepoint_at(int p, int q) const;
  BisimplicialSet with_basepoint(std::optional<int> v) const;

  // Row q (p varying) and column p (q varying) as simplicial sets.
  SimplicialSet horizontal(int q) const;
  SimplicialSet vertical(int p) const;

  // Simplicial identities in both directions plus commutation of every
  // horizontal operator with every vertical one, wherever defined.
  std::vector<std::string> audit(std::size_t limit = 16) const;

  friend bool operator==(const BisimplicialSet& a, const BisimplicialSet& b) {
    return a.shape_ == b.shape_ && a.cells_ == b.cells_ && a.basepoint_ == b.basepoint_;
  }

 private:
  BidegreeShape shape_;
  std::vector<std::vector<Cell>> cells_;
  std::optional<int> basepoint_;
};

using BisetPtr = std::shared_ptr<const BisimplicialSet>;

inline BisetPtr share(BisimplicialSet b) {
  return std::make_shared<const BisimplicialSet>(std::move(b));
}

struct BisimplicialMap {
  BisetPtr source;
  BisetPtr target;
  std::vector<std::vector<std::vector<int>>> image;  // [p][q][x]

  int operator()(int p, int q, int x) const { return image[p][q][x]; }
  std::vector<std::string> audit() const;
  // The induced map on row q.
  SimplicialMap horizontal(int q, SSetPtr source_row, SSetPtr target_row) const;
};

}  // namespace simpcat

#endif  // SIMPCAT_SSET_BISIMPLICIAL_HPP_
