// Disjoint-set forest whose roots are always the least member of their class.
#ifndef SIMPCAT_UNION_FIND_HPP_
#define SIMPCAT_UNION_FIND_HPP_

#include <numeric>
#include <vector>

namespace simpcat {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t size() const { return parent_.size(); }

  std::size_t add() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }

  std::size_t find(std::size_t x) {
    std::size_t r = x;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[x] != r) {
      std::size_t next = parent_[x];
      parent_[x] = r;
      x = next;
    }
    return r;
  }

  // Returns true when two distinct classes were merged.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) parent_[b] = a;
    else parent_[a] = b;
    return true;
  }

  // Class index per element; classes numbered by increasing least member.
  std::vector<int> classes(int* count = nullptr) {
    std::vector<int> label(parent_.size(), -1);
    int next = 0;
    for (std::size_t x = 0; x < parent_.size(); ++x) {
      std::size_t r = find(x);
      if (label[r] < 0) label[r] = next++;
      label[x] = label[r];
    }
    if (count) *count = next;
    return label;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace simpcat

#endif  // SIMPCAT_UNION_FIND_HPP_
