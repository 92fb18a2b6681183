#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace cdk {

// Equivalence relation over 0..n-1, stored as the block index of each
// element. Block numbering is canonical: blocks are numbered in order of
// their first element, so equal relations have equal representations.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::size_t n) : block_of_(n, 0), blocks_(n ? 1 : 0) {}
  Partition(std::vector<int> block_of, int n_blocks)
      : block_of_(std::move(block_of)), blocks_(n_blocks) {
    canonicalize();
  }

  static Partition discrete(std::size_t n) {
    std::vector<int> b(n);
    std::iota(b.begin(), b.end(), 0);
    return Partition(std::move(b), static_cast<int>(n));
  }
  static Partition from_blocks(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks) {
    std::vector<int> b(n, -1);
    int k = 0;
    for (const auto& blk : blocks) {
      for (std::size_t i : blk) b[i] = k;
      ++k;
    }
    return Partition(std::move(b), k);
  }

  std::size_t size() const { return block_of_.size(); }
  int blocks() const { return blocks_; }
  int block_of(std::size_t i) const { return block_of_[i]; }
  bool same(std::size_t i, std::size_t j) const { return block_of_[i] == block_of_[j]; }

  std::vector<std::vector<std::size_t>> block_lists() const {
    std::vector<std::vector<std::size_t>> out(blocks_);
    for (std::size_t i = 0; i < block_of_.size(); ++i) out[block_of_[i]].push_back(i);
    return out;
  }

  // Common refinement: i ~ j iff i ~ j in both.
  friend Partition meet(const Partition& a, const Partition& b) {
    std::map<std::pair<int, int>, int> ids;
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto key = std::make_pair(a.block_of_[i], b.block_of_[i]);
      auto [it, fresh] = ids.emplace(key, static_cast<int>(ids.size()));
      out[i] = it->second;
    }
    return Partition(std::move(out), static_cast<int>(ids.size()));
  }

  // Finest equivalence coarser than both: transitive closure of the union.
  friend Partition join(const Partition& a, const Partition& b) {
    std::vector<int> parent(a.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
    std::vector<int> rep_a(a.blocks(), -1), rep_b(b.blocks(), -1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      int& ra = rep_a[a.block_of_[i]];
      if (ra < 0) ra = static_cast<int>(i);
      else unite(static_cast<int>(i), ra);
      int& rb = rep_b[b.block_of_[i]];
      if (rb < 0) rb = static_cast<int>(i);
      else unite(static_cast<int>(i), rb);
    }
    std::vector<int> out(a.size());
    std::map<int, int> ids;
    for (std::size_t i = 0; i < a.size(); ++i) {
      int root = find(static_cast<int>(i));
      auto [it, fresh] = ids.emplace(root, static_cast<int>(ids.size()));
      out[i] = it->second;
    }
    return Partition(std::move(out), static_cast<int>(ids.size()));
  }

  // True iff this relation is a subset of o (this refines o).
  bool refines(const Partition& o) const {
    std::vector<int> seen(blocks_, -1);
    for (std::size_t i = 0; i < block_of_.size(); ++i) {
      int& s = seen[block_of_[i]];
      if (s < 0) s = o.block_of_[i];
      else if (s != o.block_of_[i]) return false;
    }
    return true;
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.block_of_ == b.block_of_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

 private:
  void canonicalize() {
    std::vector<int> remap(blocks_, -1);
    int next = 0;
    for (auto& b : block_of_) {
      if (remap[b] < 0) remap[b] = next++;
      b = remap[b];
    }
    blocks_ = next;
  }
  std::vector<int> block_of_;
  int blocks_ = 0;
};

}  // namespace cdk
