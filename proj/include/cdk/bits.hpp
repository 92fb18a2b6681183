#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace cdk {

// Fixed-size bit set over dense indices 0..n-1. States of a model, members
// of a closure, surviving atoms: all small dense universes.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n, bool value = false)
      : n_(n), words_((n + 63) / 64, value ? ~0ull : 0ull) {
    trim();
  }

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { words_[i >> 6] |= (1ull << (i & 63)); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(1ull << (i & 63)); }
  void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }

  std::size_t count() const {
    std::size_t c = 0;
    for (uint64_t w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  bool all() const { return count() == n_; }
  bool none() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bits operator~() const {
    Bits r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend bool operator==(const Bits& a, const Bits& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

 private:
  void trim() {
    if (n_ & 63) words_.back() &= (1ull << (n_ & 63)) - 1;
  }
  std::size_t n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace cdk
