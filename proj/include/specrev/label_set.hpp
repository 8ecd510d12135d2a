#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace specrev {

/// Fixed-universe bitset used for sets of removable-symbol ids.
/// The universe size is chosen when the set is created and never changes.
class LabelSet {
 public:
  LabelSet() = default;

  explicit LabelSet(std::size_t universe, bool full = false)
      : universe_(universe), words_((universe + 63) / 64, full ? ~std::uint64_t{0} : 0) {
    if (full && universe % 64 != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << (universe % 64)) - 1;
    }
  }

  static LabelSet all(std::size_t universe) { return LabelSet(universe, true); }

  std::size_t universe() const { return universe_; }

  void insert(std::uint32_t id) {
    assert(id < universe_);
    words_[id >> 6] |= std::uint64_t{1} << (id & 63);
  }

  bool contains(std::uint32_t id) const {
    assert(id < universe_);
    return (words_[id >> 6] >> (id & 63)) & 1;
  }

  void unite(const LabelSet& other) {
    assert(other.universe_ == universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  }

  bool is_subset_of(const LabelSet& other) const {
    assert(other.universe_ == universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  bool any() const {
    for (std::uint64_t w : words_) {
      if (w) return true;
    }
    return false;
  }

  bool empty() const { return !any(); }

  std::size_t count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  /// Visits members in ascending id order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        fn(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::uint32_t> values() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::uint32_t id) { out.push_back(id); });
    return out;
  }

  friend bool operator==(const LabelSet& a, const LabelSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace specrev
