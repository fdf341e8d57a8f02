// Copyright 2026 The LCR Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LCR_STATE_SPACE_HPP
#define LCR_STATE_SPACE_HPP

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lcr/core_rules.hpp"

namespace lcr {

/// Exact number of game states for n players: n * (C(4n, n) - 1).
/// Chips-into-piles is stars and bars over n+1 piles, minus the
/// impossible all-in-center split, times n turn values. Throws if the
/// result does not fit in 64 bits.
inline std::uint64_t count_states(int players) {
  if (players < 2) throw std::invalid_argument("count_states: need at least 2 players");
  const unsigned __int128 limit = static_cast<unsigned __int128>(~std::uint64_t{0});
  unsigned __int128 binom = 1;
  for (int i = 1; i <= players; ++i) {
    binom = binom * static_cast<unsigned>(3 * players + i);
    binom /= static_cast<unsigned>(i);
    if (binom > (static_cast<unsigned __int128>(1) << 100))
      throw std::overflow_error("count_states: result exceeds 64-bit range");
  }
  const unsigned __int128 total = static_cast<unsigned __int128>(players) * (binom - 1);
  if (total > limit) throw std::overflow_error("count_states: result exceeds 64-bit range");
  return static_cast<std::uint64_t>(total);
}

/// State-count growth factor from n to n+1 players, evaluated in long
/// double so that it stays usable far beyond the exact-integer range.
/// Tends to 256/27 (about 9.48) as n grows.
inline double growth_ratio(int players) {
  if (players < 2) throw std::invalid_argument("growth_ratio: need at least 2 players");
  const auto binom_ld = [](int n4, int k) {
    long double r = 1.0L;
    for (int i = 1; i <= k; ++i) r = r * static_cast<long double>(n4 - k + i) / static_cast<long double>(i);
    return r;
  };
  const long double lo = static_cast<long double>(players) * (binom_ld(4 * players, players) - 1.0L);
  const long double hi =
      static_cast<long double>(players + 1) * (binom_ld(4 * players + 4, players + 1) - 1.0L);
  return static_cast<double>(hi / lo);
}

/// Size summary of the enumerated space for a fixed player count.
struct StateSpaceMeta {
  int players = 0;
  std::uint64_t total = 0;      ///< all states
  std::uint64_t transient = 0;  ///< states the game can leave
  std::uint64_t absorbing = 0;  ///< won states (one seat holds everything)
  std::uint64_t start = 0;      ///< index of (3,...,3; 1)
};

/// Dense 0-based indexing of all game states for a fixed player count.
///
/// Ordering contract: transient states first, absorbing states last.
/// Inside each class, states sort by center count ascending, then by the
/// combinadic rank of the chip composition, then by turn. Center never
/// decreases during play, so with this order the transient-to-transient
/// matrix is block triangular over center levels, which the solver
/// exploits. Conversions are O(players) arithmetic with no hashing.
class StateSpace {
 public:
  explicit StateSpace(int players) : n_(players) {
    total_ = count_states(players);  // validates players and range
    const int levels = 3 * n_;
    build_binomials();

    levels_.resize(static_cast<std::size_t>(levels));
    trans_base_.resize(static_cast<std::size_t>(levels) + 1, 0);
    for (int m = 0; m < levels; ++m) {
      Level& lv = levels_[static_cast<std::size_t>(m)];
      const int pile_sum = 3 * n_ - m;
      lv.comp_count = binom(pile_sum + n_ - 1, n_ - 1);
      lv.single_pile.reserve(static_cast<std::size_t>(n_));
      for (int w = 1; w <= n_; ++w) {
        std::uint64_t r = 0;
        for (int k = w; k <= n_ - 1; ++k) r += binom(pile_sum + k - 1, k);
        lv.single_pile.emplace_back(r, w);
      }
      std::sort(lv.single_pile.begin(), lv.single_pile.end());
      trans_base_[static_cast<std::size_t>(m) + 1] =
          trans_base_[static_cast<std::size_t>(m)] +
          (lv.comp_count - static_cast<std::uint64_t>(n_)) * static_cast<std::uint64_t>(n_);
    }
    transient_ = trans_base_[static_cast<std::size_t>(levels)];
    absorbing_ = static_cast<std::uint64_t>(levels) * static_cast<std::uint64_t>(n_) *
                 static_cast<std::uint64_t>(n_);
    if (transient_ + absorbing_ != total_)
      throw std::logic_error("StateSpace: partition does not match the closed-form count");
    start_ = rank(initial_state(n_));
  }

  int players() const { return n_; }

  StateSpaceMeta meta() const { return StateSpaceMeta{n_, total_, transient_, absorbing_, start_}; }

  std::uint64_t size() const { return total_; }
  std::uint64_t transient_count() const { return transient_; }
  std::uint64_t absorbing_count() const { return absorbing_; }
  std::uint64_t start_index() const { return start_; }

  bool is_absorbing_index(std::uint64_t index) const { return index >= transient_; }

  /// Transient index range of each center level: level m owns indices
  /// [offsets[m], offsets[m+1]). The last entry equals transient_count().
  const std::vector<std::uint64_t>& transient_level_offsets() const { return trans_base_; }

  /// Center level of a transient index.
  int level_of_transient(std::uint64_t index) const {
    const auto it = std::upper_bound(trans_base_.begin(), trans_base_.end(), index);
    return static_cast<int>(it - trans_base_.begin()) - 1;
  }

  std::uint64_t rank(const GameState& s) const {
    validate_state(s);
    if (s.players() != n_) throw std::invalid_argument("rank: wrong player count");
    const int m = s.center;
    const Level& lv = levels_[static_cast<std::size_t>(m)];

    std::uint64_t comp_rank = 0;
    int prefix = 0;
    int holders = 0;
    for (int k = 1; k <= n_ - 1; ++k) {
      const int c = s.chips[static_cast<std::size_t>(k - 1)];
      if (c > 0) ++holders;
      prefix += c;
      comp_rank += binom(prefix + k - 1, k);
    }
    if (s.chips[static_cast<std::size_t>(n_ - 1)] > 0) ++holders;

    const std::uint64_t turn0 = static_cast<std::uint64_t>(s.turn - 1);
    if (holders == 1) {
      const auto it = std::lower_bound(lv.single_pile.begin(), lv.single_pile.end(),
                                       std::make_pair(comp_rank, 0));
      const std::uint64_t pos = static_cast<std::uint64_t>(it - lv.single_pile.begin());
      return transient_ +
             static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(n_) * static_cast<std::uint64_t>(n_) +
             pos * static_cast<std::uint64_t>(n_) + turn0;
    }
    const auto it = std::lower_bound(lv.single_pile.begin(), lv.single_pile.end(),
                                     std::make_pair(comp_rank, 0));
    const std::uint64_t holes = static_cast<std::uint64_t>(it - lv.single_pile.begin());
    return trans_base_[static_cast<std::size_t>(m)] +
           (comp_rank - holes) * static_cast<std::uint64_t>(n_) + turn0;
  }

  void unrank_into(std::uint64_t index, GameState& out) const {
    if (index >= total_) throw std::out_of_range("unrank: index out of range");
    out.chips.assign(static_cast<std::size_t>(n_), 0);
    if (index < transient_) {
      const int m = level_of_transient(index);
      const Level& lv = levels_[static_cast<std::size_t>(m)];
      const std::uint64_t slot = index - trans_base_[static_cast<std::size_t>(m)];
      std::uint64_t comp_rank = slot / static_cast<std::uint64_t>(n_);
      out.turn = static_cast<int>(slot % static_cast<std::uint64_t>(n_)) + 1;
      for (const auto& [hole, w] : lv.single_pile) {
        if (hole <= comp_rank) ++comp_rank;
      }
      decode_composition(comp_rank, 3 * n_ - m, out.chips);
      out.center = m;
      return;
    }
    const std::uint64_t j = index - transient_;
    const std::uint64_t per_level = static_cast<std::uint64_t>(n_) * static_cast<std::uint64_t>(n_);
    const int m = static_cast<int>(j / per_level);
    const std::uint64_t rem = j % per_level;
    const Level& lv = levels_[static_cast<std::size_t>(m)];
    const auto& [rank_unused, w] = lv.single_pile[static_cast<std::size_t>(rem / static_cast<std::uint64_t>(n_))];
    (void)rank_unused;
    out.chips[static_cast<std::size_t>(w - 1)] = 3 * n_ - m;
    out.center = m;
    out.turn = static_cast<int>(rem % static_cast<std::uint64_t>(n_)) + 1;
  }

  GameState unrank(std::uint64_t index) const {
    GameState s;
    unrank_into(index, s);
    return s;
  }

  /// Forward iteration over all states in rank order.
  class const_iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = GameState;
    using difference_type = std::int64_t;
    using pointer = const GameState*;
    using reference = GameState;

    const_iterator(const StateSpace* space, std::uint64_t index) : space_(space), index_(index) {}
    GameState operator*() const { return space_->unrank(index_); }
    const_iterator& operator++() {
      ++index_;
      return *this;
    }
    const_iterator operator++(int) {
      const_iterator old = *this;
      ++index_;
      return old;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.index_ == b.index_;
    }
    friend bool operator!=(const const_iterator& a, const const_iterator& b) { return !(a == b); }

   private:
    const StateSpace* space_;
    std::uint64_t index_;
  };

  const_iterator begin() const { return const_iterator(this, 0); }
  const_iterator end() const { return const_iterator(this, total_); }

 private:
  struct Level {
    std::uint64_t comp_count = 0;
    // (composition rank, winning seat) of the n single-pile compositions,
    // sorted by rank.
    std::vector<std::pair<std::uint64_t, int>> single_pile;
  };

  void build_binomials() {
    const int rows = 4 * n_;
    binom_.assign(static_cast<std::size_t>(rows) + 1,
                  std::vector<std::uint64_t>(static_cast<std::size_t>(n_) + 1, 0));
    for (int m = 0; m <= rows; ++m) {
      binom_[static_cast<std::size_t>(m)][0] = 1;
      const int kmax = std::min(m, n_);
      for (int k = 1; k <= kmax; ++k) {
        binom_[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] =
            binom_[static_cast<std::size_t>(m) - 1][static_cast<std::size_t>(k) - 1] +
            binom_[static_cast<std::size_t>(m) - 1][static_cast<std::size_t>(k)];
      }
    }
  }

  std::uint64_t binom(int m, int k) const {
    if (k < 0 || k > n_ || m < k) return 0;
    return binom_[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
  }

  // Inverse of the combinadic composition rank: splits `pile_sum` chips
  // back into n ordered piles.
  void decode_composition(std::uint64_t comp_rank, int pile_sum, std::vector<int>& chips) const {
    int cur = pile_sum + n_ - 2;
    int prev_prefix = 0;
    std::vector<int> b(static_cast<std::size_t>(n_ - 1), 0);
    for (int k = n_ - 1; k >= 1; --k) {
      while (binom(cur, k) > comp_rank) --cur;
      b[static_cast<std::size_t>(k - 1)] = cur;
      comp_rank -= binom(cur, k);
      --cur;
    }
    prev_prefix = 0;
    for (int k = 1; k <= n_ - 1; ++k) {
      const int prefix = b[static_cast<std::size_t>(k - 1)] - (k - 1);
      chips[static_cast<std::size_t>(k - 1)] = prefix - prev_prefix;
      prev_prefix = prefix;
    }
    chips[static_cast<std::size_t>(n_ - 1)] = pile_sum - prev_prefix;
  }

  int n_;
  std::uint64_t total_ = 0;
  std::uint64_t transient_ = 0;
  std::uint64_t absorbing_ = 0;
  std::uint64_t start_ = 0;
  std::vector<std::vector<std::uint64_t>> binom_;
  std::vector<Level> levels_;
  std::vector<std::uint64_t> trans_base_;
};

}  // namespace lcr

#endif  // LCR_STATE_SPACE_HPP
