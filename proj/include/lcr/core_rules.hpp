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

#ifndef LCR_CORE_RULES_HPP
#define LCR_CORE_RULES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lcr/rational.hpp"

namespace lcr {

/// Rule switches. `modified_start` makes player 1's first roll of the
/// game keep every LEFT die (the chips stay put instead of moving to
/// the last seat); all later rolls are unchanged.
struct RuleVariant {
  bool modified_start = false;
};

/// One game position: chip count per seat (seats are 1-based in every
/// public interface), chips in the center pot, and whose turn is next.
///
/// Invariant: sum(chips) + center == 3 * players, chips never leave the
/// table. The all-chips-in-center position cannot occur.
struct GameState {
  std::vector<int> chips;
  int center = 0;
  int turn = 1;

  int players() const { return static_cast<int>(chips.size()); }

  friend bool operator==(const GameState& a, const GameState& b) {
    return a.turn == b.turn && a.center == b.center && a.chips == b.chips;
  }
  friend bool operator!=(const GameState& a, const GameState& b) { return !(a == b); }
};

/// The start position: three chips per seat, empty center, seat 1 rolls.
inline GameState initial_state(int players) {
  if (players < 2) throw std::invalid_argument("initial_state: need at least 2 players");
  GameState s;
  s.chips.assign(static_cast<std::size_t>(players), 3);
  s.center = 0;
  s.turn = 1;
  return s;
}

/// Throws unless the state satisfies every structural invariant.
inline void validate_state(const GameState& s) {
  const int n = s.players();
  if (n < 2) throw std::invalid_argument("GameState: need at least 2 players");
  if (s.turn < 1 || s.turn > n) throw std::invalid_argument("GameState: turn out of range");
  if (s.center < 0) throw std::invalid_argument("GameState: negative center");
  int sum = 0;
  for (int c : s.chips) {
    if (c < 0) throw std::invalid_argument("GameState: negative chip count");
    sum += c;
  }
  if (sum + s.center != 3 * n)
    throw std::invalid_argument("GameState: chip total differs from 3n");
  if (s.center == 3 * n) throw std::invalid_argument("GameState: all chips in center");
}

/// Counts of LEFT / CENTER / RIGHT faces in one throw, with the exact
/// probability of that multiset. HOLD faces are the remainder.
struct RollOutcome {
  int left = 0;
  int center = 0;
  int right = 0;
  Rational probability;

  int moved() const { return left + center + right; }
};

namespace detail {

inline std::vector<RollOutcome> make_roll_distribution(int num_dice) {
  // P(l,c,r) = multinomial(k; l,c,r,h) * (1/6)^(l+c+r) * (1/2)^h, h = k-l-c-r.
  static constexpr int kFactorial[4] = {1, 1, 2, 6};
  std::vector<RollOutcome> out;
  const int k = num_dice;
  for (int l = 0; l <= k; ++l) {
    for (int c = 0; c + l <= k; ++c) {
      for (int r = 0; r + c + l <= k; ++r) {
        const int h = k - l - c - r;
        const int coeff = kFactorial[k] / (kFactorial[l] * kFactorial[c] * kFactorial[r] * kFactorial[h]);
        std::int64_t den = 1;
        for (int i = 0; i < l + c + r; ++i) den *= 6;
        for (int i = 0; i < h; ++i) den *= 2;
        out.push_back(RollOutcome{l, c, r, Rational(coeff, den)});
      }
    }
  }
  return out;
}

}  // namespace detail

/// Every distinct (left, center, right) outcome of throwing `num_dice`
/// dice, with exact probabilities summing to 1. The list is cached;
/// outcome order is (left, center, right) lexicographic, so the all-HOLD
/// outcome comes first.
inline const std::vector<RollOutcome>& roll_distribution(int num_dice) {
  if (num_dice < 0 || num_dice > 3)
    throw std::invalid_argument("roll_distribution: dice count must be in 0..3");
  static const std::vector<RollOutcome> tables[4] = {
      detail::make_roll_distribution(0), detail::make_roll_distribution(1),
      detail::make_roll_distribution(2), detail::make_roll_distribution(3)};
  return tables[num_dice];
}

/// Dice thrown by the seat to act: as many as they have chips, capped at 3.
inline int dice_for(const GameState& s) {
  return std::min(s.chips[static_cast<std::size_t>(s.turn - 1)], 3);
}

/// Seat to the left of `seat` (1-based, wrapping). For two players the
/// single opponent sits on both sides.
inline int left_neighbor(int seat, int players) { return seat == 1 ? players : seat - 1; }

/// Seat to the right of `seat` (1-based, wrapping).
inline int right_neighbor(int seat, int players) { return seat == players ? 1 : seat + 1; }

/// Applies one roll: the acting seat gives `left` chips to its left
/// neighbor, `right` to its right neighbor and `center` to the pot,
/// then the turn passes on. Throws if the outcome moves more chips than
/// the acting seat holds or more than its dice count allows.
inline GameState apply_roll(const GameState& s, const RollOutcome& outcome) {
  validate_state(s);
  const int n = s.players();
  const int moved = outcome.moved();
  if (outcome.left < 0 || outcome.center < 0 || outcome.right < 0)
    throw std::invalid_argument("apply_roll: negative outcome count");
  if (moved > dice_for(s))
    throw std::invalid_argument("apply_roll: outcome not drawable with this many dice");
  if (moved > s.chips[static_cast<std::size_t>(s.turn - 1)])
    throw std::invalid_argument("apply_roll: outcome moves more chips than the player holds");

  GameState next = s;
  next.chips[static_cast<std::size_t>(s.turn - 1)] -= moved;
  next.chips[static_cast<std::size_t>(left_neighbor(s.turn, n) - 1)] += outcome.left;
  next.chips[static_cast<std::size_t>(right_neighbor(s.turn, n) - 1)] += outcome.right;
  next.center += outcome.center;
  next.turn = s.turn % n + 1;
  return next;
}

/// The winning seat if the state is absorbing (exactly one seat still
/// holds chips), otherwise empty. Absorption is checked before the
/// holder would roll, so the sole chip holder never acts.
inline std::optional<int> winner(const GameState& s) {
  validate_state(s);
  int holder = 0;
  for (int i = 0; i < s.players(); ++i) {
    if (s.chips[static_cast<std::size_t>(i)] > 0) {
      if (holder != 0) return std::nullopt;
      holder = i + 1;
    }
  }
  return holder == 0 ? std::nullopt : std::optional<int>(holder);
}

namespace detail {

// Visits the unmerged successor list of a transient state. `fn` receives
// a scratch GameState that is only valid for the duration of the call,
// together with the outcome probability. Callers merge duplicates.
template <typename Fn>
void visit_successors_raw(const GameState& s, Fn&& fn) {
  const int n = s.players();
  const int k = dice_for(s);
  if (k == 0) {
    GameState next = s;
    next.turn = s.turn % n + 1;
    fn(next, Rational::one());
    return;
  }
  GameState scratch = s;
  const std::size_t act = static_cast<std::size_t>(s.turn - 1);
  const std::size_t lft = static_cast<std::size_t>(left_neighbor(s.turn, n) - 1);
  const std::size_t rgt = static_cast<std::size_t>(right_neighbor(s.turn, n) - 1);
  scratch.turn = s.turn % n + 1;
  for (const RollOutcome& o : roll_distribution(k)) {
    scratch.chips = s.chips;
    scratch.center = s.center;
    scratch.chips[act] -= o.moved();
    scratch.chips[lft] += o.left;
    scratch.chips[rgt] += o.right;
    scratch.center += o.center;
    fn(const_cast<const GameState&>(scratch), o.probability);
  }
}

inline std::vector<std::pair<GameState, Rational>> merge_successors(
    std::vector<std::pair<GameState, Rational>> raw) {
  std::vector<std::pair<GameState, Rational>> merged;
  merged.reserve(raw.size());
  for (auto& entry : raw) {
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const auto& m) { return m.first == entry.first; });
    if (it == merged.end()) {
      merged.push_back(std::move(entry));
    } else {
      it->second += entry.second;
    }
  }
  return merged;
}

}  // namespace detail

/// All successor states of a transient state with exact transition
/// probabilities. A seat with no chips is skipped: the single successor
/// has the same chips and the next seat to act. Distinct rolls that
/// produce the same state (always the case for two players) are merged.
inline std::vector<std::pair<GameState, Rational>> successors(const GameState& s) {
  validate_state(s);
  if (winner(s)) throw std::invalid_argument("successors: state is absorbing");
  std::vector<std::pair<GameState, Rational>> raw;
  detail::visit_successors_raw(s, [&](const GameState& next, const Rational& p) {
    raw.emplace_back(next, p);
  });
  return detail::merge_successors(std::move(raw));
}

/// Successor distribution of the very first transition of a game.
/// Under the modified start rule every LEFT face of player 1's roll is
/// treated as a HOLD, so an (l,c,r) outcome acts as (0,c,r); otherwise
/// identical to `successors`.
inline std::vector<std::pair<GameState, Rational>> first_turn_successors(const GameState& s,
                                                                         const RuleVariant& variant) {
  validate_state(s);
  if (s != initial_state(s.players()))
    throw std::invalid_argument("first_turn_successors: state is not the start state");
  if (!variant.modified_start) return successors(s);

  std::vector<std::pair<GameState, Rational>> raw;
  for (const RollOutcome& o : roll_distribution(dice_for(s))) {
    RollOutcome held = o;
    held.left = 0;
    raw.emplace_back(apply_roll(s, held), o.probability);
  }
  return detail::merge_successors(std::move(raw));
}

}  // namespace lcr

#endif  // LCR_CORE_RULES_HPP
