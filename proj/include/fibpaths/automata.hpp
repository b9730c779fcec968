#pragma once

// Weighted counting automata whose edges carry power series ("transitions in
// parallel"). Infinite chains are handled by truncating to finitely many
// levels and solving the resulting linear system of generating functions
// exactly over truncated series.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibpaths/series.hpp"

namespace fibpaths {

using StateId = std::size_t;

struct Transition {
  StateId from;
  StateId to;
  Series weight;
};

struct WeightedAutomaton {
  std::size_t num_states = 0;
  StateId initial = 0;
  std::vector<StateId> finals;
  std::vector<Transition> transitions;
  // Level of each state along a chain (display only; may be empty).
  std::vector<int> levels;

  bool is_final(StateId q) const;
};

struct Violation {
  std::size_t transition = 0;  // index into transitions, or npos
  StateId state = 0;
  std::string reason;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
  std::string describe() const;
};

/// Checks the convergence hypotheses: every weight has zero constant term and
/// every referenced state exists (finite out-degree holds for any finite
/// transition list).
ValidationReport validate(const WeightedAutomaton& a);

/// Weights of one level of a chain. `away` leads from level i to i+1 (away
/// from the initial state), `back` returns from i+1 to i, `loop` stays at i.
struct Level {
  Series away;
  Series back;
  Series loop;
};

enum class ChainKind { Linear, Bilinear };
enum class FinalStates { InitialOnly, All };

struct ChainSpec {
  ChainKind kind = ChainKind::Linear;
  FinalStates finals = FinalStates::InitialOnly;
  std::size_t depth = 0;
  // levels[i] describes level i >= 0; the last entry repeats for deeper
  // levels, so a constant chain needs a single entry.
  std::vector<Level> levels;
  // Bilinear only: mirror[i] describes the negative side, with `away`
  // leading from -i to -(i+1). mirror[0].loop is unused (state 0 owns
  // levels[0].loop). Empty means "same as levels".
  std::vector<Level> mirror;
};

/// Linear: states 0..depth. Bilinear: states for levels -depth..depth,
/// initial state at level 0. The boundary states keep only their loop and
/// the edge back toward level 0.
WeightedAutomaton build_chain(const ChainSpec& spec);

class AutomatonError : public std::runtime_error {
 public:
  enum class Code { InvalidAutomaton, SingularSystem };
  AutomatonError(Code code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

/// GF of the language accepted from the initial state through z^order, by
/// exact Gaussian elimination on L_q = sum w L_t + [q final].
Series solve(const WeightedAutomaton& a, std::size_t order);

/// Depth that makes a chain solve exact through z^order: heights of closed
/// walks are at most order/2, open walks can climb order levels.
std::size_t default_depth(FinalStates finals, std::size_t order);

/// Constant-weight Motzkin chain (all weights z) of the given depth.
ChainSpec motzkin_chain(std::size_t depth, std::size_t order);

/// (1 - z - sqrt(1 - 2z - 3z^2)) / (2z^2), the Motzkin numbers (A001006).
Series motzkin_demo(std::size_t order);

}  // namespace fibpaths
