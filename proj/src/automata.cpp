#include "fibpaths/automata.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fibpaths {

bool WeightedAutomaton::is_final(StateId q) const {
  return std::find(finals.begin(), finals.end(), q) != finals.end();
}

std::string ValidationReport::describe() const {
  std::ostringstream os;
  for (const auto& v : violations) {
    if (v.transition != Violation::npos) {
      os << "transition " << v.transition << " (from state " << v.state
         << "): " << v.reason << '\n';
    } else {
      os << "state " << v.state << ": " << v.reason << '\n';
    }
  }
  return os.str();
}

ValidationReport validate(const WeightedAutomaton& a) {
  ValidationReport report;
  if (a.num_states == 0) {
    report.violations.push_back({Violation::npos, 0, "automaton has no states"});
    return report;
  }
  if (a.initial >= a.num_states) {
    report.violations.push_back(
        {Violation::npos, a.initial, "initial state out of range"});
  }
  for (StateId q : a.finals) {
    if (q >= a.num_states) {
      report.violations.push_back(
          {Violation::npos, q, "final state out of range"});
    }
  }
  for (std::size_t i = 0; i < a.transitions.size(); ++i) {
    const Transition& t = a.transitions[i];
    if (t.from >= a.num_states || t.to >= a.num_states) {
      report.violations.push_back({i, t.from, "endpoint out of range"});
    }
    if (sgn(t.weight[0]) != 0) {
      report.violations.push_back(
          {i, t.from,
           "weight has nonzero constant term " + t.weight[0].get_str()});
    }
  }
  return report;
}

namespace {

const Level& level_at(const std::vector<Level>& levels, std::size_t i) {
  return levels[std::min(i, levels.size() - 1)];
}

}  // namespace

WeightedAutomaton build_chain(const ChainSpec& spec) {
  if (spec.levels.empty()) {
    throw std::invalid_argument("build_chain: no level weights given");
  }
  const std::size_t s = spec.depth;
  const auto& pos = spec.levels;
  const auto& neg = spec.mirror.empty() ? spec.levels : spec.mirror;

  WeightedAutomaton a;
  if (spec.kind == ChainKind::Linear) {
    a.num_states = s + 1;
    a.initial = 0;
    for (std::size_t i = 0; i <= s; ++i) {
      a.levels.push_back(static_cast<int>(i));
      const Level& w = level_at(pos, i);
      a.transitions.push_back({i, i, w.loop});
      if (i < s) {
        a.transitions.push_back({i, i + 1, w.away});
        a.transitions.push_back({i + 1, i, w.back});
      }
    }
  } else {
    // state index = level + s
    a.num_states = 2 * s + 1;
    a.initial = s;
    for (std::size_t q = 0; q < a.num_states; ++q) {
      a.levels.push_back(static_cast<int>(q) - static_cast<int>(s));
    }
    a.transitions.push_back({s, s, level_at(pos, 0).loop});
    for (std::size_t i = 0; i < s; ++i) {
      const Level& up = level_at(pos, i);
      a.transitions.push_back({s + i, s + i + 1, up.away});
      a.transitions.push_back({s + i + 1, s + i, up.back});
      a.transitions.push_back({s + i + 1, s + i + 1, level_at(pos, i + 1).loop});

      const Level& down = level_at(neg, i);
      a.transitions.push_back({s - i, s - i - 1, down.away});
      a.transitions.push_back({s - i - 1, s - i, down.back});
      a.transitions.push_back({s - i - 1, s - i - 1, level_at(neg, i + 1).loop});
    }
  }

  if (spec.finals == FinalStates::InitialOnly) {
    a.finals = {a.initial};
  } else {
    for (StateId q = 0; q < a.num_states; ++q) a.finals.push_back(q);
  }
  return a;
}

Series solve(const WeightedAutomaton& a, std::size_t order) {
  const ValidationReport report = validate(a);
  if (!report.ok()) {
    throw AutomatonError(AutomatonError::Code::InvalidAutomaton,
                         "invalid automaton:\n" + report.describe());
  }

  const std::size_t n = a.num_states;
  // (I - W) L = final indicator, one sparse row per state.
  std::vector<std::map<StateId, Series>> rows(n);
  std::vector<Series> rhs(n, Series(order));
  for (StateId q = 0; q < n; ++q) {
    rows[q].emplace(q, Series::constant(1, order));
    if (a.is_final(q)) rhs[q] = Series::constant(1, order);
  }
  for (const Transition& t : a.transitions) {
    const Series w = t.weight.truncated(std::min(order, t.weight.order()));
    auto [it, inserted] = rows[t.from].try_emplace(t.to, Series(order));
    it->second -= w;
  }
  // A series of lower order than requested would silently shrink the result.
  for (auto& row : rows) {
    for (auto& [col, entry] : row) {
      if (entry.order() < order) {
        throw SeriesError(SeriesErrc::OrderExceeded,
                          "transition weight is known only to order " +
                              std::to_string(entry.order()));
      }
    }
  }

  std::vector<StateId> pivot_row(n);
  std::vector<Series> pivot_inv(n, Series(order));
  std::vector<bool> used(n, false);

  for (StateId col = 0; col < n; ++col) {
    std::optional<StateId> best;
    std::size_t best_val = 0;
    for (StateId r = 0; r < n; ++r) {
      if (used[r]) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end()) continue;
      const Valuation v = it->second.valuation();
      if (v.infinite()) continue;
      if (!best || v.value() < best_val) {
        best = r;
        best_val = v.value();
      }
    }
    if (!best || best_val != 0) {
      throw AutomatonError(AutomatonError::Code::SingularSystem,
                           "no invertible pivot for state " +
                               std::to_string(col));
    }
    const StateId p = *best;
    used[p] = true;
    pivot_row[col] = p;
    pivot_inv[col] = inv(rows[p].at(col));

    for (StateId r = 0; r < n; ++r) {
      if (used[r]) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end()) continue;
      const Series factor = it->second * pivot_inv[col];
      rows[r].erase(it);
      for (const auto& [j, entry] : rows[p]) {
        if (j == col) continue;
        auto [dst, inserted] = rows[r].try_emplace(j, Series(order));
        dst->second -= factor * entry;
        if (dst->second.is_zero()) rows[r].erase(dst);
      }
      rhs[r] -= factor * rhs[p];
    }
  }

  std::vector<Series> x(n, Series(order));
  for (std::size_t c = n; c-- > 0;) {
    const StateId p = pivot_row[c];
    Series acc = rhs[p];
    for (const auto& [j, entry] : rows[p]) {
      if (j != c) acc -= entry * x[j];
    }
    x[c] = acc * pivot_inv[c];
  }
  return x[a.initial];
}

std::size_t default_depth(FinalStates finals, std::size_t order) {
  return finals == FinalStates::All ? std::max<std::size_t>(order, 1)
                                    : (order + 1) / 2 + 1;
}

ChainSpec motzkin_chain(std::size_t depth, std::size_t order) {
  const Series z = Series::monomial(1, order);
  return ChainSpec{ChainKind::Linear, FinalStates::InitialOnly, depth,
                   {Level{z, z, z}}, {}};
}

Series motzkin_demo(std::size_t order) {
  const std::size_t work = order + 2;
  const Series disc = poly({1, -2, -3}, work);
  const Series num = poly({1, -1}, work) - sqrt(disc);
  return div(num, Series::monomial(2, work, 2)).truncated(order);
}

}  // namespace fibpaths
