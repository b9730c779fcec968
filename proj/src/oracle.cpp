#include "fibpaths/oracle.hpp"

#include <map>
#include <utility>

#include "fibpaths/kfib.hpp"

namespace fibpaths::oracle {

PathConstraint constraint_of(FamilyKind family) {
  switch (family) {
    case FamilyKind::Fib: return {true, true};
    case FamilyKind::Grand: return {false, true};
    case FamilyKind::Prefix: return {true, false};
    case FamilyKind::GrandPrefix: return {false, false};
  }
  throw std::invalid_argument("unknown family");
}

ColorCount kfib_colors(unsigned k) {
  return [k](unsigned l) { return kfib(k, l); };
}

namespace {

class Counter {
 public:
  Counter(PathConstraint c, const ColorCount& colors, unsigned n, bool memo)
      : constraint_(c), memo_(memo) {
    colors_.reserve(n + 1);
    colors_.emplace_back(0);
    for (unsigned l = 1; l <= n; ++l) colors_.push_back(colors(l));
  }

  Integer run(unsigned remaining, long height) {
    if (remaining == 0) {
      return (!constraint_.end_at_zero || height == 0) ? 1 : 0;
    }
    const auto key = std::make_pair(remaining, height);
    if (memo_) {
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    Integer total = run(remaining - 1, height + 1);
    if (height > 0 || !constraint_.nonneg) {
      total += run(remaining - 1, height - 1);
    }
    for (unsigned l = 1; l <= remaining; ++l) {
      if (sgn(colors_[l]) == 0) continue;
      total += colors_[l] * run(remaining - l, height);
    }
    if (memo_) cache_.emplace(key, total);
    return total;
  }

 private:
  PathConstraint constraint_;
  bool memo_;
  std::vector<Integer> colors_;
  std::map<std::pair<unsigned, long>, Integer> cache_;
};

void enumerate(PathConstraint c, const std::vector<Integer>& colors,
               unsigned remaining, long height, Path& prefix,
               const Integer& weight, std::vector<WeightedPath>& out) {
  if (remaining == 0) {
    if (!c.end_at_zero || height == 0) out.push_back({prefix, weight});
    return;
  }
  prefix.push_back({Step::Kind::Up, 1});
  enumerate(c, colors, remaining - 1, height + 1, prefix, weight, out);
  prefix.pop_back();
  if (height > 0 || !c.nonneg) {
    prefix.push_back({Step::Kind::Down, 1});
    enumerate(c, colors, remaining - 1, height - 1, prefix, weight, out);
    prefix.pop_back();
  }
  for (unsigned l = 1; l <= remaining; ++l) {
    if (sgn(colors[l]) == 0) continue;
    prefix.push_back({Step::Kind::Horizontal, l});
    enumerate(c, colors, remaining - l, height, prefix, weight * colors[l],
              out);
    prefix.pop_back();
  }
}

}  // namespace

Integer count_paths(PathConstraint constraint, const ColorCount& colors,
                    unsigned n, Mode mode) {
  if (n > kMaxCountLength) {
    throw BudgetExceeded("brute-force count limited to n <= " +
                         std::to_string(kMaxCountLength) + ", got " +
                         std::to_string(n));
  }
  Counter counter(constraint, colors, n, mode == Mode::Memoized);
  return counter.run(n, 0);
}

Integer count_paths(FamilyKind family, unsigned k, unsigned n, Mode mode) {
  return count_paths(constraint_of(family), kfib_colors(k), n, mode);
}

std::vector<WeightedPath> list_paths(FamilyKind family, unsigned k,
                                     unsigned n) {
  if (n > kMaxListLength) {
    throw BudgetExceeded("path listing limited to n <= " +
                         std::to_string(kMaxListLength) + ", got " +
                         std::to_string(n));
  }
  std::vector<Integer> colors{0};
  for (unsigned l = 1; l <= n; ++l) colors.push_back(kfib(k, l));
  std::vector<WeightedPath> out;
  Path prefix;
  enumerate(constraint_of(family), colors, n, 0, prefix, Integer(1), out);
  return out;
}

std::string format_path(const Path& path) {
  if (path.empty()) return "(empty)";
  std::string out;
  for (const Step& s : path) {
    if (!out.empty()) out += ' ';
    switch (s.kind) {
      case Step::Kind::Up: out += 'U'; break;
      case Step::Kind::Down: out += 'D'; break;
      case Step::Kind::Horizontal: out += 'H' + std::to_string(s.length); break;
    }
  }
  return out;
}

}  // namespace fibpaths::oracle
