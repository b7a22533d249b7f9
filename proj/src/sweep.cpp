#include "toricbb/criteria.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace toricbb {

const char* to_string(SweepGoal goal) {
  switch (goal) {
    case SweepGoal::WellRounded: return "wellrounded";
    case SweepGoal::NotWellRounded: return "notwellrounded";
    case SweepGoal::Stratifies: return "stratifies";
  }
  return "";
}

std::vector<IntVector> sweep_enumeration(int dim, int bound) {
  if (dim < 1 || bound < 0) return {};
  const auto n = static_cast<std::size_t>(dim);
  std::vector<std::vector<int>> raw;
  std::vector<int> cur(n, -bound);
  for (;;) {
    raw.push_back(cur);
    std::size_t k = n;
    while (k > 0 && cur[k - 1] == bound) {
      cur[k - 1] = -bound;
      --k;
    }
    if (k == 0) break;
    ++cur[k - 1];
  }
  auto norms = [](const std::vector<int>& x) {
    int inf = 0;
    int one = 0;
    for (int c : x) {
      inf = std::max(inf, std::abs(c));
      one += std::abs(c);
    }
    return std::make_pair(inf, one);
  };
  std::stable_sort(raw.begin(), raw.end(),
                   [&](const std::vector<int>& a, const std::vector<int>& b) { return norms(a) < norms(b); });
  std::vector<IntVector> out;
  out.reserve(raw.size());
  for (const auto& x : raw) out.emplace_back(x.begin(), x.end());
  return out;
}

namespace {

bool goal_holds(const Flow& flow, SweepGoal goal) {
  switch (goal) {
    case SweepGoal::WellRounded: return well_rounded(flow).well_rounded;
    case SweepGoal::NotWellRounded: return !well_rounded(flow).well_rounded;
    case SweepGoal::Stratifies: return stratification_check(flow).is_stratification;
  }
  return false;
}

}  // namespace

SweepReport cocharacter_sweep(const Polytope& p, int bound, SweepGoal goal) {
  SweepReport report;
  report.bound = bound;
  report.goal = goal;
  std::map<std::vector<std::size_t>, std::size_t> class_of;
  for (auto& v : sweep_enumeration(p.dim(), bound)) {
    ++report.enumerated;
    Cocharacter c{std::move(v)};
    if (!is_admissible(p, c).admissible) continue;
    ++report.admissible;
    Flow flow(p, c);
    auto key = flow.order_key();
    auto [it, inserted] = class_of.emplace(key, report.classes.size());
    if (inserted) {
      bool ok = goal_holds(flow, goal);
      report.classes.push_back(SweepClass{std::move(key), c.v, 0, ok});
      if (ok) ++report.satisfying;
    }
    ++report.classes[it->second].members;
  }
  return report;
}

StratifyingWitness stratifying_witness(const Polytope& p, int bound) {
  StratifyingWitness result;
  result.bound = bound;
  std::map<std::vector<std::size_t>, bool> seen;
  for (auto& v : sweep_enumeration(p.dim(), bound)) {
    Cocharacter c{std::move(v)};
    if (!is_admissible(p, c).admissible) continue;
    Flow flow(p, c);
    if (!seen.emplace(flow.order_key(), true).second) continue;
    if (stratification_check(flow).is_stratification) {
      result.witness = c;
      return result;
    }
  }
  result.absence_certified = !classify_stratification(p).existentially_stratified;
  return result;
}

}  // namespace toricbb
