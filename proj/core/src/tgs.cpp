#include "cubic_mw/tgs.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "cubic_mw/detail/small_compose.hpp"
#include "cubic_mw/errors.hpp"

namespace cubic_mw {

namespace {

/// Index points plus literal generators, addressed by a single id space.
class Universe {
 public:
  Universe(const PointIndex& idx, const GeneratorSet& g, std::size_t n) : idx_(idx) {
    if (n == 0) throw IndexTooSmall("index bound n must be at least 1");
    if (n > idx.complete_prefix()) {
      std::string msg = "index bound " + std::to_string(n) + " exceeds the " +
                        std::to_string(idx.complete_prefix()) +
                        " points known complete up to h_sum " + std::to_string(idx.hsum_bound());
      if (n <= idx.size()) {
        msg += "; rebuild with h_sum bound >= " + std::to_string(idx.h_sum(n));
      } else {
        msg += "; rebuild with a larger height bound";
      }
      throw IndexTooSmall(msg);
    }
    for (std::size_t i : g.indices) {
      if (i < 1 || i > idx.size()) {
        throw IndexTooSmall("generator index " + std::to_string(i) + " outside 1.." +
                            std::to_string(idx.size()));
      }
      initial_.push_back(i);
    }
    for (const auto& p : g.extra_points) {
      if (!is_on_surface(idx.surface(), p)) {
        throw PreconditionError("generator " + p.to_string() + " is not on the surface");
      }
      auto small = p.to_small();
      if (!small) throw PreconditionError("generator " + p.to_string() + " exceeds int64");
      if (auto id = idx.lookup(*small)) {
        initial_.push_back(*id);
        continue;
      }
      auto [it, fresh] = extra_ids_.emplace(*small, idx.size() + extra_.size() + 1);
      if (fresh) {
        extra_.push_back(*small);
        extra_h_.push_back(small->h_max());
      }
      initial_.push_back(it->second);
    }
    std::sort(initial_.begin(), initial_.end());
    initial_.erase(std::unique(initial_.begin(), initial_.end()), initial_.end());
  }

  std::size_t size() const { return idx_.size() + extra_.size(); }
  const std::vector<std::size_t>& initial() const { return initial_; }

  /// Id of i o j when the composition exists and lands on a known point.
  std::optional<std::size_t> compose(std::size_t i, std::size_t j) const {
    auto out = detail::compose_small(idx_.surface(), point(i), h_max(i), point(j), h_max(j));
    if (out.status != detail::SmallStatus::Ok) return std::nullopt;
    if (auto id = idx_.lookup(out.point)) return id;
    if (extra_.empty()) return std::nullopt;
    auto it = extra_ids_.find(out.point);
    if (it == extra_ids_.end()) return std::nullopt;
    return it->second;
  }

 private:
  const SmallPoint& point(std::size_t id) const {
    return id <= idx_.size() ? idx_.small(id) : extra_[id - idx_.size() - 1];
  }
  std::int64_t h_max(std::size_t id) const {
    return id <= idx_.size() ? idx_.h_max(id) : extra_h_[id - idx_.size() - 1];
  }

  const PointIndex& idx_;
  std::vector<std::size_t> initial_;
  std::vector<SmallPoint> extra_;
  std::vector<std::int64_t> extra_h_;
  std::unordered_map<SmallPoint, std::size_t, SmallPointHash> extra_ids_;
};

TGSReport make_report(const PointIndex& idx, const std::vector<std::size_t>& initial,
                      const std::vector<char>& generated, std::size_t n) {
  TGSReport r;
  r.n = n;
  r.height_bound = idx.h_sum(n);
  r.initial_set = initial;
  for (std::size_t id = 1; id < generated.size(); ++id) {
    if (!generated[id]) continue;
    r.generated.push_back(id);
    if (id <= n) ++r.generated_count;
  }
  for (std::size_t i = 1; i <= n; ++i) {
    if (!generated[i]) {
      r.first_bad = FirstBad{i, idx.h_sum(i)};
      break;
    }
  }
  return r;
}

}  // namespace

TGSReport test_generating_set(const PointIndex& idx, const GeneratorSet& g, std::size_t n,
                              DecompStore* decomp_out) {
  const Universe uni(idx, g, n);
  std::vector<char> generated(uni.size() + 1, 0);
  std::vector<char> in_just(uni.size() + 1, 0);
  DecompStore decomp(n);

  std::vector<std::size_t> just = uni.initial();
  for (std::size_t id : just) generated[id] = 1;

  std::vector<std::size_t> per_pass;
  std::vector<std::size_t> added;
  while (!just.empty()) {
    for (std::size_t id : just) in_just[id] = 1;
    added.clear();
    for (std::size_t i = 1; i <= n; ++i) {
      if (generated[i]) continue;
      bool hit = false;
      for (const auto& e : decomp.of(i)) {
        if (in_just[e.k]) {
          hit = true;
          break;
        }
      }
      if (!hit) {
        for (std::size_t j : just) {
          auto k = uni.compose(i, j);
          if (!k) continue;
          if (in_just[*k]) {
            hit = true;
            break;
          }
          if (*k <= n) decomp.add(i, j, *k);
        }
      }
      if (hit) added.push_back(i);
    }
    for (std::size_t id : just) in_just[id] = 0;
    for (std::size_t i : added) generated[i] = 1;
    per_pass.push_back(added.size());
    just = added;
  }

  TGSReport report = make_report(idx, uni.initial(), generated, n);
  report.iterations = static_cast<std::size_t>(
      std::count_if(per_pass.begin(), per_pass.end(), [](std::size_t k) { return k > 0; }));
  report.per_iteration_added = std::move(per_pass);
  if (decomp_out != nullptr) *decomp_out = std::move(decomp);
  return report;
}

std::vector<std::size_t> closure_oracle(const PointIndex& idx, const GeneratorSet& g,
                                        std::size_t n) {
  const Universe uni(idx, g, n);
  std::vector<char> member(uni.size() + 1, 0);
  std::vector<std::size_t> members = uni.initial();
  for (std::size_t id : members) member[id] = 1;

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 1; i <= n; ++i) {
      if (member[i]) continue;
      for (std::size_t j : members) {
        auto k = uni.compose(i, j);
        if (k && member[*k]) {
          member[i] = 1;
          members.push_back(i);
          changed = true;
          break;
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::size_t> remove_superfluous(const PointIndex& idx, std::vector<std::size_t> g,
                                            std::size_t n) {
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  const auto target = test_generating_set(idx, g, n).generated;
  for (std::size_t pos = g.size(); pos-- > 0;) {
    std::vector<std::size_t> reduced = g;
    reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(pos));
    if (reduced.empty()) continue;
    const auto got = test_generating_set(idx, reduced, n).generated;
    if (std::includes(got.begin(), got.end(), target.begin(), target.end())) g = std::move(reduced);
  }
  return g;
}

std::optional<std::vector<std::size_t>> greedy_initial_set(const PointIndex& idx,
                                                           std::size_t n_small, double threshold,
                                                           std::size_t max_prefix) {
  for (std::size_t size = 4; size <= max_prefix && size <= idx.size(); ++size) {
    std::vector<std::size_t> g(size);
    for (std::size_t i = 0; i < size; ++i) g[i] = i + 1;
    const auto report = test_generating_set(idx, g, n_small);
    if (report.fraction() >= threshold) return remove_superfluous(idx, std::move(g), n_small);
  }
  return std::nullopt;
}

InjectionResult inject_bad_points(const PointIndex& idx, std::vector<std::size_t> g0,
                                  std::size_t n, std::size_t batch, std::size_t rounds) {
  if (batch == 0) throw PreconditionError("injection batch must be at least 1");
  InjectionResult result;
  result.final_set = std::move(g0);
  for (std::size_t round = 0;; ++round) {
    auto report = test_generating_set(idx, result.final_set, n);
    const bool done = !report.first_bad || round == rounds;
    if (!done) {
      std::vector<char> have(n + 1, 0);
      for (std::size_t id : report.generated) {
        if (id <= n) have[id] = 1;
      }
      std::size_t thrown = 0;
      for (std::size_t i = 1; i <= n && thrown < batch; ++i) {
        if (!have[i]) {
          result.final_set.push_back(i);
          ++thrown;
        }
      }
      std::sort(result.final_set.begin(), result.final_set.end());
    }
    result.trace.push_back(std::move(report));
    if (done) break;
  }
  return result;
}

}  // namespace cubic_mw
