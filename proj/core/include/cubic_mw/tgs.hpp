#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubic_mw/point_index.hpp"
#include "cubic_mw/surface.hpp"

namespace cubic_mw {

/// Initial generators: indices into a PointIndex, plus optional literal points
/// that are not in the index. Literal points get ids index.size()+1, +2, ...
/// in the order given.
struct GeneratorSet {
  std::vector<std::size_t> indices;
  std::vector<ProjPoint> extra_points;

  GeneratorSet() = default;
  GeneratorSet(std::vector<std::size_t> idx) : indices(std::move(idx)) {}
  GeneratorSet(std::initializer_list<std::size_t> idx) : indices(idx) {}
  GeneratorSet(std::vector<std::size_t> idx, std::vector<ProjPoint> extra)
      : indices(std::move(idx)), extra_points(std::move(extra)) {}
};

/// Partial decompositions i = j o k recorded by the descent: j was generated
/// when the entry was stored, k was not, and i, j, k <= n.
class DecompStore {
 public:
  struct Entry {
    std::uint32_t j;
    std::uint32_t k;
  };

  explicit DecompStore(std::size_t n = 0) : entries_(n + 1) {}

  void add(std::size_t i, std::size_t j, std::size_t k) {
    entries_[i].push_back({static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k)});
    ++total_;
  }
  std::span<const Entry> of(std::size_t i) const { return entries_[i]; }
  std::size_t bound() const { return entries_.empty() ? 0 : entries_.size() - 1; }
  std::size_t total() const { return total_; }

 private:
  std::vector<std::vector<Entry>> entries_;
  std::size_t total_ = 0;
};

struct FirstBad {
  std::size_t index;
  std::int64_t hsum;
  friend bool operator==(const FirstBad&, const FirstBad&) = default;
};

struct TGSReport {
  std::size_t n = 0;
  /// h_sum of the n-th point.
  std::int64_t height_bound = 0;
  std::vector<std::size_t> initial_set;
  /// Every generated id, ascending; includes initial generators even beyond n.
  std::vector<std::size_t> generated;
  /// |generated ∩ {1..n}|.
  std::size_t generated_count = 0;
  /// Points added by each pass of the outer loop, including the final pass
  /// that adds nothing.
  std::vector<std::size_t> per_iteration_added;
  /// Passes that added at least one point. The closing pass that finds
  /// nothing is not counted.
  std::size_t iterations = 0;
  std::optional<FirstBad> first_bad;

  double fraction() const { return n == 0 ? 0.0 : static_cast<double>(generated_count) / n; }
  double percentage() const { return 100.0 * fraction(); }

  friend bool operator==(const TGSReport&, const TGSReport&) = default;
};

/// TestGeneratingSet: which of the first n points are reachable from G by
/// secant compositions.
///
/// Each pass visits every i <= n not yet generated. It first looks in the
/// decomposition store for an entry (j, k) of i whose k was added by the
/// previous pass. Failing that it composes i with each point j added by the
/// previous pass; if the result k was also added by the previous pass, i is
/// generated, otherwise (j, k) is stored when k <= n. Results outside the
/// index, or landing on excluded points, are dropped. Points found in a pass
/// are merged at the end of the pass; the loop stops when a pass finds nothing.
///
/// Throws IndexTooSmall if n is 0 or exceeds the complete prefix of the index,
/// or if G names an index outside 1..idx.size().
TGSReport test_generating_set(const PointIndex& idx, const GeneratorSet& g, std::size_t n,
                              DecompStore* decomp_out = nullptr);

/// Least set S containing G and closed under: i <= n joins S when some j in S
/// has i o j defined and equal to a point of S. Computed by rescanning every
/// candidate against every member of S until nothing changes, with no
/// bookkeeping carried between scans. Same preconditions as
/// test_generating_set.
std::vector<std::size_t> closure_oracle(const PointIndex& idx, const GeneratorSet& g,
                                        std::size_t n);

/// Drops generators, highest index first, whose removal does not shrink the
/// generated set at bound n.
std::vector<std::size_t> remove_superfluous(const PointIndex& idx, std::vector<std::size_t> g,
                                            std::size_t n);

/// Tries G = {1..4}, {1..5}, ..., {1..max_prefix} and returns the first whose
/// generated fraction at n_small reaches `threshold`, after remove_superfluous.
std::optional<std::vector<std::size_t>> greedy_initial_set(const PointIndex& idx,
                                                           std::size_t n_small, double threshold,
                                                           std::size_t max_prefix = 12);

struct InjectionResult {
  std::vector<std::size_t> final_set;
  /// One report per TGS run; rounds + 1 entries unless everything was
  /// generated earlier.
  std::vector<TGSReport> trace;
};

/// Repeatedly runs TGS at bound n and throws the `batch` smallest
/// non-generated indices into G, for at most `rounds` injections. The run
/// after the last injection is part of the trace.
InjectionResult inject_bad_points(const PointIndex& idx, std::vector<std::size_t> g0,
                                  std::size_t n, std::size_t batch, std::size_t rounds);

/// "317 100 74 74.0 4 30 86": height bound, index bound, generated, percent,
/// iterations, first bad index and height ("-" when everything was generated).
std::string format_table_row(const TGSReport& report);

/// JSON object with surface_label, n, hsum_bound, initial_set, generated_count,
/// percentage, iterations, first_bad ({index, hsum} or null), per_iteration_added.
std::string report_to_json(const TGSReport& report, std::string_view surface_label,
                           std::int64_t hsum_bound);

}  // namespace cubic_mw
