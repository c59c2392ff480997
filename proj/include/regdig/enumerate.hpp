#pragma once

#include "regdig/canonical.hpp"
#include "regdig/digraph.hpp"
#include "regdig/polya.hpp"
#include "regdig/transforms.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace regdig {

struct EnumerationFilter {
  bool forbid_multiarcs = false;
  bool forbid_loops = false;
  bool connected_only = false;
};

/// One isomorphism class: the canonical representative plus every derived
/// quantity the file format and the tables need.
struct GraphRecord {
  Digraph graph{0};
  std::uint64_t aut_order = 0;
  CycleIndex cycle_index;
  int components = 0;
  int loops = 0;
  int multiarcs = 0;

  bool operator==(const GraphRecord&) const = default;
};

struct EnumerateOptions {
  int workers = 0;  // 0 = hardware concurrency
  std::chrono::seconds time_budget{600};
};

class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline GraphRecord make_record(Digraph g) {
  GraphRecord rec;
  rec.cycle_index = cycle_index_of(g);
  rec.aut_order = rec.cycle_index.denominator;
  rec.components = weak_components(g).count;
  rec.loops = loop_count(g);
  rec.multiarcs = multiarc_count(g);
  rec.graph = std::move(g);
  return rec;
}

namespace detail {

/// Row prefix of a matrix under construction: cells holds complete rows
/// 0..m-1 row-major, colsum the per-column partial sums.
struct PartialState {
  std::vector<std::uint8_t> cells;
  std::vector<std::uint8_t> colsum;
};

/// Orderly generation of canonical k-regular adjacency matrices. Rows are
/// appended in ascending lexicographic order under the column-sum cap; a
/// partial matrix survives only if its block of assigned rows is the orbit
/// minimum under simultaneous relabeling of the assigned indices. Full
/// matrices that survive all n block checks are exactly the canonical forms,
/// and they appear in ascending row-major order.
class OrderlyEngine {
 public:
  OrderlyEngine(int n, int k, EnumerationFilter filter,
                std::chrono::steady_clock::time_point deadline,
                const std::atomic<bool>* abort = nullptr)
      : n_(n), k_(k), filter_(filter), deadline_(deadline), abort_(abort) {
    if (n < 0 || n > kMaxNodes) throw std::invalid_argument("OrderlyEngine: n out of range");
    if (k < 1 || k > 2) throw std::invalid_argument("OrderlyEngine: only k in {1,2} supported");
    buf_.fill(0);
    colsum_.fill(0);
  }

  void load(const PartialState& s) {
    std::copy(s.cells.begin(), s.cells.end(), buf_.begin());
    std::copy(s.colsum.begin(), s.colsum.end(), colsum_.begin());
  }

  PartialState state(int rows) const {
    PartialState s;
    s.cells.assign(buf_.begin(), buf_.begin() + rows * n_);
    s.colsum.assign(colsum_.begin(), colsum_.begin() + n_);
    return s;
  }

  /// Extends from row `from` and calls emit(*this) for every surviving
  /// prefix of exactly `stop` rows (stop == n: complete canonical matrices).
  template <typename Emit>
  void search(int from, int stop, Emit&& emit) {
    if (from == stop) {
      emit(*this);
      return;
    }
    fill_row(from, 0, k_, stop, emit);
  }

  const std::uint8_t* cells() const { return buf_.data(); }
  int n() const { return n_; }

 private:
  int entry_cap(int r, int c) const {
    if (filter_.forbid_loops && r == c) return 0;
    return filter_.forbid_multiarcs ? 1 : k_;
  }

  void check_budget() {
    if (++nodes_ % 1024 != 0) return;
    if (abort_ && abort_->load(std::memory_order_relaxed))
      throw budget_exceeded("enumeration aborted by sibling worker");
    if (std::chrono::steady_clock::now() > deadline_)
      throw budget_exceeded("enumeration time budget exceeded");
  }

  template <typename Emit>
  void fill_row(int m, int j, int remaining, int stop, Emit&& emit) {
    if (j == n_) {
      if (remaining != 0) return;
      check_budget();
      if (!block_is_minimal(buf_.data(), m + 1, n_)) return;
      search(m + 1, stop, emit);
      return;
    }
    int cap = std::min({entry_cap(m, j), k_ - colsum_[j], remaining});
    for (int v = 0; v <= cap; ++v) {
      buf_[m * n_ + j] = static_cast<std::uint8_t>(v);
      colsum_[j] = static_cast<std::uint8_t>(colsum_[j] + v);
      fill_row(m, j + 1, remaining - v, stop, emit);
      colsum_[j] = static_cast<std::uint8_t>(colsum_[j] - v);
    }
    buf_[m * n_ + j] = 0;
  }

  int n_, k_;
  EnumerationFilter filter_;
  std::chrono::steady_clock::time_point deadline_;
  const std::atomic<bool>* abort_;
  std::uint64_t nodes_ = 0;
  std::array<std::uint8_t, kMaxNodes * kMaxNodes> buf_{};
  std::array<std::uint8_t, kMaxNodes> colsum_{};
};

}  // namespace detail

/// One record per isomorphism class of k-regular digraphs on n nodes passing
/// the filter, sorted ascending by the canonical form's row-major flattening.
/// Deterministic for any worker count. Throws budget_exceeded when the time
/// budget runs out.
inline std::vector<GraphRecord> enumerate_unlabeled(int n, int k,
                                                    const EnumerationFilter& filter = {},
                                                    const EnumerateOptions& options = {}) {
  const auto deadline = std::chrono::steady_clock::now() + options.time_budget;
  const int seed_rows = std::min(n, 2);

  auto keep = [&](const GraphRecord& rec) {
    return !filter.connected_only || rec.components == 1;
  };

  // Sow: all surviving prefixes of seed_rows rows, in ascending order. Every
  // leaf below one seed precedes every leaf below a later seed (the prefix
  // rows decide the comparison), so appending per-seed outputs in seed order
  // keeps the global order ascending.
  std::vector<detail::PartialState> seeds;
  {
    detail::OrderlyEngine engine(n, k, filter, deadline);
    engine.search(0, seed_rows, [&](const detail::OrderlyEngine& e) {
      seeds.push_back(e.state(seed_rows));
    });
  }

  int workers = options.workers > 0 ? options.workers
                                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min<int>(workers, static_cast<int>(seeds.size())));

  std::vector<std::vector<GraphRecord>> per_seed(seeds.size());
  auto expand_seed = [&](std::size_t i, detail::OrderlyEngine& engine) {
    engine.load(seeds[i]);
    engine.search(seed_rows, n, [&](const detail::OrderlyEngine& e) {
      Digraph g(n, std::vector<std::uint8_t>(e.cells(), e.cells() + n * n));
      GraphRecord rec = make_record(std::move(g));
      if (keep(rec)) per_seed[i].push_back(std::move(rec));
    });
  };

  if (workers <= 1) {
    detail::OrderlyEngine engine(n, k, filter, deadline);
    for (std::size_t i = 0; i < seeds.size(); ++i) expand_seed(i, engine);
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> abort{false};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        detail::OrderlyEngine engine(n, k, filter, deadline, &abort);
        try {
          for (std::size_t i = next.fetch_add(1); i < seeds.size(); i = next.fetch_add(1)) {
            if (abort.load(std::memory_order_relaxed)) return;
            expand_seed(i, engine);
          }
        } catch (...) {
          errors[w] = std::current_exception();
          abort.store(true);
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  std::vector<GraphRecord> out;
  for (auto& chunk : per_seed)
    for (auto& rec : chunk) out.push_back(std::move(rec));
  // Already ascending by construction; the sort documents and enforces the
  // ordering contract at negligible cost.
  std::sort(out.begin(), out.end(),
            [](const GraphRecord& a, const GraphRecord& b) { return a.graph < b.graph; });
  return out;
}

/// Number of n x n nonnegative integer matrices with every row and column
/// sum equal to k, by dynamic programming over column deficit profiles. No
/// isomorphism machinery involved, so it cross-checks the unlabeled
/// enumeration through sum n!/|Aut|.
inline BigInt count_labeled(int n, int k) {
  if (n < 0) throw std::invalid_argument("count_labeled: negative n");
  if (k == 1) return factorial(n);
  if (k != 2) throw std::invalid_argument("count_labeled: only k in {1,2} supported");
  // Profile (a, b): a columns still need 1, b columns still need 2. Each row
  // places either a 2 into one deficit-2 column or two 1s into distinct
  // columns of deficit >= 1.
  std::map<std::pair<int, int>, BigInt> cur{{{0, n}, 1}};
  for (int row = 0; row < n; ++row) {
    std::map<std::pair<int, int>, BigInt> next;
    for (const auto& [profile, ways] : cur) {
      auto [a, b] = profile;
      if (b >= 1) next[{a, b - 1}] += ways * b;                            // one 2
      if (a >= 2) next[{a - 2, b}] += ways * binomial(a, 2);               // 1+1, both deficit 1
      if (b >= 2) next[{a + 2, b - 2}] += ways * binomial(b, 2);           // 1+1, both deficit 2
      if (a >= 1 && b >= 1) next[{a, b - 1}] += ways * BigInt(a) * b;      // 1+1, one of each
    }
    cur = std::move(next);
  }
  auto it = cur.find({0, 0});
  return it == cur.end() ? BigInt(0) : it->second;
}

/// Complete enumerations for n = 0..max_n, slot n holding the records for n.
inline std::vector<std::vector<GraphRecord>> enumerate_range(
    int max_n, int k, const EnumerationFilter& filter = {}, const EnumerateOptions& options = {}) {
  std::vector<std::vector<GraphRecord>> out;
  out.reserve(max_n + 1);
  for (int n = 0; n <= max_n; ++n) out.push_back(enumerate_unlabeled(n, k, filter, options));
  return out;
}

/// Component-count row for a single n: entry (n, c) = number of records with
/// c weak components.
inline CountTable classify_by_components(const std::vector<GraphRecord>& records) {
  CountTable table;
  table.kind = TableKind::unlabeled;
  if (records.empty()) return table;
  const int n = records.front().graph.n;
  std::map<int, BigInt> row;
  for (const auto& rec : records) {
    if (rec.graph.n != n)
      throw std::invalid_argument("classify_by_components: records on mixed n");
    row[rec.components] += 1;
  }
  for (const auto& [c, count] : row) table.set(n, c, count);
  return table;
}

}  // namespace regdig
