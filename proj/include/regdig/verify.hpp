#pragma once

#include "regdig/enumerate.hpp"
#include "regdig/formats.hpp"
#include "regdig/lovelock.hpp"
#include "regdig/polya.hpp"
#include "regdig/transforms.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace regdig {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Ground-truth count data the verification suite compares against. Every
/// value here is either cross-derivable inside this code base (transforms,
/// palindromes, row sums all interlock) or carries its public OEIS identity.
namespace reference {

// U_2(n,c): unlabeled 2-regular digraphs with loops and multiarcs on n nodes
// with c weak components; rows n = 1..9, columns c = 1..n
// (OEIS A306892, row totals A006372).
inline const std::vector<std::vector<long long>> unlabeled_by_components = {
    {1},
    {2, 1},
    {5, 2, 1},
    {14, 8, 2, 1},
    {50, 24, 8, 2, 1},
    {265, 93, 28, 8, 2, 1},
    {1601, 435, 108, 28, 8, 2, 1},
    {11984, 2486, 507, 113, 28, 8, 2, 1},
    {101884, 17211, 2811, 527, 113, 28, 8, 2, 1},
};

// L_2(n,c): labeled counterparts; rows n = 1..7
// (OEIS A307804, row totals A000681).
inline const std::vector<std::vector<long long>> labeled_by_components = {
    {1},
    {2, 1},
    {14, 6, 1},
    {201, 68, 12, 1},
    {4704, 1285, 200, 20, 1},
    {160890, 36214, 4815, 460, 30, 1},
    {7538040, 1422288, 160594, 13755, 910, 42, 1},
};

// U_2^(r)(n): unlabeled 2-regular digraphs with r of the n nodes
// distinguished; rows n = 1..8, columns r = 0..n. Rows 7 and 8 stop at
// r = 6, the higher columns being fixed by the palindrome identity
// U_2^(r)(n) = U_2^(n-r)(n).
inline const std::vector<std::vector<long long>> rooted_counts = {
    {1, 1},
    {3, 3, 3},
    {8, 13, 13, 8},
    {25, 58, 88, 58, 25},
    {85, 310, 588, 588, 310, 85},
    {397, 1909, 4626, 6035, 4626, 1909, 397},
    {2183, 13843, 40417, 66471, 66471, 40417, 13843},
    {15129, 114821, 395324, 782257, 975715, 782257, 395324},
};

// Multiarc-free classes at n = 2..5 (OEIS A005641).
inline const std::vector<long long> no_multiarc_counts = {1, 3, 8, 27};
// Loopless multiarc-free classes at n = 3..6 (OEIS A219889).
inline const std::vector<long long> loopless_simple_counts = {1, 2, 5, 23};
// Loopless classes, multiarcs allowed, at n = 2..6 (OEIS A307180).
inline const std::vector<long long> loopless_counts = {1, 2, 6, 15, 68};

}  // namespace reference

namespace detail {

/// Counts n x n matrices with all row and column sums k by plain exhaustive
/// row-by-row search. Exponential; meant only as an independent witness for
/// small n.
inline BigInt count_labeled_brute(int n, int k) {
  std::vector<int> colsum(n, 0);
  BigInt count = 0;
  auto rec = [&](auto&& self, int row, int col, int remaining) -> void {
    if (col == n) {
      if (remaining != 0) return;
      if (row + 1 == n) {
        ++count;
        return;
      }
      self(self, row + 1, 0, k);
      return;
    }
    int cap = std::min(k - colsum[col], remaining);
    for (int v = 0; v <= cap; ++v) {
      colsum[col] += v;
      self(self, row, col + 1, remaining - v);
      colsum[col] -= v;
    }
  };
  if (n == 0) return 1;
  rec(rec, 0, 0, k);
  return count;
}

inline CheckResult pass(std::string name, std::string detail) {
  return {std::move(name), true, std::move(detail)};
}

inline CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), false, std::move(detail)};
}

template <typename Fn>
CheckResult guarded(const std::string& name, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return fail(name, std::string("exception: ") + e.what());
  }
}

}  // namespace detail

/// Component table entries against the recorded U_2(n,c) rows; the assembly
/// itself re-derives every entry through the multiset transform.
inline CheckResult check_unlabeled_table(const std::vector<std::vector<GraphRecord>>& by_n) {
  const std::string name = "unlabeled component counts U_2(n,c)";
  return detail::guarded(name, [&]() -> CheckResult {
    CountTable table = assemble_unlabeled_table(by_n);
    const int max_n = static_cast<int>(by_n.size()) - 1;
    if (max_n >= 0 && table.row_total(0) != 1)
      return detail::fail(name, "U_2(0) = " + table.row_total(0).str() + ", want 1");
    const int upto =
        std::min(max_n, static_cast<int>(reference::unlabeled_by_components.size()));
    for (int n = 1; n <= upto; ++n)
      for (int c = 1; c <= n; ++c) {
        BigInt want = reference::unlabeled_by_components[n - 1][c - 1];
        BigInt got = table.at(n, c);
        if (got != want)
          return detail::fail(name, "U_2(" + std::to_string(n) + "," + std::to_string(c) +
                                        ") = " + got.str() + ", want " + want.str());
      }
    return detail::pass(name, "rows 1.." + std::to_string(upto) +
                                  " match, multiset transform agrees");
  });
}

/// Labeled table from connected labeled counts via both the composition
/// transform and the generating-function exponentiation.
inline CheckResult check_labeled_transforms(const std::vector<std::vector<GraphRecord>>& by_n) {
  const std::string name = "labeled component counts L_2(n,c)";
  return detail::guarded(name, [&]() -> CheckResult {
    const int max_n = static_cast<int>(by_n.size()) - 1;
    const int upto = std::min(max_n, static_cast<int>(reference::labeled_by_components.size()));
    std::vector<BigInt> connected;
    for (int n = 1; n <= max_n; ++n) {
      BigInt sum = 0;
      for (const auto& rec : by_n[n])
        if (rec.components == 1) sum += labeled_count(rec.cycle_index, n);
      connected.push_back(sum);
    }
    for (int n = 1; n <= upto; ++n)
      for (int c = 1; c <= n; ++c) {
        BigInt want = reference::labeled_by_components[n - 1][c - 1];
        BigInt got = bell_transform(connected, n, c);
        if (got != want)
          return detail::fail(name, "bell L_2(" + std::to_string(n) + "," + std::to_string(c) +
                                        ") = " + got.str() + ", want " + want.str());
      }
    CountTable egf = verify_egf(connected, upto);  // throws if it disagrees with bell
    for (int n = 1; n <= upto; ++n)
      for (int c = 1; c <= n; ++c) {
        BigInt want = reference::labeled_by_components[n - 1][c - 1];
        if (egf.at(n, c) != want)
          return detail::fail(name, "egf L_2(" + std::to_string(n) + "," + std::to_string(c) +
                                        ") = " + egf.at(n, c).str() + ", want " + want.str());
      }
    return detail::pass(name, "rows 1.." + std::to_string(upto) +
                                  " match via composition transform and series exponential");
  });
}

/// Sum of n!/|Aut| over all classes against the labeled total, with the
/// total witnessed three ways: deficit-profile counting for every n, brute
/// matrix search for n <= 5, recorded row sums for n = 6, 7.
inline CheckResult check_labeled_consistency(const std::vector<std::vector<GraphRecord>>& by_n) {
  const std::string name = "labeled/unlabeled consistency sum n!/|Aut| = L_2(n)";
  return detail::guarded(name, [&]() -> CheckResult {
    const int max_n = static_cast<int>(by_n.size()) - 1;
    for (int n = 0; n <= max_n; ++n) {
      BigInt sum = 0;
      for (const auto& rec : by_n[n]) sum += labeled_count(rec.cycle_index, n);
      BigInt profile = count_labeled(n, 2);
      if (sum != profile)
        return detail::fail(name, "n=" + std::to_string(n) + ": sum " + sum.str() +
                                      " vs profile count " + profile.str());
      if (n <= 5) {
        BigInt brute = detail::count_labeled_brute(n, 2);
        if (sum != brute)
          return detail::fail(name, "n=" + std::to_string(n) + ": sum " + sum.str() +
                                        " vs brute search " + brute.str());
      }
      if (n >= 6 && n <= static_cast<int>(reference::labeled_by_components.size())) {
        BigInt ref = 0;
        for (long long v : reference::labeled_by_components[n - 1]) ref += v;
        if (sum != ref)
          return detail::fail(name, "n=" + std::to_string(n) + ": sum " + sum.str() +
                                        " vs recorded total " + ref.str());
      }
    }
    return detail::pass(name, "n <= " + std::to_string(max_n) + " consistent");
  });
}

/// Rooted counts: full rows up to n = 6, columns r <= 6 for n = 7, 8, and
/// the palindrome identity on every computed row.
inline CheckResult check_rooted_table(const std::vector<std::vector<GraphRecord>>& by_n) {
  const std::string name = "rooted counts U_2^(r)(n)";
  return detail::guarded(name, [&]() -> CheckResult {
    const int max_n = static_cast<int>(by_n.size()) - 1;
    const int upto = std::min(max_n, static_cast<int>(reference::rooted_counts.size()));
    std::vector<std::vector<GraphRecord>> slices(by_n.begin() + 1, by_n.begin() + 1 + upto);
    std::vector<RootedPolynomial> rows = rooted_table(slices);
    for (int n = 1; n <= upto; ++n) {
      const auto& coeff = rows[n - 1].coefficients;
      if (static_cast<int>(coeff.size()) != n + 1)
        return detail::fail(name, "row n=" + std::to_string(n) + " has wrong degree");
      for (int r = 0; r <= n; ++r)
        if (coeff[r] != coeff[n - r])
          return detail::fail(name, "row n=" + std::to_string(n) + " not palindromic at r=" +
                                        std::to_string(r));
      const auto& want = reference::rooted_counts[n - 1];
      for (int r = 0; r < static_cast<int>(want.size()) && r <= n; ++r)
        if (coeff[r] != want[r])
          return detail::fail(name, "U_2^(" + std::to_string(r) + ")(" + std::to_string(n) +
                                        ") = " + coeff[r].str() + ", want " +
                                        std::to_string(want[r]));
    }
    return detail::pass(name, "rows 1.." + std::to_string(upto) + " match and are palindromic");
  });
}

/// The three filtered class counts, read semantically off the per-record
/// multiarc/loop fields, with the filtered enumerations cross-checked for
/// the small n where rerunning is free.
inline CheckResult check_filter_sequences(const std::vector<std::vector<GraphRecord>>& by_n,
                                          const EnumerateOptions& options = {}) {
  const std::string name = "filtered class counts";
  return detail::guarded(name, [&]() -> CheckResult {
    const int max_n = static_cast<int>(by_n.size()) - 1;
    auto count_if = [&](int n, auto&& pred) {
      long long count = 0;
      for (const auto& rec : by_n[n])
        if (pred(rec)) ++count;
      return count;
    };
    struct Sequence {
      const char* label;
      const std::vector<long long>& want;
      int first_n;
      bool no_multi, no_loop;
    };
    const Sequence sequences[] = {
        {"multiarc-free", reference::no_multiarc_counts, 2, true, false},
        {"loopless simple", reference::loopless_simple_counts, 3, true, true},
        {"loopless", reference::loopless_counts, 2, false, true},
    };
    for (const auto& seq : sequences) {
      for (int i = 0; i < static_cast<int>(seq.want.size()); ++i) {
        int n = seq.first_n + i;
        if (n > max_n) break;
        long long got = count_if(n, [&](const GraphRecord& rec) {
          return (!seq.no_multi || rec.multiarcs == 0) && (!seq.no_loop || rec.loops == 0);
        });
        if (got != seq.want[i])
          return detail::fail(name, std::string(seq.label) + " n=" + std::to_string(n) + ": " +
                                        std::to_string(got) + ", want " +
                                        std::to_string(seq.want[i]));
        if (n <= 6) {
          EnumerationFilter filter;
          filter.forbid_multiarcs = seq.no_multi;
          filter.forbid_loops = seq.no_loop;
          auto rerun = enumerate_unlabeled(n, 2, filter, options);
          if (static_cast<long long>(rerun.size()) != got)
            return detail::fail(name, std::string(seq.label) + " n=" + std::to_string(n) +
                                          ": filtered enumeration disagrees with record fields");
        }
      }
    }
    return detail::pass(name, "multiarc-free, loopless-simple and loopless sequences match");
  });
}

/// The n=3 worked case: the exact multiset of four cycle indices with
/// multiplicities 1, 3, 2, 2 and the weighted labeled sum 21.
inline CheckResult check_symmetries_example(const std::vector<std::vector<GraphRecord>>& by_n) {
  const std::string name = "n=3 cycle index multiset";
  return detail::guarded(name, [&]() -> CheckResult {
    if (static_cast<int>(by_n.size()) <= 3) return detail::fail(name, "needs data up to n=3");
    std::map<std::string, int> got;
    BigInt weighted = 0;
    for (const auto& rec : by_n[3]) {
      got[cycle_index_to_text(rec.cycle_index)] += 1;
      weighted += labeled_count(rec.cycle_index, 3);
    }
    const std::map<std::string, int> want = {
        {"(t1^3)/1", 1},
        {"(t1^3+t1t2)/2", 3},
        {"(t1^3+2t3)/3", 2},
        {"(t1^3+3t1t2+2t3)/6", 2},
    };
    if (got != want) {
      std::string detail = "multiset differs:";
      for (const auto& [text, count] : got)
        detail += " " + text + "x" + std::to_string(count);
      return detail::fail(name, detail);
    }
    if (weighted != 21)
      return detail::fail(name, "weighted sum " + weighted.str() + ", want 21");
    return detail::pass(name, "four indices with multiplicities 1,3,2,2; weighted sum 21");
  });
}

/// 1-regular digraphs against the classical sequences, each recomputed from
/// its defining recurrence: partition numbers and the partition triangle for
/// the unlabeled side, Stirling and Bell numbers for the transforms fed with
/// the constant connected sequence 1, 1, 1, ...
inline CheckResult check_one_regular(int max_n, const EnumerateOptions& options = {}) {
  const std::string name = "1-regular sanity";
  return detail::guarded(name, [&]() -> CheckResult {
    const int upto = std::min(max_n, 8);
    std::vector<BigInt> p = partition_numbers(upto);
    for (int n = 0; n <= upto; ++n) {
      auto records = enumerate_unlabeled(n, 1, {}, options);
      if (BigInt(records.size()) != p[n])
        return detail::fail(name, "U_1(" + std::to_string(n) + ") = " +
                                      std::to_string(records.size()) + ", want " + p[n].str());
      std::map<int, long long> by_c;
      for (const auto& rec : records) by_c[rec.components] += 1;
      if (n >= 1 && by_c[1] != 1)
        return detail::fail(name, "U_1(" + std::to_string(n) + ",1) = " +
                                      std::to_string(by_c[1]) + ", want 1");
      for (int c = 1; c <= n; ++c)
        if (BigInt(by_c[c]) != partitions_with_parts(n, c))
          return detail::fail(name, "U_1(" + std::to_string(n) + "," + std::to_string(c) +
                                        ") = " + std::to_string(by_c[c]) + ", want " +
                                        partitions_with_parts(n, c).str());
    }
    std::vector<BigInt> ones(upto, 1);
    for (int n = 1; n <= upto; ++n) {
      BigInt row_sum = 0;
      for (int c = 1; c <= n; ++c) {
        if (multiset_transform(ones, n, c) != partitions_with_parts(n, c))
          return detail::fail(name, "multiset transform of ones misses the partition triangle at (" +
                                        std::to_string(n) + "," + std::to_string(c) + ")");
        BigInt bell = bell_transform(ones, n, c);
        if (bell != stirling2(n, c))
          return detail::fail(name, "bell transform of ones misses Stirling at (" +
                                        std::to_string(n) + "," + std::to_string(c) + ")");
        row_sum += bell;
      }
      if (row_sum != bell_number(n))
        return detail::fail(name, "bell transform row sum at n=" + std::to_string(n) +
                                      " misses the Bell number");
    }
    CountTable egf = verify_egf(ones, upto);
    for (int n = 1; n <= upto; ++n)
      if (egf.row_total(n) != bell_number(n))
        return detail::fail(name, "series exponential row sum at n=" + std::to_string(n) +
                                      " misses the Bell number");
    return detail::pass(name, "partition, Stirling and Bell identities hold to n=" +
                                  std::to_string(upto));
  });
}

/// Bipartite split and coalesce invert each other on every class; rendered
/// terms use each letter once up, once down, with self-contractions matching
/// loops.
inline CheckResult check_lovelock_roundtrip(const std::vector<std::vector<GraphRecord>>& by_n) {
  const std::string name = "Lovelock bijection round trip";
  return detail::guarded(name, [&]() -> CheckResult {
    const int upto = std::min(static_cast<int>(by_n.size()) - 1, 6);
    for (int n = 0; n <= upto; ++n)
      for (const auto& rec : by_n[n]) {
        if (!(from_bipartite(to_bipartite(rec.graph)) == rec.graph))
          return detail::fail(name, "round trip broke a class at n=" + std::to_string(n));
        TensorTerm term = render_term(rec.graph);
        std::map<char, int> upper, lower;
        int self_contractions = 0;
        for (const auto& factor : term.factors) {
          for (char c : factor.upper) upper[c] += 1;
          for (char c : factor.lower) lower[c] += 1;
          for (char c : factor.upper)
            if (c == factor.lower[0] || c == factor.lower[1]) ++self_contractions;
        }
        if (static_cast<int>(upper.size()) != 2 * n || upper != lower)
          return detail::fail(name, "index hygiene broke at n=" + std::to_string(n));
        for (const auto& [letter, count] : upper)
          if (count != 1 || lower[letter] != 1)
            return detail::fail(name, "letter reused at n=" + std::to_string(n));
        if (self_contractions != rec.loops)
          return detail::fail(name, "self-contractions disagree with loops at n=" +
                                        std::to_string(n));
      }
    return detail::pass(name, "all classes up to n=" + std::to_string(upto) + " round trip");
  });
}

/// Serialization is its own inverse, byte for byte.
inline CheckResult check_reg_roundtrip(const std::vector<std::vector<GraphRecord>>& by_n) {
  const std::string name = "Reg write/read round trip";
  return detail::guarded(name, [&]() -> CheckResult {
    const int upto = std::min(static_cast<int>(by_n.size()) - 1, 6);
    for (int n = 0; n <= upto; ++n) {
      std::string text = write_reg(by_n[n]);
      std::vector<GraphRecord> parsed = read_reg(text);
      if (!(parsed == by_n[n]))
        return detail::fail(name, "records changed across a round trip at n=" + std::to_string(n));
      if (write_reg(parsed) != text)
        return detail::fail(name, "bytes changed across a round trip at n=" + std::to_string(n));
    }
    return detail::pass(name, "byte-exact up to n=" + std::to_string(upto));
  });
}

/// The full cross-validation battery over freshly enumerated data.
inline std::vector<CheckResult> run_verification(int max_n, const EnumerateOptions& options = {}) {
  auto by_n = enumerate_range(max_n, 2, {}, options);
  std::vector<CheckResult> checks;
  checks.push_back(check_unlabeled_table(by_n));
  checks.push_back(check_labeled_transforms(by_n));
  checks.push_back(check_labeled_consistency(by_n));
  checks.push_back(check_rooted_table(by_n));
  checks.push_back(check_filter_sequences(by_n, options));
  if (max_n >= 3) checks.push_back(check_symmetries_example(by_n));
  checks.push_back(check_one_regular(max_n, options));
  checks.push_back(check_lovelock_roundtrip(by_n));
  checks.push_back(check_reg_roundtrip(by_n));
  return checks;
}

}  // namespace regdig
