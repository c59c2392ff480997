// Acceptance gate: exercises every promised behaviour end to end and prints
// exactly one PASS/FAIL line per criterion. Exits nonzero when any fails.
// argv[1] must point at the regdig CLI binary (needed for the determinism
// criterion).

#include "oracles.hpp"
#include "regdig/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace regdig;

namespace {

struct Criterion {
  bool pass = false;
  std::string summary;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

Criterion from_check(const CheckResult& check) { return {check.pass, check.detail}; }

template <typename Fn>
Criterion guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

/// Runs the CLI with the given arguments, stderr dropped, and captures
/// stdout. Returns false on spawn failure or nonzero exit.
bool run_cli(const std::string& binary, const std::string& args, std::string& out) {
  std::string command = "\"" + binary + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return false;
  out.clear();
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  return pclose(pipe) == 0;
}

Criterion criterion_enumeration(std::vector<std::vector<GraphRecord>>& by_n) {
  return guarded([&]() -> Criterion {
    auto start = std::chrono::steady_clock::now();
    for (int n = 0; n <= 7; ++n) by_n.push_back(enumerate_unlabeled(n, 2));
    const double small_elapsed = seconds_since(start);

    auto start8 = std::chrono::steady_clock::now();
    by_n.push_back(enumerate_unlabeled(8, 2));
    const double big_elapsed = seconds_since(start8);

    for (int n = 1; n <= 8; ++n) {
      long long want = 0;
      for (long long v : reference::unlabeled_by_components[n - 1]) want += v;
      if (static_cast<long long>(by_n[n].size()) != want)
        return {false, "U_2(" + std::to_string(n) + ") = " + std::to_string(by_n[n].size()) +
                           ", want " + std::to_string(want)};
    }
    CheckResult table = check_unlabeled_table(by_n);
    if (!table.pass) return from_check(table);
    if (small_elapsed >= 300.0)
      return {false, "n <= 7 took " + fmt_seconds(small_elapsed) + ", budget 300s"};
    if (big_elapsed >= 600.0)
      return {false, "n = 8 took " + fmt_seconds(big_elapsed) + ", budget 600s"};

    std::string summary = "counts to n=8 match (n<=7 in " + fmt_seconds(small_elapsed) +
                          ", n=8 in " + fmt_seconds(big_elapsed) + ")";
    if (std::getenv("REGDIG_STRETCH")) {
      auto start9 = std::chrono::steady_clock::now();
      EnumerateOptions roomy;
      roomy.time_budget = std::chrono::seconds(3600);
      auto nine = enumerate_unlabeled(9, 2, {}, roomy);
      if (nine.size() != 122585)
        return {false, "U_2(9) = " + std::to_string(nine.size()) + ", want 122585"};
      summary += ", stretch n=9 in " + fmt_seconds(seconds_since(start9));
    }
    return {true, summary};
  });
}

Criterion criterion_class_identification(const std::vector<std::vector<GraphRecord>>& by_n) {
  return guarded([&]() -> Criterion {
    EnumerationFilter no_multi, simple;
    no_multi.forbid_multiarcs = true;
    simple.forbid_multiarcs = simple.forbid_loops = true;
    for (int n = 0; n <= 4; ++n)
      for (int k = 1; k <= 2; ++k)
        for (const auto& filter : {EnumerationFilter{}, no_multi, simple}) {
          auto records = enumerate_unlabeled(n, k, filter);
          auto classes = oracles::brute_class_set(n, k, filter);
          if (records.size() != classes.size())
            return {false, "class count differs from the brute sweep at n=" + std::to_string(n) +
                               " k=" + std::to_string(k)};
          for (const auto& rec : records)
            if (classes.count(rec.graph.cells) != 1)
              return {false, "non-canonical class at n=" + std::to_string(n)};
        }

    std::mt19937 rng(2026);
    for (int trial = 0; trial < 1000; ++trial) {
      int n = 1 + trial % 6;
      const auto& records = by_n[n];
      const auto& rec = records[rng() % records.size()];
      Permutation p = oracles::identity_permutation(n);
      std::shuffle(p.begin(), p.end(), rng);
      if (!(canonical_form(apply_permutation(rec.graph, p)) == rec.graph))
        return {false, "canonical form not relabeling-invariant at n=" + std::to_string(n)};
    }

    CheckResult lovelock = check_lovelock_roundtrip(by_n);
    if (!lovelock.pass) return from_check(lovelock);
    CheckResult reg = check_reg_roundtrip(by_n);
    if (!reg.pass) return from_check(reg);
    return {true, "brute classes n<=4, 1000 relabelings, Lovelock and Reg round trips"};
  });
}

Criterion criterion_cli_determinism(const std::string& binary) {
  return guarded([&]() -> Criterion {
    std::vector<std::string> args{"enumerate --nodes 6", "enumerate --nodes 6",
                                  "enumerate --nodes 6", "enumerate --nodes 6 --workers 1"};
    unsigned max_workers = std::max(2u, std::thread::hardware_concurrency());
    args.push_back("enumerate --nodes 6 --workers " + std::to_string(max_workers));

    std::string first;
    for (std::size_t i = 0; i < args.size(); ++i) {
      std::string out;
      if (!run_cli(binary, args[i], out))
        return {false, "`" + args[i] + "` failed to run"};
      if (i == 0) {
        first = out;
        if (first.empty()) return {false, "no output from the CLI"};
      } else if (out != first) {
        return {false, "`" + args[i] + "` output differs"};
      }
    }
    return {true, "byte-identical output across 3 runs and worker counts 1/" +
                      std::to_string(max_workers)};
  });
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: " << argv[0] << " <path to regdig binary>\n";
    return 2;
  }
  const std::string binary = argv[1];

  std::vector<std::vector<GraphRecord>> by_n;
  std::vector<Criterion> criteria;
  criteria.push_back(criterion_enumeration(by_n));
  if (!criteria[0].pass && by_n.size() < 9)
    by_n = enumerate_range(7, 2);  // later criteria still get data to chew on
  criteria.push_back(guarded([&] { return from_check(check_labeled_transforms(by_n)); }));
  criteria.push_back(guarded([&] { return from_check(check_labeled_consistency(by_n)); }));
  criteria.push_back(guarded([&] { return from_check(check_rooted_table(by_n)); }));
  criteria.push_back(guarded([&] { return from_check(check_filter_sequences(by_n)); }));
  criteria.push_back(guarded([&] { return from_check(check_symmetries_example(by_n)); }));
  criteria.push_back(guarded([&] { return from_check(check_one_regular(8)); }));
  criteria.push_back(criterion_class_identification(by_n));
  criteria.push_back(criterion_cli_determinism(binary));

  static const char* names[] = {
      "exhaustive enumeration",   "labeled component table", "labeled/unlabeled consistency",
      "rooted count table",       "filtered sequences",      "n=3 worked example",
      "1-regular sanity",         "class identification",    "CLI determinism",
  };
  bool all_pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    all_pass = all_pass && criteria[i].pass;
    std::cout << (criteria[i].pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " ("
              << names[i] << "): " << criteria[i].summary << "\n";
  }
  return all_pass ? 0 : 1;
}
