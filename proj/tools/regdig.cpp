// regdig: enumerate, verify and export 2-regular digraphs and their
// Lovelock terms.
//
// Commands:
//   enumerate --nodes N [--k K] [filters] [--format reg|dot|tsv|terms]
//   tables    --table U|L --max-n N
//   rooted    --max-n N
//   render    --nodes N [filters]
//   verify    --max-n N
//
// Data goes to standard output (or --output); diagnostics go to standard
// error. Exit status 0 means every requested check or export succeeded.

#include "regdig/enumerate.hpp"
#include "regdig/formats.hpp"
#include "regdig/lovelock.hpp"
#include "regdig/verify.hpp"

#include <boost/program_options.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace po = boost::program_options;

namespace {

struct CommonConfig {
  int k = 2;
  regdig::EnumerationFilter filter;
  regdig::EnumerateOptions options;
  bool explicit_budget = false;
  std::optional<std::string> output;
  std::optional<std::string> cache_dir;
};

void add_common(po::options_description& desc) {
  desc.add_options()
      ("k", po::value<int>()->default_value(2), "regularity degree (1 or 2)")
      ("no-multiarcs", po::bool_switch(), "exclude classes with a repeated arc")
      ("no-loops", po::bool_switch(), "exclude classes with a loop")
      ("connected-only", po::bool_switch(), "keep only weakly connected classes")
      ("workers", po::value<int>()->default_value(0), "worker threads (0 = all cores)")
      ("time-budget", po::value<long>(), "enumeration budget in seconds (default 600)")
      ("output,o", po::value<std::string>(), "write data to this file instead of stdout")
      ("cache-dir", po::value<std::string>(), "directory caching Reg files between commands")
      ("help,h", po::bool_switch(), "show this help");
}

CommonConfig read_common(const po::variables_map& vm) {
  CommonConfig cfg;
  cfg.k = vm["k"].as<int>();
  cfg.filter.forbid_multiarcs = vm["no-multiarcs"].as<bool>();
  cfg.filter.forbid_loops = vm["no-loops"].as<bool>();
  cfg.filter.connected_only = vm["connected-only"].as<bool>();
  cfg.options.workers = vm["workers"].as<int>();
  long budget = 600;
  if (const char* env = std::getenv("REGDIG_TIME_BUDGET")) {
    budget = std::atol(env);
    cfg.explicit_budget = true;
  }
  if (vm.count("time-budget")) {
    budget = vm["time-budget"].as<long>();
    cfg.explicit_budget = true;
  }
  if (budget <= 0) throw po::error("time budget must be positive");
  cfg.options.time_budget = std::chrono::seconds(budget);
  if (vm.count("output")) cfg.output = vm["output"].as<std::string>();
  if (vm.count("cache-dir")) cfg.cache_dir = vm["cache-dir"].as<std::string>();
  return cfg;
}

void emit(const CommonConfig& cfg, const std::string& data) {
  if (cfg.output) {
    std::ofstream out(*cfg.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + *cfg.output);
    out << data;
  } else {
    std::cout << data;
  }
}

std::string cache_path(const CommonConfig& cfg, int n) {
  std::string name = "reg-n" + std::to_string(n) + "-k" + std::to_string(cfg.k);
  if (cfg.filter.forbid_multiarcs) name += "-nomulti";
  if (cfg.filter.forbid_loops) name += "-noloop";
  return (std::filesystem::path(*cfg.cache_dir) / (name + ".txt")).string();
}

// Enumerates one n, going through the Reg cache when one is configured.
// connected-only is applied after loading so cached files stay filter-light.
std::vector<regdig::GraphRecord> fetch(const CommonConfig& cfg, int n) {
  std::vector<regdig::GraphRecord> records;
  regdig::EnumerationFilter generate = cfg.filter;
  generate.connected_only = false;
  if (cfg.cache_dir) {
    std::filesystem::create_directories(*cfg.cache_dir);
    const std::string path = cache_path(cfg, n);
    if (std::filesystem::exists(path)) {
      std::ifstream in(path, std::ios::binary);
      std::ostringstream buffer;
      buffer << in.rdbuf();
      records = regdig::read_reg(buffer.str());
      for (const auto& rec : records)
        if (rec.graph.n != n || !regdig::is_k_regular(rec.graph, cfg.k))
          throw std::runtime_error("cache file " + path + " holds a foreign graph");
    } else {
      records = regdig::enumerate_unlabeled(n, cfg.k, generate, cfg.options);
      std::ofstream out(path, std::ios::binary);
      out << regdig::write_reg(records);
    }
  } else {
    records = regdig::enumerate_unlabeled(n, cfg.k, generate, cfg.options);
  }
  if (cfg.filter.connected_only)
    std::erase_if(records, [](const regdig::GraphRecord& rec) { return rec.components != 1; });
  return records;
}

std::vector<std::vector<regdig::GraphRecord>> fetch_range(const CommonConfig& cfg, int max_n) {
  std::vector<std::vector<regdig::GraphRecord>> by_n;
  for (int n = 0; n <= max_n; ++n) by_n.push_back(fetch(cfg, n));
  return by_n;
}

std::string render_listing(const std::vector<regdig::GraphRecord>& records) {
  std::string out;
  for (const auto& rec : records) {
    out += regdig::term_text(regdig::render_term(rec.graph));
    out += '\t';
    out += regdig::labeled_count(rec.cycle_index, rec.graph.n).str();
    out += '\n';
  }
  return out;
}

int cmd_enumerate(const CommonConfig& cfg, int nodes, const std::string& format) {
  const auto started = std::chrono::steady_clock::now();
  auto records = fetch(cfg, nodes);
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  std::cerr << "n=" << nodes << " k=" << cfg.k << ": " << records.size() << " classes in "
            << elapsed.count() << " ms\n";
  std::string data;
  if (format == "reg") {
    data = regdig::write_reg(records);
  } else if (format == "dot") {
    for (std::size_t i = 0; i < records.size(); ++i)
      data += regdig::export_dot(records[i].graph, static_cast<int>(i));
  } else if (format == "tsv") {
    data = regdig::export_table(regdig::classify_by_components(records));
  } else if (format == "terms") {
    data = render_listing(records);
  } else {
    throw po::error("unknown format '" + format + "' (use reg, dot, tsv or terms)");
  }
  emit(cfg, data);
  return 0;
}

int cmd_tables(const CommonConfig& cfg, const std::string& which, int max_n) {
  if (cfg.filter.connected_only)
    throw po::error("--connected-only conflicts with a component-count table");
  auto by_n = fetch_range(cfg, max_n);
  std::string data;
  if (which == "U") {
    regdig::CountTable table = regdig::assemble_unlabeled_table(by_n);
    table.entries.erase({0, 0});  // display rows start at n = 1
    data = regdig::export_table(table);
  } else if (which == "L") {
    std::vector<regdig::BigInt> connected;
    for (int n = 1; n <= max_n; ++n) {
      regdig::BigInt sum = 0;
      for (const auto& rec : by_n[n])
        if (rec.components == 1) sum += regdig::labeled_count(rec.cycle_index, n);
      connected.push_back(sum);
    }
    data = regdig::export_table(regdig::verify_egf(connected, max_n));
  } else {
    throw po::error("unknown table '" + which + "' (use U or L)");
  }
  emit(cfg, data);
  return 0;
}

int cmd_rooted(const CommonConfig& cfg, int max_n) {
  auto by_n = fetch_range(cfg, max_n);
  std::vector<std::vector<regdig::GraphRecord>> slices(by_n.begin() + 1, by_n.end());
  emit(cfg, regdig::export_table(regdig::rooted_table(slices), 1));
  return 0;
}

int cmd_render(const CommonConfig& cfg, int nodes) {
  if (cfg.k != 2) throw po::error("render needs --k 2; only 2-regular classes have tensor terms");
  emit(cfg, render_listing(fetch(cfg, nodes)));
  return 0;
}

int cmd_verify(const CommonConfig& cfg, int max_n) {
  if (cfg.k != 2) throw po::error("verify checks the k=2 corpus (the 1-regular case is part of it)");
  if (cfg.filter.forbid_multiarcs || cfg.filter.forbid_loops || cfg.filter.connected_only)
    throw po::error("verify runs on unfiltered enumerations; drop the filter flags");
  auto by_n = fetch_range(cfg, max_n);
  std::vector<regdig::CheckResult> checks;
  checks.push_back(regdig::check_unlabeled_table(by_n));
  checks.push_back(regdig::check_labeled_transforms(by_n));
  checks.push_back(regdig::check_labeled_consistency(by_n));
  checks.push_back(regdig::check_rooted_table(by_n));
  checks.push_back(regdig::check_filter_sequences(by_n, cfg.options));
  if (max_n >= 3) checks.push_back(regdig::check_symmetries_example(by_n));
  checks.push_back(regdig::check_one_regular(max_n, cfg.options));
  checks.push_back(regdig::check_lovelock_roundtrip(by_n));
  checks.push_back(regdig::check_reg_roundtrip(by_n));
  std::string report;
  bool all_pass = true;
  for (const auto& check : checks) {
    report += (check.pass ? "PASS " : "FAIL ") + check.name + ": " + check.detail + "\n";
    all_pass = all_pass && check.pass;
  }
  emit(cfg, report);
  return all_pass ? 0 : 1;
}

void print_usage(std::ostream& out) {
  out << "usage: regdig <command> [options]\n"
         "\n"
         "commands:\n"
         "  enumerate --nodes N [--format reg|dot|tsv|terms]  list all classes on N nodes\n"
         "  tables    --table U|L [--max-n N]                 component count table\n"
         "  rooted    [--max-n N]                             rooted count table\n"
         "  render    --nodes N                               Lovelock terms with multiplicities\n"
         "  verify    [--max-n N]                             run the cross-validation battery\n"
         "\n"
         "run 'regdig <command> --help' for the command's options\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) {
    print_usage(std::cerr);
    return 2;
  }
  const std::string command = args.front();
  args.erase(args.begin());
  if (command == "--help" || command == "-h" || command == "help") {
    print_usage(std::cout);
    return 0;
  }

  po::options_description desc("options for " + command);
  add_common(desc);
  if (command == "enumerate" || command == "render") {
    desc.add_options()("nodes", po::value<int>()->required(), "number of nodes");
    if (command == "enumerate")
      desc.add_options()("format", po::value<std::string>()->default_value("reg"),
                         "output format: reg, dot, tsv or terms");
  } else if (command == "tables") {
    desc.add_options()
        ("table", po::value<std::string>()->default_value("U"), "which table: U or L")
        ("max-n", po::value<int>()->default_value(6), "largest n");
  } else if (command == "rooted") {
    desc.add_options()("max-n", po::value<int>()->default_value(6), "largest n");
  } else if (command == "verify") {
    desc.add_options()("max-n", po::value<int>()->default_value(7), "largest n");
  } else {
    std::cerr << "unknown command '" << command << "'\n";
    print_usage(std::cerr);
    return 2;
  }

  try {
    po::variables_map vm;
    po::store(po::command_line_parser(args).options(desc).run(), vm);
    if (vm["help"].as<bool>()) {
      std::cout << desc << "\n";
      return 0;
    }
    po::notify(vm);
    CommonConfig cfg = read_common(vm);
    if (cfg.k < 1 || cfg.k > 2) throw po::error("--k must be 1 or 2");

    const int size_limit = 9;
    auto guard_size = [&](int n) {
      if (n < 0) throw po::error("node count must be nonnegative");
      if (n > size_limit && !cfg.explicit_budget)
        throw po::error("n > 9 needs an explicit --time-budget");
    };

    if (command == "enumerate") {
      guard_size(vm["nodes"].as<int>());
      return cmd_enumerate(cfg, vm["nodes"].as<int>(), vm["format"].as<std::string>());
    }
    if (command == "render") {
      guard_size(vm["nodes"].as<int>());
      return cmd_render(cfg, vm["nodes"].as<int>());
    }
    if (command == "tables") {
      guard_size(vm["max-n"].as<int>());
      return cmd_tables(cfg, vm["table"].as<std::string>(), vm["max-n"].as<int>());
    }
    if (command == "rooted") {
      guard_size(vm["max-n"].as<int>());
      return cmd_rooted(cfg, vm["max-n"].as<int>());
    }
    guard_size(vm["max-n"].as<int>());
    return cmd_verify(cfg, vm["max-n"].as<int>());
  } catch (const po::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << desc << "\n";
    return 2;
  } catch (const regdig::budget_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
