#pragma once

#include "regdig/digraph.hpp"
#include "regdig/enumerate.hpp"
#include "regdig/lovelock.hpp"
#include "regdig/polya.hpp"
#include "regdig/transforms.hpp"

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace regdig {

/// Renders a cycle index per the Reg grammar: `(` monomials `+`-joined `)/`
/// denominator; monomial = coefficient (omitted when 1) then `t<i>` factors
/// ascending in i with `^<e>` when e >= 2; monomials in descending
/// lexicographic exponent order. The n=0 monomial renders as its bare
/// coefficient.
inline std::string cycle_index_to_text(const CycleIndex& z) {
  if (z.terms.empty()) throw std::invalid_argument("cycle_index_to_text: empty cycle index");
  std::string out = "(";
  bool first = true;
  for (const auto& [expo, coeff] : z.terms) {
    if (!first) out += '+';
    first = false;
    std::string vars;
    for (int i = 1; i <= static_cast<int>(expo.size()); ++i) {
      if (expo[i - 1] == 0) continue;
      vars += 't';
      vars += std::to_string(i);
      if (expo[i - 1] >= 2) {
        vars += '^';
        vars += std::to_string(expo[i - 1]);
      }
    }
    if (coeff != 1 || vars.empty()) out += coeff.str();
    out += vars;
  }
  out += ")/";
  out += std::to_string(z.denominator);
  return out;
}

namespace detail {

struct TextCursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  bool accept(char c) {
    if (done() || text[pos] != c) return false;
    ++pos;
    return true;
  }
  void expect(char c, const char* context) {
    if (!accept(c))
      throw std::invalid_argument(std::string(context) + ": expected '" + c + "' at offset " +
                                  std::to_string(pos));
  }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_digit() const { return !done() && std::isdigit(static_cast<unsigned char>(text[pos])); }
  std::uint64_t number(const char* context) {
    if (!at_digit())
      throw std::invalid_argument(std::string(context) + ": expected a number at offset " +
                                  std::to_string(pos));
    std::uint64_t value = 0;
    while (at_digit()) {
      value = value * 10 + (text[pos] - '0');
      ++pos;
    }
    return value;
  }
};

}  // namespace detail

/// Inverse of cycle_index_to_text; n is recovered as the common cycle-type
/// weight of the monomials.
inline CycleIndex parse_cycle_index(std::string_view text) {
  detail::TextCursor cur{text};
  cur.expect('(', "cycle index");
  std::vector<std::pair<std::vector<std::pair<int, int>>, BigInt>> monomials;  // sparse (i, e_i)
  do {
    BigInt coeff = 1;
    const bool explicit_coeff = cur.at_digit();
    if (explicit_coeff) coeff = BigInt(cur.number("cycle index"));
    std::vector<std::pair<int, int>> factors;
    while (cur.accept('t')) {
      int i = static_cast<int>(cur.number("cycle index"));
      int e = 1;
      if (cur.accept('^')) e = static_cast<int>(cur.number("cycle index"));
      if (i < 1 || e < 1) throw std::invalid_argument("cycle index: zero subscript or exponent");
      factors.emplace_back(i, e);
    }
    if (factors.empty() && !explicit_coeff)
      throw std::invalid_argument("cycle index: empty monomial");
    monomials.emplace_back(std::move(factors), std::move(coeff));
  } while (cur.accept('+'));
  cur.expect(')', "cycle index");
  cur.expect('/', "cycle index");
  std::uint64_t denom = cur.number("cycle index");
  if (!cur.done()) throw std::invalid_argument("cycle index: trailing characters");

  int n = -1;
  CycleIndex z;
  z.denominator = denom;
  for (auto& [factors, coeff] : monomials) {
    int weight = 0;
    for (auto [i, e] : factors) weight += i * e;
    if (n < 0) n = weight;
    if (weight != n) throw std::invalid_argument("cycle index: monomials of mixed weight");
    std::vector<int> expo(n, 0);
    for (auto [i, e] : factors) {
      if (i > n || expo[i - 1] != 0)
        throw std::invalid_argument("cycle index: malformed monomial");
      expo[i - 1] = e;
    }
    z.terms[std::move(expo)] += coeff;
  }
  return z;
}

/// Factors joined by single spaces; each factor `R[` + upper slots as `^x` +
/// lower slots as `_x` + `]`.
inline std::string term_text(const TensorTerm& term) {
  std::string out;
  for (std::size_t f = 0; f < term.factors.size(); ++f) {
    if (f > 0) out += ' ';
    out += "R[";
    for (char c : term.factors[f].upper) {
      out += '^';
      out += c;
    }
    for (char c : term.factors[f].lower) {
      out += '_';
      out += c;
    }
    out += ']';
  }
  return out;
}

/// Two lines per record: the sorted arc list as concatenated `[t,h]` pairs,
/// then `V<multiarcs> <loops> <cycle index>`. Lines end in a single line
/// feed, the last one included.
inline std::string write_reg(const std::vector<GraphRecord>& records) {
  for (const auto& rec : records)
    if (rec.graph.n != records.front().graph.n)
      throw std::invalid_argument("write_reg: records on mixed n");
  std::string out;
  for (const auto& rec : records) {
    for (auto [tail, head] : to_arc_list(rec.graph)) {
      out += '[';
      out += std::to_string(tail);
      out += ',';
      out += std::to_string(head);
      out += ']';
    }
    out += '\n';
    out += 'V';
    out += std::to_string(rec.multiarcs);
    out += ' ';
    out += std::to_string(rec.loops);
    out += ' ';
    out += cycle_index_to_text(rec.cycle_index);
    out += '\n';
  }
  return out;
}

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

[[noreturn]] inline void parse_fail(std::size_t line_no, const std::string& message) {
  throw std::runtime_error("line " + std::to_string(line_no) + ": " + message);
}

}  // namespace detail

/// Parses write_reg output (whitespace between bracket pairs tolerated),
/// reconstructs each graph from its arc list with n = 1 + max node index,
/// recomputes the derived fields, and cross-checks them against the V line.
/// The representative is kept exactly as read, canonical or not.
inline std::vector<GraphRecord> read_reg(std::string_view text) {
  auto lines = detail::split_lines(text);
  if (lines.size() % 2 != 0)
    detail::parse_fail(lines.size(), "dangling arc line without a V line");
  std::vector<GraphRecord> records;
  for (std::size_t i = 0; i < lines.size(); i += 2) {
    const std::size_t arc_line_no = i + 1, v_line_no = i + 2;

    detail::TextCursor cur{lines[i]};
    ArcList arcs;
    int max_node = -1;
    cur.skip_ws();
    while (!cur.done()) {
      try {
        cur.expect('[', "arc list");
        cur.skip_ws();
        int tail = static_cast<int>(cur.number("arc list"));
        cur.skip_ws();
        cur.expect(',', "arc list");
        cur.skip_ws();
        int head = static_cast<int>(cur.number("arc list"));
        cur.skip_ws();
        cur.expect(']', "arc list");
        arcs.emplace_back(tail, head);
        max_node = std::max({max_node, tail, head});
      } catch (const std::invalid_argument& e) {
        detail::parse_fail(arc_line_no, e.what());
      }
      cur.skip_ws();
    }

    GraphRecord rec = make_record(from_arc_list(arcs, max_node + 1));

    detail::TextCursor vcur{lines[i + 1]};
    int multiarcs = 0, loops = 0;
    CycleIndex parsed_z;
    try {
      vcur.expect('V', "V line");
      multiarcs = static_cast<int>(vcur.number("V line"));
      vcur.expect(' ', "V line");
      vcur.skip_ws();
      loops = static_cast<int>(vcur.number("V line"));
      vcur.expect(' ', "V line");
      vcur.skip_ws();
      parsed_z = parse_cycle_index(vcur.text.substr(vcur.pos));
    } catch (const std::invalid_argument& e) {
      detail::parse_fail(v_line_no, e.what());
    }
    if (multiarcs != rec.multiarcs)
      detail::parse_fail(v_line_no, "multiarc count disagrees with the graph");
    if (loops != rec.loops)
      detail::parse_fail(v_line_no, "loop count disagrees with the graph");
    if (!(parsed_z == rec.cycle_index))
      detail::parse_fail(v_line_no, "cycle index disagrees with the graph");

    records.push_back(std::move(rec));
  }
  return records;
}

/// DOT rendering: every node declared, one edge statement per arc (multiarcs
/// repeated, loops included), nodes and arcs in ascending order.
inline std::string export_dot(const Digraph& g, int index = 0) {
  std::string out = "digraph g" + std::to_string(index) + " {\n";
  for (int v = 0; v < g.n; ++v) out += "  " + std::to_string(v) + ";\n";
  for (auto [tail, head] : to_arc_list(g))
    out += "  " + std::to_string(tail) + " -> " + std::to_string(head) + ";\n";
  out += "}\n";
  return out;
}

/// TSV count table: header `n`, component counts 1..max, `total`; one row
/// per populated n, cells blank where no class exists, row sum last.
inline std::string export_table(const CountTable& table) {
  int max_c = 0;
  for (const auto& [key, value] : table.entries) max_c = std::max(max_c, key.second);
  std::string out = "n";
  for (int c = 1; c <= max_c; ++c) out += '\t' + std::to_string(c);
  out += "\ttotal\n";
  for (auto it = table.entries.begin(); it != table.entries.end();) {
    const int n = it->first.first;
    out += std::to_string(n);
    for (int c = 1; c <= max_c; ++c) {
      out += '\t';
      BigInt v = table.at(n, c);
      if (v != 0) out += v.str();
    }
    out += '\t' + table.row_total(n).str() + '\n';
    while (it != table.entries.end() && it->first.first == n) ++it;
  }
  return out;
}

/// TSV rooted table: header `n`, root counts 0..max; row i is for
/// n = first_n + i; no totals column (the r=0 column already is the total).
inline std::string export_table(const std::vector<RootedPolynomial>& rows, int first_n) {
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.coefficients.size());
  std::string out = "n";
  for (std::size_t r = 0; r < width; ++r) out += '\t' + std::to_string(r);
  out += '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += std::to_string(first_n + static_cast<int>(i));
    for (std::size_t r = 0; r < width; ++r) {
      out += '\t';
      if (r < rows[i].coefficients.size()) out += rows[i].coefficients[r].str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace regdig
