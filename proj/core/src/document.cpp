#include "quintic/document.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "quintic/error.hpp"

namespace quintic {

namespace {

struct Line {
  std::size_t number;
  std::string text;  // comment stripped
};

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

// Leading keyword and the column where the rest begins.
std::pair<std::string, std::size_t> keyword(const std::string& s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  const std::size_t start = i;
  while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return {s.substr(start, i - start), i};
}

int parse_int(const std::string& s, std::size_t& pos, const Line& line) {
  const std::size_t start = pos;
  if (pos < s.size() && s[pos] == '-') ++pos;
  const std::size_t digits = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == digits) throw ParseError("expected an integer", line.number, start + 1);
  try {
    return std::stoi(s.substr(start, pos - start));
  } catch (const std::out_of_range&) {
    throw ParseError("integer out of range", line.number, start + 1);
  }
}

std::vector<int> parse_twist_list(const Line& line, std::size_t pos) {
  const std::string& s = line.text;
  std::vector<int> out;
  for (;;) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos >= s.size()) break;
    const std::size_t item = pos;
    if (s[pos] != 'O') throw ParseError("expected O(<int>) in twist list", line.number, pos + 1);
    ++pos;
    int twist = 0;
    if (pos < s.size() && s[pos] == '(') {
      ++pos;
      twist = parse_int(s, pos, line);
      if (pos >= s.size() || s[pos] != ')') throw ParseError("expected ')'", line.number, pos + 1);
      ++pos;
    }
    int count = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      if (pos < s.size() && s[pos] == '-') throw ParseError("multiplicity must be a natural number", line.number, pos + 1);
      count = parse_int(s, pos, line);
      if (count < 1) throw ParseError("multiplicity must be positive", line.number, item + 1);
    }
    if (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])))
      throw ParseError("unexpected '" + std::string(1, s[pos]) + "' in twist list", line.number, pos + 1);
    for (int k = 0; k < count; ++k) out.push_back(twist);
  }
  if (out.empty()) throw ParseError("empty twist list", line.number, s.size() + 1);
  return out;
}

// Cells of "[ a , b , c ]" with their starting columns.
std::vector<std::pair<std::string, std::size_t>> split_row(const Line& line) {
  const std::string& s = line.text;
  const std::size_t open = s.find_first_not_of(" \t\r");
  if (open == std::string::npos || s[open] != '[') throw ParseError("expected '[' to start a matrix row", line.number, (open == std::string::npos ? 0 : open) + 1);
  const std::size_t close = s.find_last_not_of(" \t\r");
  if (s[close] != ']' || close == open) throw ParseError("expected ']' to end the matrix row", line.number, close + 2);
  std::vector<std::pair<std::string, std::size_t>> cells;
  int depth = 0;
  std::size_t start = open + 1;
  for (std::size_t i = open + 1; i <= close; ++i) {
    const char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == ',' && depth == 0) || i == close) {
      std::string cell = s.substr(start, i - start);
      if (blank(cell)) throw ParseError("empty matrix entry", line.number, start + 1);
      cells.emplace_back(std::move(cell), start);
      start = i + 1;
    }
  }
  return cells;
}

}  // namespace

MatrixDocument parse_document(std::string_view text, Field f) {
  std::vector<Line> lines;
  {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t n = 0;
    while (std::getline(in, raw)) {
      ++n;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (!blank(raw)) lines.push_back({n, raw});
    }
  }
  const std::size_t last_line = std::count(text.begin(), text.end(), '\n') + 1;
  std::size_t idx = 0;
  MatrixDocument doc;
  auto expect = [&](const std::string& word) -> const Line& {
    if (idx >= lines.size()) throw ParseError("expected '" + word + "' line", last_line, 1);
    const Line& l = lines[idx];
    if (keyword(l.text).first != word)
      throw ParseError("expected '" + word + "' line", l.number, l.text.find_first_not_of(" \t") + 1);
    ++idx;
    return l;
  };
  if (idx < lines.size() && keyword(lines[idx].text).first == "space") {
    const Line& l = lines[idx++];
    const auto [word, pos] = keyword(l.text);
    try {
      doc.space = ModuliSpaceId::parse(l.text.substr(pos));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), l.number, pos + 2);
    }
  }
  const Line& src_line = expect("source");
  const std::vector<int> source = parse_twist_list(src_line, keyword(src_line.text).second);
  const Line& tgt_line = expect("target");
  const std::vector<int> target = parse_twist_list(tgt_line, keyword(tgt_line.text).second);
  const Line& matrix_line = expect("matrix");
  if (!blank(matrix_line.text.substr(keyword(matrix_line.text).second)))
    throw ParseError("unexpected text after 'matrix'", matrix_line.number, keyword(matrix_line.text).second + 1);

  FormGrid entries;
  for (; idx < lines.size(); ++idx) {
    const Line& l = lines[idx];
    if (entries.size() == target.size())
      throw ParseError("more matrix rows than target summands (" + std::to_string(target.size()) + ")", l.number, 1);
    const auto cells = split_row(l);
    if (cells.size() != source.size())
      throw ParseError("row has " + std::to_string(cells.size()) + " entries but the source has " +
                           std::to_string(source.size()) + " summands",
                       l.number, 1);
    std::vector<Form> row;
    const std::size_t r = entries.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const int expected = target[r] - source[c];
      const auto& [cell, col] = cells[c];
      Form form;
      try {
        form = parse_form(cell, f, expected);
      } catch (const ParseError& e) {
        std::string what = e.what();
        what = what.substr(0, what.rfind(" at "));
        throw ParseError(what, l.number, col + e.column());
      }
      if (!form.is_zero() && form.degree() != expected) {
        const std::size_t first = cell.find_first_not_of(" \t");
        throw ParseError("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") has degree " +
                             std::to_string(form.degree()) + " but O(" + std::to_string(source[c]) + ") -> O(" +
                             std::to_string(target[r]) + ") needs degree " + std::to_string(expected),
                         l.number, col + first + 1);
      }
      row.push_back(form);
    }
    entries.push_back(std::move(row));
  }
  if (entries.size() != target.size())
    throw ParseError("expected " + std::to_string(target.size()) + " matrix rows, found " + std::to_string(entries.size()),
                     last_line, 1);
  doc.morphism = GradedMorphism::arrange(f, source, target, entries);
  return doc;
}

std::string format_twists(const TwistSum& t) {
  std::vector<int> asc(t.twists().rbegin(), t.twists().rend());
  std::string out;
  for (std::size_t i = 0; i < asc.size();) {
    std::size_t j = i;
    while (j < asc.size() && asc[j] == asc[i]) ++j;
    if (!out.empty()) out += " ";
    out += asc[i] == 0 ? "O" : "O(" + std::to_string(asc[i]) + ")";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

namespace {

// Stored indices in ascending twist order, stable within each group.
std::vector<std::size_t> ascending_positions(const TwistSum& t) {
  std::vector<std::size_t> order(t.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return t[a] < t[b]; });
  return order;
}

}  // namespace

std::string print_document(const MatrixDocument& doc) {
  const GradedMorphism& m = doc.morphism;
  std::string out;
  if (doc.space) out += "space " + doc.space->to_string() + "\n";
  out += "source " + format_twists(m.source()) + "\n";
  out += "target " + format_twists(m.target()) + "\n";
  out += "matrix\n";
  const auto rows = ascending_positions(m.target());
  const auto cols = ascending_positions(m.source());
  for (std::size_t i : rows) {
    out += "[ ";
    for (std::size_t k = 0; k < cols.size(); ++k) out += (k ? " , " : "") + m.at(i, cols[k]).to_string();
    out += " ]\n";
  }
  return out;
}

}  // namespace quintic
