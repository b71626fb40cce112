#include "inctab/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "inctab/errors.hpp"

namespace inctab {

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

std::optional<int> to_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Entries of a text grid with the line/column each came from.
struct Grid {
  Shape shape;
  int q = 0;
  std::vector<int> entries;
  std::vector<std::pair<int, int>> where;
  bool bullets = false;
};

Grid parse_text_grid(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    const auto line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++number;
    const auto tokens = split(line);
    if (!tokens.empty() && tokens.front().text.front() != '#') lines.emplace_back(number, line);
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  if (lines.empty()) throw ParseError("empty input: expected a 'q=<int> shape=<shape>' header", 1, 1);

  Grid grid;
  std::optional<int> q;
  std::optional<Shape> shape;
  const auto [header_line, header] = lines.front();
  for (const Token& tok : split(header)) {
    if (tok.text.starts_with("q=")) {
      q = to_int(tok.text.substr(2));
      if (!q || *q < 0) throw ParseError("bad ceiling '" + std::string(tok.text) + "'", header_line, tok.column);
    } else if (tok.text.starts_with("shape=")) {
      try {
        shape = parse_shape(tok.text.substr(6));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), header_line, tok.column);
      }
    } else {
      throw ParseError("unexpected header token '" + std::string(tok.text) + "'", header_line, tok.column);
    }
  }
  if (!q) throw ParseError("header is missing q=<int>", header_line, 1);
  if (!shape) throw ParseError("header is missing shape=<shape>", header_line, 1);
  grid.q = *q;
  grid.shape = *shape;

  const int rows = grid.shape.rows();
  if (static_cast<int>(lines.size()) - 1 != rows) {
    const int at = lines.size() > static_cast<std::size_t>(rows) + 1 ? lines[static_cast<std::size_t>(rows) + 1].first
                                                                       : lines.back().first + 1;
    throw ParseError("shape " + to_string(grid.shape) + " needs " + std::to_string(rows) + " rows, found " +
                         std::to_string(lines.size() - 1),
                     at, 1);
  }
  for (int r = 1; r <= rows; ++r) {
    const auto [line_no, line] = lines[static_cast<std::size_t>(r)];
    const auto tokens = split(line);
    const int width = grid.shape.last_col(r);
    if (static_cast<int>(tokens.size()) != width)
      throw ParseError("row " + std::to_string(r) + " needs " + std::to_string(width) + " entries, found " +
                           std::to_string(tokens.size()),
                       line_no, tokens.empty() ? 1 : tokens.back().column);
    for (int c = 1; c <= width; ++c) {
      const Token& tok = tokens[static_cast<std::size_t>(c - 1)];
      const bool inner = c < grid.shape.first_col(r);
      if (inner) {
        if (tok.text != ".")
          throw ParseError("expected '.' for inner box (" + std::to_string(r) + "," + std::to_string(c) + ")",
                           line_no, tok.column);
        continue;
      }
      if (tok.text == ".") throw ParseError("'.' is only allowed in inner boxes", line_no, tok.column);
      int value = BulletFilling::kBullet;
      if (tok.text == "*") {
        grid.bullets = true;
      } else {
        const auto v = to_int(tok.text);
        if (!v || *v < 1) throw ParseError("expected a positive integer, '*' or '.'", line_no, tok.column);
        value = *v;
      }
      grid.entries.push_back(value);
      grid.where.emplace_back(line_no, tok.column);
    }
  }
  return grid;
}

Partition partition_from_json(const json& j, const char* field) {
  if (!j.is_array()) throw ParseError(std::string("JSON field '") + field + "' must be an array");
  try {
    return Partition(j.get<std::vector<int>>());
  } catch (const ValidationError& e) {
    throw ParseError(std::string("JSON field '") + field + "': " + e.what());
  } catch (const json::exception& e) {
    throw ParseError(std::string("JSON field '") + field + "': " + e.what());
  }
}

Grid parse_json_grid(const json& j) {
  if (!j.is_object()) throw ParseError("JSON tableau must be an object");
  for (const char* field : {"q", "outer", "rows"})
    if (!j.contains(field)) throw ParseError(std::string("JSON tableau is missing '") + field + "'");
  Grid grid;
  if (!j["q"].is_number_integer() || j["q"].get<int>() < 0) throw ParseError("JSON field 'q' must be a nonnegative integer");
  grid.q = j["q"].get<int>();
  const Partition outer = partition_from_json(j["outer"], "outer");
  const Partition inner = j.contains("inner") ? partition_from_json(j["inner"], "inner") : Partition();
  try {
    grid.shape = Shape(outer, inner);
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
  const json& rows = j["rows"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != grid.shape.rows())
    throw ParseError("JSON field 'rows' must hold " + std::to_string(grid.shape.rows()) + " rows");
  for (int r = 1; r <= grid.shape.rows(); ++r) {
    const json& row = rows[static_cast<std::size_t>(r - 1)];
    const int width = grid.shape.last_col(r) - grid.shape.first_col(r) + 1;
    if (!row.is_array() || static_cast<int>(row.size()) != width)
      throw ParseError("JSON row " + std::to_string(r) + " must hold " + std::to_string(width) + " entries");
    for (int k = 0; k < width; ++k) {
      const json& cell = row[static_cast<std::size_t>(k)];
      if (cell.is_null()) {
        grid.bullets = true;
        grid.entries.push_back(BulletFilling::kBullet);
      } else if (cell.is_number_integer() && cell.get<int>() >= 1) {
        grid.entries.push_back(cell.get<int>());
      } else {
        throw ParseError("JSON row " + std::to_string(r) + " entry " + std::to_string(k + 1) +
                         " must be a positive integer or null");
      }
      grid.where.emplace_back(0, 0);
    }
  }
  return grid;
}

Grid parse_grid(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return parse_json_grid(j);
  }
  return parse_text_grid(text);
}

std::vector<std::vector<int>> grid_rows(const Grid& g) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(g.shape.rows()));
  for (int r = 1; r <= g.shape.rows(); ++r)
    for (int c = g.shape.first_col(r); c <= g.shape.last_col(r); ++c)
      rows[static_cast<std::size_t>(r - 1)].push_back(g.entries[static_cast<std::size_t>(g.shape.index_of({r, c}))]);
  return rows;
}

[[noreturn]] void invalid(const Grid& g, int index, const std::string& what) {
  const auto [line, column] = g.where[static_cast<std::size_t>(index)];
  if (line > 0)
    throw ValidationError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
  throw ValidationError(what);
}

std::string format_grid(const Shape& shape, int q, std::span<const int> entries, bool bullets_allowed) {
  std::ostringstream out;
  out << "q=" << q << " shape=" << to_string(shape) << "\n";
  for (int r = 1; r <= shape.rows(); ++r) {
    for (int c = 1; c <= shape.last_col(r); ++c) {
      if (c > 1) out << ' ';
      if (c < shape.first_col(r)) {
        out << '.';
        continue;
      }
      const int v = entries[static_cast<std::size_t>(shape.index_of({r, c}))];
      if (bullets_allowed && v == BulletFilling::kBullet)
        out << '*';
      else
        out << v;
    }
    out << "\n";
  }
  return out.str();
}

json shape_fields(const Shape& shape, int q, std::span<const int> entries) {
  json j;
  j["q"] = q;
  j["outer"] = std::vector<int>(shape.outer().parts().begin(), shape.outer().parts().end());
  j["inner"] = std::vector<int>(shape.inner().parts().begin(), shape.inner().parts().end());
  json rows = json::array();
  for (int r = 1; r <= shape.rows(); ++r) {
    json row = json::array();
    for (int c = shape.first_col(r); c <= shape.last_col(r); ++c) {
      const int v = entries[static_cast<std::size_t>(shape.index_of({r, c}))];
      if (v == BulletFilling::kBullet)
        row.push_back(nullptr);
      else
        row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace

ParsedFilling parse_filling(std::string_view text) {
  Grid g = parse_grid(text);
  for (std::size_t k = 0; k < g.entries.size(); ++k)
    if (g.entries[k] > g.q + 1)
      invalid(g, static_cast<int>(k), "entry " + std::to_string(g.entries[k]) + " exceeds q+1 = " + std::to_string(g.q + 1));
  const bool bullets = g.bullets;
  return {BulletFilling(g.shape, g.q, grid_rows(g)), bullets};
}

IncreasingTableau parse_tableau(std::string_view text) {
  Grid g = parse_grid(text);
  const Shape& s = g.shape;
  for (int r = 1; r <= s.rows(); ++r) {
    for (int c = s.first_col(r); c <= s.last_col(r); ++c) {
      const int k = s.index_of({r, c});
      const int v = g.entries[static_cast<std::size_t>(k)];
      if (v == BulletFilling::kBullet) invalid(g, k, "bullets are not allowed in an increasing tableau");
      if (v > g.q) invalid(g, k, "entry " + std::to_string(v) + " exceeds q = " + std::to_string(g.q));
      if (s.contains({r, c - 1}) && g.entries[static_cast<std::size_t>(s.index_of({r, c - 1}))] >= v)
        invalid(g, k, "row " + std::to_string(r) + " not strictly increasing");
      if (s.contains({r - 1, c}) && g.entries[static_cast<std::size_t>(s.index_of({r - 1, c}))] >= v)
        invalid(g, k, "column " + std::to_string(c) + " not strictly increasing");
    }
  }
  return IncreasingTableau(g.shape, g.q, grid_rows(g));
}

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  buffer << in.rdbuf();
  return buffer.str();
}

std::string format_text(const IncreasingTableau& t) { return format_grid(t.shape(), t.ceiling(), t.entries(), false); }

std::string format_text(const BulletFilling& x) { return format_grid(x.shape(), x.ceiling(), x.entries(), true); }

json to_json(const IncreasingTableau& t) { return shape_fields(t.shape(), t.ceiling(), t.entries()); }

json to_json(const BulletFilling& x) { return shape_fields(x.shape(), x.ceiling(), x.entries()); }

IncreasingTableau tableau_from_json(const json& j) { return parse_tableau(j.dump()); }

json to_json(const Box& b) { return json::array({b.row, b.col}); }

Box box_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw ParseError("a box is a [row, col] pair");
  return {j[0].get<int>(), j[1].get<int>()};
}

std::vector<Box> parse_box_list(std::string_view text) {
  std::vector<Box> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in box list '" + std::string(text) + "'", 1, static_cast<int>(i) + 1);
    const auto close = text.find(')', i);
    if (close == std::string_view::npos) throw ParseError("unterminated box in '" + std::string(text) + "'");
    const auto inside = text.substr(i + 1, close - i - 1);
    const auto comma = inside.find(',');
    const auto r = comma == std::string_view::npos ? std::nullopt : to_int(inside.substr(0, comma));
    const auto c = comma == std::string_view::npos ? std::nullopt : to_int(inside.substr(comma + 1));
    if (!r || !c || *r < 1 || *c < 1)
      throw ParseError("bad box '(" + std::string(inside) + ")'", 1, static_cast<int>(i) + 1);
    out.push_back({*r, *c});
    i = close + 1;
    skip();
  }
  return out;
}

}  // namespace inctab
