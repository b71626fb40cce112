#include "inctab/shape.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "inctab/errors.hpp"

namespace inctab {

std::string to_string(const Box& b) { return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")"; }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw ValidationError("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw ValidationError("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::rectangle(int rows, int cols) {
  if (rows < 0 || cols < 0) throw PreconditionError("rectangle dimensions must be nonnegative");
  return Partition(std::vector<int>(static_cast<std::size_t>(cols == 0 ? 0 : rows), cols));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contained_in(const Partition& other) const {
  if (length() > other.length()) return false;
  for (int r = 1; r <= length(); ++r)
    if (row(r) > other.row(r)) return false;
  return true;
}

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (int r = 1; r <= p.length(); ++r) {
    if (r > 1) out += ',';
    out += std::to_string(p.row(r));
  }
  return out + ")";
}

Shape::Shape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!inner_.contained_in(outer_))
    throw ValidationError("inner partition " + to_string(inner_) + " is not contained in " + to_string(outer_));
  row_offset_.assign(static_cast<std::size_t>(rows()) + 1, 0);
  for (int r = 1; r <= rows(); ++r) row_offset_[r] = row_offset_[r - 1] + (outer_.row(r) - inner_.row(r));
}

bool Shape::is_rectangle() const {
  if (!is_straight() || outer_.empty()) return false;
  return outer_.row(1) == outer_.row(rows());
}

bool Shape::contains(const Box& b) const {
  return b.row >= 1 && b.row <= rows() && b.col >= first_col(b.row) && b.col <= last_col(b.row);
}

Box Shape::box_at(int index) const {
  auto it = std::upper_bound(row_offset_.begin(), row_offset_.end(), index);
  const int r = static_cast<int>(it - row_offset_.begin());
  return {r, first_col(r) + (index - row_offset_[r - 1])};
}

std::vector<Box> Shape::boxes() const {
  std::vector<Box> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int r = 1; r <= rows(); ++r)
    for (int c = first_col(r); c <= last_col(r); ++c) out.push_back({r, c});
  return out;
}

std::vector<Box> Shape::inner_corners() const {
  std::vector<Box> out;
  for (int r = 1; r <= inner_.length(); ++r) {
    const Box b{r, inner_.row(r)};
    if (!inner_.contains(b.right()) && !inner_.contains(b.below())) out.push_back(b);
  }
  return out;
}

std::vector<Box> Shape::outer_corners() const {
  std::vector<Box> out;
  for (int r = 1; r <= rows(); ++r) {
    if (last_col(r) < first_col(r)) continue;
    const Box b{r, last_col(r)};
    if (!contains(b.right()) && !contains(b.below())) out.push_back(b);
  }
  return out;
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("bad integer '" + std::string(s) + "' in shape '" + std::string(whole) + "'");
  return v;
}

Partition parse_parts(std::string_view s, std::string_view whole) {
  std::vector<int> parts;
  if (s.empty() || s == "0") return Partition();
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    parts.push_back(parse_int(s.substr(start, comma - start), whole));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const ValidationError& e) {
    throw ParseError(std::string(e.what()) + " in shape '" + std::string(whole) + "'");
  }
}

}  // namespace

Shape parse_shape(std::string_view text) {
  if (text.empty()) throw ParseError("empty shape");
  if (const auto x = text.find('x'); x != std::string_view::npos) {
    const int m = parse_int(text.substr(0, x), text);
    const int n = parse_int(text.substr(x + 1), text);
    if (m < 1 || n < 1) throw ParseError("rectangle dimensions must be positive in '" + std::string(text) + "'");
    return Shape::rectangle(m, n);
  }
  const auto slash = text.find('/');
  Partition outer = parse_parts(text.substr(0, slash), text);
  Partition inner = slash == std::string_view::npos ? Partition() : parse_parts(text.substr(slash + 1), text);
  try {
    return Shape(std::move(outer), std::move(inner));
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

std::string to_string(const Shape& s) {
  if (s.is_rectangle()) return std::to_string(s.rows()) + "x" + std::to_string(s.outer().row(1));
  auto parts = [](const Partition& p) {
    if (p.empty()) return std::string("0");
    std::string out;
    for (int r = 1; r <= p.length(); ++r) {
      if (r > 1) out += ',';
      out += std::to_string(p.row(r));
    }
    return out;
  };
  std::string out = parts(s.outer());
  if (!s.is_straight()) out += "/" + parts(s.inner());
  return out;
}

FrameSet::FrameSet(int m, int n) : m_(m), n_(n) {
  if (m < 1 || n < 1) throw PreconditionError("frame needs a nonempty rectangle");
  for (int r = 1; r <= m; ++r)
    for (int c = 1; c <= n; ++c)
      if (r == 1 || r == m || c == 1 || c == n) boxes_.push_back({r, c});
}

bool FrameSet::contains(const Box& b) const {
  if (b.row < 1 || b.row > m_ || b.col < 1 || b.col > n_) return false;
  return b.row == 1 || b.row == m_ || b.col == 1 || b.col == n_;
}

FrameSet frame(int m, int n) { return FrameSet(m, n); }

Box rotate_box(int m, int n, const Box& b) {
  if (b.row < 1 || b.row > m || b.col < 1 || b.col > n)
    throw PreconditionError("box " + to_string(b) + " is outside the rectangle");
  return {m + 1 - b.row, n + 1 - b.col};
}

}  // namespace inctab
