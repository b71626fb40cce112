#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace inctab {

/// A cell of a Young diagram, 1-based, English orientation (row 1 on top).
struct Box {
  int row = 1;
  int col = 1;

  Box right() const { return {row, col + 1}; }
  Box below() const { return {row + 1, col}; }

  friend auto operator<=>(const Box&, const Box&) = default;
  friend bool operator==(const Box&, const Box&) = default;
};

std::string to_string(const Box& b);

/// Weakly decreasing sequence of row lengths. Trailing zeros are dropped on
/// construction so that structural equality is partition equality.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition rectangle(int rows, int cols);

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  /// Length of a 1-based row; zero past the last part.
  int row(int r) const { return r >= 1 && r <= length() ? parts_[r - 1] : 0; }

  bool contains(const Box& b) const { return b.row >= 1 && b.col >= 1 && b.col <= row(b.row); }
  bool contained_in(const Partition& other) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// "(4,3,1)" for nonempty partitions and "()" for the empty one.
std::string to_string(const Partition& p);

/// Skew Ferrers diagram outer/inner. Straight shapes have an empty inner partition.
class Shape {
 public:
  Shape() = default;
  explicit Shape(Partition outer, Partition inner = {});

  static Shape rectangle(int rows, int cols) { return Shape(Partition::rectangle(rows, cols)); }

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }

  int rows() const { return outer_.length(); }
  int size() const { return static_cast<int>(row_offset_.empty() ? 0 : row_offset_.back()); }
  bool empty() const { return size() == 0; }
  bool is_straight() const { return inner_.empty(); }
  bool is_rectangle() const;

  /// First and last column of row r that belong to the shape (last < first when the row is empty).
  int first_col(int r) const { return inner_.row(r) + 1; }
  int last_col(int r) const { return outer_.row(r); }

  bool contains(const Box& b) const;

  /// Position of b in the row-major storage of any filling of this shape. b must be contained.
  int index_of(const Box& b) const { return row_offset_[b.row - 1] + (b.col - first_col(b.row)); }
  Box box_at(int index) const;

  /// All boxes in row-major order.
  std::vector<Box> boxes() const;

  std::vector<Box> inner_corners() const;
  std::vector<Box> outer_corners() const;

  friend bool operator==(const Shape& a, const Shape& b) { return a.outer_ == b.outer_ && a.inner_ == b.inner_; }

 private:
  Partition outer_;
  Partition inner_;
  std::vector<int> row_offset_;  // row_offset_[r] = boxes in rows 1..r; size rows()+1
};

/// CLI syntax: "3x4", "6,4,2", "6,4,2/2,1". Throws ParseError.
Shape parse_shape(std::string_view text);

/// Inverse of parse_shape; rectangles print as "MxN".
std::string to_string(const Shape& s);

/// Boxes of an m×n rectangle lying in its first or last row or column.
class FrameSet {
 public:
  FrameSet(int m, int n);

  int rows() const { return m_; }
  int cols() const { return n_; }
  std::span<const Box> boxes() const& { return boxes_; }
  std::span<const Box> boxes() && = delete;
  std::size_t size() const { return boxes_.size(); }
  bool contains(const Box& b) const;

 private:
  int m_;
  int n_;
  std::vector<Box> boxes_;
};

FrameSet frame(int m, int n);

/// 180° rotation of the m×n rectangle; an involution.
Box rotate_box(int m, int n, const Box& b);

}  // namespace inctab
