#pragma once

#include <span>
#include <string>
#include <vector>

#include "inctab/shape.hpp"

namespace inctab {

/// Filling of a (possibly skew) shape by integers in [1, q], strictly
/// increasing along rows and down columns. Entries are stored row-major
/// over the shape's boxes; see Shape::index_of.
class IncreasingTableau {
 public:
  IncreasingTableau() = default;

  /// rows[r] lists the entries of the shape's boxes in row r+1, left to right.
  /// Throws ValidationError if the filling is not increasing or leaves [1, q].
  IncreasingTableau(Shape shape, int q, const std::vector<std::vector<int>>& rows);

  /// Row-major entries; same validation as the row constructor.
  static IncreasingTableau from_entries(Shape shape, int q, std::vector<int> entries);

  const Shape& shape() const { return shape_; }
  int ceiling() const { return q_; }
  std::span<const int> entries() const { return entries_; }

  int at(const Box& b) const;
  std::vector<std::vector<int>> rows() const;

  /// Each of 1..|shape| appears exactly once.
  bool is_standard() const;

  /// Row-major entries as bytes; exact key for visited sets.
  std::string key() const;

  friend bool operator==(const IncreasingTableau& a, const IncreasingTableau& b) {
    return a.q_ == b.q_ && a.entries_ == b.entries_ && a.shape_ == b.shape_;
  }

 private:
  struct Unchecked {};
  IncreasingTableau(Unchecked, Shape shape, int q, std::vector<int> entries)
      : shape_(std::move(shape)), q_(q), entries_(std::move(entries)) {}
  void validate() const;

  Shape shape_;
  int q_ = 0;
  std::vector<int> entries_;

  friend class BulletFilling;
};

/// Working filling for K-jeu de taquin: positive integers or bullets. No
/// ordering constraint; entries may reach q+1 while a promotion is in flight.
class BulletFilling {
 public:
  static constexpr int kBullet = 0;

  BulletFilling() = default;
  /// rows use kBullet for bullets. Entries must lie in [1, q+1].
  BulletFilling(Shape shape, int q, const std::vector<std::vector<int>>& rows);
  explicit BulletFilling(const IncreasingTableau& t);
  /// Same numeric content as t on a larger shape; boxes outside t's shape become bullets.
  BulletFilling(const IncreasingTableau& t, Shape enlarged);

  const Shape& shape() const { return shape_; }
  int ceiling() const { return q_; }
  std::span<const int> entries() const { return entries_; }
  std::span<int> entries() { return entries_; }

  int at(const Box& b) const { return entries_[static_cast<std::size_t>(shape_.index_of(b))]; }
  bool is_bullet(const Box& b) const { return at(b) == kBullet; }
  void set(const Box& b, int value);
  bool has_bullets() const;
  std::vector<std::vector<int>> rows() const;

  /// The filling as an increasing tableau; throws ValidationError if bullets remain or it is not increasing.
  IncreasingTableau to_tableau() const;
  IncreasingTableau to_tableau(int q) const;

  friend bool operator==(const BulletFilling&, const BulletFilling&) = default;

 private:
  Shape shape_;
  int q_ = 0;
  std::vector<int> entries_;
};

/// (sh(T<=0), sh(T<=1), ..., sh(T<=q)) for a straight tableau.
class ShapeVector {
 public:
  ShapeVector() = default;
  /// Throws ValidationError unless sh_0 ⊆ sh_1 ⊆ ... ⊆ sh_q.
  explicit ShapeVector(std::vector<Partition> shapes);

  int ceiling() const { return static_cast<int>(shapes_.size()) - 1; }
  std::span<const Partition> shapes() const { return shapes_; }
  const Partition& operator[](int a) const { return shapes_[static_cast<std::size_t>(a)]; }

  friend bool operator==(const ShapeVector&, const ShapeVector&) = default;

 private:
  std::vector<Partition> shapes_;
};

std::string to_string(const ShapeVector& v);

/// A word over [1, q].
class Word {
 public:
  Word() = default;
  Word(std::vector<int> letters, int q);

  std::span<const int> letters() const { return letters_; }
  int ceiling() const { return q_; }
  std::size_t size() const { return letters_.size(); }

  /// Subword of letters <= a (resp. > a), alphabet bound unchanged.
  Word at_most(int a) const;
  Word greater_than(int a) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
  int q_ = 0;
};

/// T<=a: delete entries above a and the boxes they occupied. Straight in, straight out.
IncreasingTableau restrict_le(const IncreasingTableau& t, int a);
/// T>a on the complementary skew shape; entries keep their values.
IncreasingTableau restrict_gt(const IncreasingTableau& t, int a);

/// Rows bottom to top, each left to right.
Word reading_word(const IncreasingTableau& t);

/// Rotate a rectangular tableau by 180 degrees and replace i by q+1-i.
IncreasingTableau rot(const IncreasingTableau& t);

/// Reverse w and replace i by q+1-i; the reading word of rot(T) when w is that of T.
Word rot_word(const Word& w);

ShapeVector encode(const IncreasingTableau& t);

/// Place a in every box of sh_a \ sh_(a-1). Throws ValidationError naming the
/// offending box when the result is not an increasing tableau.
IncreasingTableau decode(const ShapeVector& v);

}  // namespace inctab
