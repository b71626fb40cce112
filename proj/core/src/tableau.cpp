#include "inctab/tableau.hpp"

#include <algorithm>

#include "inctab/errors.hpp"

namespace inctab {

namespace {

std::vector<int> flatten(const Shape& shape, const std::vector<std::vector<int>>& rows) {
  if (static_cast<int>(rows.size()) != shape.rows())
    throw ValidationError("expected " + std::to_string(shape.rows()) + " rows, got " + std::to_string(rows.size()));
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(shape.size()));
  for (int r = 1; r <= shape.rows(); ++r) {
    const auto& row = rows[static_cast<std::size_t>(r - 1)];
    const int width = shape.last_col(r) - shape.first_col(r) + 1;
    if (static_cast<int>(row.size()) != width)
      throw ValidationError("row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                            " entries, shape needs " + std::to_string(width));
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

std::vector<std::vector<int>> unflatten(const Shape& shape, std::span<const int> entries) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(shape.rows()));
  for (int r = 1; r <= shape.rows(); ++r)
    for (int c = shape.first_col(r); c <= shape.last_col(r); ++c)
      out[static_cast<std::size_t>(r - 1)].push_back(entries[static_cast<std::size_t>(shape.index_of({r, c}))]);
  return out;
}

}  // namespace

IncreasingTableau::IncreasingTableau(Shape shape, int q, const std::vector<std::vector<int>>& rows)
    : shape_(std::move(shape)), q_(q) {
  entries_ = flatten(shape_, rows);
  validate();
}

IncreasingTableau IncreasingTableau::from_entries(Shape shape, int q, std::vector<int> entries) {
  if (static_cast<int>(entries.size()) != shape.size())
    throw ValidationError("expected " + std::to_string(shape.size()) + " entries, got " +
                          std::to_string(entries.size()));
  IncreasingTableau t(Unchecked{}, std::move(shape), q, std::move(entries));
  t.validate();
  return t;
}

void IncreasingTableau::validate() const {
  if (q_ < 0) throw ValidationError("ceiling q must be nonnegative");
  for (int r = 1; r <= shape_.rows(); ++r) {
    for (int c = shape_.first_col(r); c <= shape_.last_col(r); ++c) {
      const Box b{r, c};
      const int v = at(b);
      if (v < 1 || v > q_)
        throw ValidationError("entry " + std::to_string(v) + " at " + to_string(b) + " is outside [1, " +
                              std::to_string(q_) + "]");
      const Box left{r, c - 1};
      if (shape_.contains(left) && at(left) >= v)
        throw ValidationError("row " + std::to_string(r) + " not strictly increasing at " + to_string(b));
      const Box up{r - 1, c};
      if (shape_.contains(up) && at(up) >= v)
        throw ValidationError("column " + std::to_string(c) + " not strictly increasing at " + to_string(b));
    }
  }
}

int IncreasingTableau::at(const Box& b) const {
  if (!shape_.contains(b)) throw PreconditionError("box " + to_string(b) + " is not in the tableau's shape");
  return entries_[static_cast<std::size_t>(shape_.index_of(b))];
}

std::vector<std::vector<int>> IncreasingTableau::rows() const { return unflatten(shape_, entries_); }

bool IncreasingTableau::is_standard() const {
  std::vector<int> sorted(entries_.begin(), entries_.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string IncreasingTableau::key() const {
  std::string k;
  k.reserve(entries_.size());
  for (int v : entries_) k.push_back(static_cast<char>(static_cast<unsigned char>(v)));
  return k;
}

BulletFilling::BulletFilling(Shape shape, int q, const std::vector<std::vector<int>>& rows)
    : shape_(std::move(shape)), q_(q) {
  entries_ = flatten(shape_, rows);
  for (int v : entries_)
    if (v < 0 || v > q_ + 1)
      throw ValidationError("bullet filling entry " + std::to_string(v) + " is outside [1, q+1]");
}

BulletFilling::BulletFilling(const IncreasingTableau& t)
    : shape_(t.shape()), q_(t.ceiling()), entries_(t.entries().begin(), t.entries().end()) {}

BulletFilling::BulletFilling(const IncreasingTableau& t, Shape enlarged) : shape_(std::move(enlarged)), q_(t.ceiling()) {
  entries_.assign(static_cast<std::size_t>(shape_.size()), kBullet);
  for (const Box& b : t.shape().boxes()) {
    if (!shape_.contains(b)) throw PreconditionError("enlarged shape does not cover " + to_string(b));
    set(b, t.at(b));
  }
}

void BulletFilling::set(const Box& b, int value) { entries_[static_cast<std::size_t>(shape_.index_of(b))] = value; }

bool BulletFilling::has_bullets() const {
  return std::find(entries_.begin(), entries_.end(), kBullet) != entries_.end();
}

std::vector<std::vector<int>> BulletFilling::rows() const { return unflatten(shape_, entries_); }

IncreasingTableau BulletFilling::to_tableau() const { return to_tableau(q_); }

IncreasingTableau BulletFilling::to_tableau(int q) const {
  if (has_bullets()) throw ValidationError("filling still holds bullets");
  return IncreasingTableau::from_entries(shape_, q, entries_);
}

ShapeVector::ShapeVector(std::vector<Partition> shapes) : shapes_(std::move(shapes)) {
  if (shapes_.empty()) throw ValidationError("shape vector needs at least one partition");
  for (std::size_t a = 1; a < shapes_.size(); ++a)
    if (!shapes_[a - 1].contained_in(shapes_[a]))
      throw ValidationError("shape vector is not nested at position " + std::to_string(a) + ": " +
                            to_string(shapes_[a - 1]) + " not inside " + to_string(shapes_[a]));
}

std::string to_string(const ShapeVector& v) {
  std::string out;
  for (std::size_t a = 0; a < v.shapes().size(); ++a) {
    if (a > 0) out += ", ";
    out += to_string(v.shapes()[a]);
  }
  return out;
}

Word::Word(std::vector<int> letters, int q) : letters_(std::move(letters)), q_(q) {
  for (int x : letters_)
    if (x < 1 || x > q_) throw ValidationError("letter " + std::to_string(x) + " outside [1, " + std::to_string(q_) + "]");
}

Word Word::at_most(int a) const {
  std::vector<int> out;
  std::copy_if(letters_.begin(), letters_.end(), std::back_inserter(out), [a](int x) { return x <= a; });
  return Word(std::move(out), q_);
}

Word Word::greater_than(int a) const {
  std::vector<int> out;
  std::copy_if(letters_.begin(), letters_.end(), std::back_inserter(out), [a](int x) { return x > a; });
  return Word(std::move(out), q_);
}

IncreasingTableau restrict_le(const IncreasingTableau& t, int a) {
  const Shape& s = t.shape();
  std::vector<int> outer(static_cast<std::size_t>(s.rows()));
  std::vector<int> entries;
  for (int r = 1; r <= s.rows(); ++r) {
    int len = s.inner().row(r);
    for (int c = s.first_col(r); c <= s.last_col(r) && t.at({r, c}) <= a; ++c) {
      entries.push_back(t.at({r, c}));
      ++len;
    }
    outer[static_cast<std::size_t>(r - 1)] = len;
  }
  return IncreasingTableau::from_entries(Shape(Partition(std::move(outer)), s.inner()), t.ceiling(),
                                         std::move(entries));
}

IncreasingTableau restrict_gt(const IncreasingTableau& t, int a) {
  const Shape& s = t.shape();
  std::vector<int> inner(static_cast<std::size_t>(s.rows()));
  std::vector<int> entries;
  for (int r = 1; r <= s.rows(); ++r) {
    int len = s.inner().row(r);
    for (int c = s.first_col(r); c <= s.last_col(r); ++c) {
      const int v = t.at({r, c});
      if (v <= a)
        ++len;
      else
        entries.push_back(v);
    }
    inner[static_cast<std::size_t>(r - 1)] = len;
  }
  return IncreasingTableau::from_entries(Shape(s.outer(), Partition(std::move(inner))), t.ceiling(),
                                         std::move(entries));
}

Word reading_word(const IncreasingTableau& t) {
  const Shape& s = t.shape();
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(s.size()));
  for (int r = s.rows(); r >= 1; --r)
    for (int c = s.first_col(r); c <= s.last_col(r); ++c) letters.push_back(t.at({r, c}));
  return Word(std::move(letters), t.ceiling());
}

IncreasingTableau rot(const IncreasingTableau& t) {
  if (!t.shape().is_rectangle()) throw PreconditionError("rot is defined only for rectangular tableaux");
  const int q = t.ceiling();
  std::vector<int> entries(t.entries().rbegin(), t.entries().rend());
  for (int& v : entries) v = q + 1 - v;
  return IncreasingTableau::from_entries(t.shape(), q, std::move(entries));
}

Word rot_word(const Word& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  for (int& x : letters) x = w.ceiling() + 1 - x;
  return Word(std::move(letters), w.ceiling());
}

ShapeVector encode(const IncreasingTableau& t) {
  if (!t.shape().is_straight()) throw PreconditionError("encode needs a straight-shape tableau");
  const Shape& s = t.shape();
  std::vector<Partition> shapes;
  shapes.reserve(static_cast<std::size_t>(t.ceiling()) + 1);
  std::vector<int> lengths(static_cast<std::size_t>(s.rows()), 0);
  for (int a = 0; a <= t.ceiling(); ++a) {
    for (int r = 1; r <= s.rows(); ++r) {
      int& len = lengths[static_cast<std::size_t>(r - 1)];
      while (len < s.last_col(r) && t.at({r, len + 1}) <= a) ++len;
    }
    shapes.emplace_back(lengths);
  }
  return ShapeVector(std::move(shapes));
}

IncreasingTableau decode(const ShapeVector& v) {
  if (!v[0].empty()) throw ValidationError("shape vector must start at the empty partition");
  const int q = v.ceiling();
  const Shape shape(v[q]);
  std::vector<int> entries(static_cast<std::size_t>(shape.size()), 0);
  for (int a = 1; a <= q; ++a) {
    for (int r = 1; r <= v[a].length(); ++r) {
      for (int c = v[a - 1].row(r) + 1; c <= v[a].row(r); ++c) {
        const Box b{r, c};
        entries[static_cast<std::size_t>(shape.index_of(b))] = a;
        // Left and upper neighbours were placed at some value <= a.
        if ((c > 1 && !v[a - 1].contains({r, c - 1})) || (r > 1 && !v[a - 1].contains({r - 1, c})))
          throw ValidationError("decoded filling is not increasing at " + to_string(b) + " (value " +
                                std::to_string(a) + ")");
      }
    }
  }
  return IncreasingTableau::from_entries(shape, q, std::move(entries));
}

}  // namespace inctab
