#include "inctab/dynamics.hpp"

#include <algorithm>
#include <string>

#include "inctab/errors.hpp"

namespace inctab {

namespace {

constexpr int kBullet = BulletFilling::kBullet;

void replace_all(BulletFilling& x, int from, int to) {
  for (int& v : x.entries())
    if (v == from) v = to;
}

void require_straight(const IncreasingTableau& t, const char* op) {
  if (!t.shape().is_straight()) throw PreconditionError(std::string(op) + " needs a straight-shape tableau");
}

std::string describe(const IncreasingTableau& t) {
  std::string out = to_string(t.shape()) + " q=" + std::to_string(t.ceiling()) + " entries";
  for (int v : t.entries()) out += " " + std::to_string(v);
  return out;
}

IncreasingTableau decode_or_die(const std::vector<Partition>& shapes, const IncreasingTableau& t, const char* op) {
  try {
    return decode(ShapeVector(shapes));
  } catch (const ValidationError& e) {
    throw InternalError(std::string(op) + " produced an undecodable shape vector (" + e.what() + ") for " +
                        describe(t));
  }
}

}  // namespace

IncreasingTableau promote(const IncreasingTableau& t, const StageObserver& observer) {
  const int q = t.ceiling();
  BulletFilling work(t);
  replace_all(work, 1, kBullet);
  if (observer) observer("Rep_{1->*}", work);
  for (int i = 2; i <= q; ++i) {
    swap_in_place(i, work);
    if (observer) observer("swap_" + std::to_string(i), work);
  }
  replace_all(work, kBullet, q + 1);
  if (observer) observer("Rep_{*->" + std::to_string(q + 1) + "}", work);
  for (int& v : work.entries()) --v;
  return work.to_tableau(q);
}

IncreasingTableau promote_inverse(const IncreasingTableau& t) {
  const int q = t.ceiling();
  BulletFilling work(t);
  for (int& v : work.entries()) ++v;
  replace_all(work, q + 1, kBullet);
  for (int i = q; i >= 2; --i) swap_in_place(i, work);
  replace_all(work, kBullet, 1);
  return work.to_tableau(q);
}

IncreasingTableau promote_power(const IncreasingTableau& t, std::int64_t k) {
  IncreasingTableau out = t;
  for (; k > 0; --k) out = promote(out);
  for (; k < 0; ++k) out = promote_inverse(out);
  return out;
}

IncreasingTableau evacuate(const IncreasingTableau& t) {
  require_straight(t, "evacuate");
  const int q = t.ceiling();
  // One sweep P^0 .. P^q; P^(q-a) contributes its shape at level a.
  std::vector<Partition> shapes(static_cast<std::size_t>(q) + 1);
  IncreasingTableau power = t;
  for (int j = 0; j <= q; ++j) {
    if (j > 0) power = promote(power);
    shapes[static_cast<std::size_t>(q - j)] = encode(power)[q - j];
  }
  return decode_or_die(shapes, t, "evacuate");
}

IncreasingTableau dual_evacuate(const IncreasingTableau& t) {
  require_straight(t, "dual_evacuate");
  const int q = t.ceiling();
  std::vector<Partition> shapes(static_cast<std::size_t>(q) + 1);
  IncreasingTableau power = t;
  for (int a = 0; a <= q; ++a) {
    if (a > 0) power = promote_inverse(power);
    shapes[static_cast<std::size_t>(a)] = encode(power)[a];
  }
  return decode_or_die(shapes, t, "dual_evacuate");
}

GrowthDiagram::GrowthDiagram(int q, std::int64_t j_min, std::vector<ShapeVector> rows)
    : q_(q), j_min_(j_min), rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (r.ceiling() != q_) throw ValidationError("growth diagram rows must share the ceiling q");
}

const ShapeVector& GrowthDiagram::row(std::int64_t j) const {
  if (j < j_min() || j > j_max())
    throw PreconditionError("row " + std::to_string(j) + " is outside the diagram window");
  return rows_[static_cast<std::size_t>(j - j_min_)];
}

ShapeVector GrowthDiagram::column(std::int64_t x) const {
  if (x - q_ < j_min() || x > j_max())
    throw PreconditionError("column " + std::to_string(x) + " needs rows " + std::to_string(x - q_) + ".." +
                            std::to_string(x));
  std::vector<Partition> shapes;
  shapes.reserve(static_cast<std::size_t>(q_) + 1);
  for (int i = 0; i <= q_; ++i) shapes.push_back(cell(i, x - i));
  return ShapeVector(std::move(shapes));
}

std::vector<std::pair<int, int>> GrowthDiagram::lattice_path(const Box& b, std::int64_t first_diagonal) const {
  std::vector<std::pair<int, int>> points;
  for (int k = 1; k <= 2 * q_ + 1; ++k) {
    const std::int64_t s = first_diagonal + k - 1;
    // Partitions grow moving up-right along a diagonal, so the smallest shaded cell has the largest j.
    for (std::int64_t j = j_max(); j >= j_min(); --j) {
      const std::int64_t i = s - 2 * j;
      if (i < 0) continue;
      if (i > q_) break;
      if (cell(static_cast<int>(i), j).contains(b)) {
        points.emplace_back(k, static_cast<int>(i));
        break;
      }
    }
  }
  return points;
}

GrowthDiagram growth_diagram(const IncreasingTableau& t, std::int64_t j_min, std::int64_t j_max) {
  require_straight(t, "growth_diagram");
  if (j_min > 0 || j_max < 0) throw PreconditionError("growth diagram window must contain row 0");
  std::vector<ShapeVector> rows(static_cast<std::size_t>(j_max - j_min + 1));
  IncreasingTableau forward = t;
  for (std::int64_t j = 0; j <= j_max; ++j) {
    if (j > 0) forward = promote(forward);
    rows[static_cast<std::size_t>(j - j_min)] = encode(forward);
  }
  IncreasingTableau backward = t;
  for (std::int64_t j = -1; j >= j_min; --j) {
    backward = promote_inverse(backward);
    rows[static_cast<std::size_t>(j - j_min)] = encode(backward);
  }
  return GrowthDiagram(t.ceiling(), j_min, std::move(rows));
}

Orbit orbit(const IncreasingTableau& t, std::uint64_t budget) {
  Orbit out;
  out.elements.push_back(t);
  IncreasingTableau current = promote(t);
  std::uint64_t steps = 1;
  while (!(current == t)) {
    if (steps >= budget)
      throw BudgetExceeded("orbit did not close within " + std::to_string(budget) + " promotions");
    out.elements.push_back(current);
    current = promote(current);
    ++steps;
  }
  auto less = [](const IncreasingTableau& a, const IncreasingTableau& b) {
    return std::lexicographical_compare(a.entries().begin(), a.entries().end(), b.entries().begin(),
                                        b.entries().end());
  };
  out.canonical_index =
      static_cast<std::size_t>(std::min_element(out.elements.begin(), out.elements.end(), less) - out.elements.begin());
  return out;
}

std::uint64_t orbit_size(const IncreasingTableau& t, std::uint64_t budget) {
  IncreasingTableau current = promote(t);
  std::uint64_t steps = 1;
  while (!(current == t)) {
    if (steps >= budget)
      throw BudgetExceeded("orbit did not close within " + std::to_string(budget) + " promotions");
    current = promote(current);
    ++steps;
  }
  return steps;
}

}  // namespace inctab
