#include "inctab/kjdt.hpp"

#include <algorithm>
#include <string>

#include "inctab/errors.hpp"

namespace inctab {

void swap_in_place(int i, BulletFilling& x) {
  const Shape& shape = x.shape();
  auto entries = x.entries();
  const int n = shape.size();
  constexpr int kBullet = BulletFilling::kBullet;

  auto candidate = [&](int idx) {
    const int v = entries[static_cast<std::size_t>(idx)];
    return v == i || v == kBullet;
  };

  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> component;
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)] || !candidate(start)) continue;
    component.clear();
    stack.assign(1, start);
    seen[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      const int idx = stack.back();
      stack.pop_back();
      component.push_back(idx);
      const Box b = shape.box_at(idx);
      for (const Box nb : {Box{b.row - 1, b.col}, Box{b.row + 1, b.col}, Box{b.row, b.col - 1}, Box{b.row, b.col + 1}}) {
        if (!shape.contains(nb)) continue;
        const int j = shape.index_of(nb);
        if (seen[static_cast<std::size_t>(j)] || !candidate(j)) continue;
        seen[static_cast<std::size_t>(j)] = 1;
        stack.push_back(j);
      }
    }
    if (component.size() < 2) continue;
    for (int idx : component) {
      int& v = entries[static_cast<std::size_t>(idx)];
      v = (v == kBullet) ? i : kBullet;
    }
  }
}

BulletFilling swap(int i, const BulletFilling& x) {
  BulletFilling out = x;
  swap_in_place(i, out);
  return out;
}

BulletFilling add_bullets(const IncreasingTableau& t, std::span<const Box> corners) {
  if (corners.empty()) throw PreconditionError("In_I needs a nonempty set of inner corners");
  const Shape& shape = t.shape();
  const auto available = shape.inner_corners();
  for (std::size_t k = 0; k < corners.size(); ++k)
    for (std::size_t l = k + 1; l < corners.size(); ++l)
      if (corners[k] == corners[l]) throw PreconditionError("corner " + to_string(corners[k]) + " listed twice");
  std::vector<int> inner(shape.inner().parts().begin(), shape.inner().parts().end());
  for (const Box& b : corners) {
    if (std::find(available.begin(), available.end(), b) == available.end())
      throw PreconditionError("box " + to_string(b) + " is not an inner corner of " + to_string(shape));
    --inner[static_cast<std::size_t>(b.row - 1)];
  }
  return BulletFilling(t, Shape(shape.outer(), Partition(std::move(inner))));
}

IncreasingTableau remove_bullets(const BulletFilling& x) {
  const Shape& shape = x.shape();
  std::vector<int> outer(shape.outer().parts().begin(), shape.outer().parts().end());
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(shape.size()));
  for (const Box& b : shape.boxes()) {
    if (!x.is_bullet(b)) {
      entries.push_back(x.at(b));
      continue;
    }
    if (shape.contains(b.right()) || shape.contains(b.below()))
      throw PreconditionError("bullet not at outer corner: " + to_string(b) + " of " + to_string(shape));
    --outer[static_cast<std::size_t>(b.row - 1)];
  }
  return IncreasingTableau::from_entries(Shape(Partition(std::move(outer)), shape.inner()), x.ceiling(),
                                         std::move(entries));
}

IncreasingTableau slide(const IncreasingTableau& t, std::span<const Box> corners, const StageObserver& observer) {
  BulletFilling work = add_bullets(t, corners);
  if (observer) observer("In", work);
  for (int i = 1; i <= t.ceiling(); ++i) {
    swap_in_place(i, work);
    if (observer) observer("swap_" + std::to_string(i), work);
  }
  try {
    return remove_bullets(work);
  } catch (const PreconditionError& e) {
    std::string input;
    for (int v : t.entries()) input += std::to_string(v) + " ";
    for (const Box& b : corners) input += to_string(b);
    throw InternalError(std::string(e.what()) + "; slide input " + to_string(t.shape()) + " q=" +
                        std::to_string(t.ceiling()) + " entries " + input);
  }
}

CornerStrategy CornerStrategy::fixed_sequence(std::vector<std::vector<Box>> sets) {
  CornerStrategy s(Kind::FixedSequence);
  s.sequence_ = std::move(sets);
  return s;
}

CornerStrategy CornerStrategy::seeded_random(std::uint64_t seed) {
  CornerStrategy s(Kind::SeededRandom);
  s.rng_.seed(seed);
  return s;
}

std::vector<Box> CornerStrategy::next(const Shape& shape) {
  auto corners = shape.inner_corners();
  if (corners.empty()) throw PreconditionError("shape " + to_string(shape) + " has no inner corners");
  switch (kind_) {
    case Kind::AllCorners:
      return corners;
    case Kind::FixedSequence: {
      if (position_ >= sequence_.size()) return corners;
      auto chosen = sequence_[position_++];
      if (chosen.empty()) throw PreconditionError("corner set " + std::to_string(position_) + " is empty");
      for (const Box& b : chosen)
        if (std::find(corners.begin(), corners.end(), b) == corners.end())
          throw PreconditionError("corner set " + std::to_string(position_) + " uses " + to_string(b) +
                                  ", not an inner corner of " + to_string(shape));
      return chosen;
    }
    case Kind::SeededRandom: {
      // Nonzero mask over the corners, uniform among the 2^k - 1 choices.
      std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << corners.size()) - 1);
      const std::uint64_t mask = pick(rng_);
      std::vector<Box> chosen;
      for (std::size_t k = 0; k < corners.size(); ++k)
        if (mask >> k & 1U) chosen.push_back(corners[k]);
      return chosen;
    }
  }
  return corners;
}

IncreasingTableau rectify(const IncreasingTableau& t, CornerStrategy strategy, const StageObserver& observer) {
  IncreasingTableau current = t;
  while (!current.shape().is_straight()) {
    const auto corners = strategy.next(current.shape());
    current = slide(current, corners, observer);
  }
  return current;
}

int lis(std::span<const int> letters) {
  // tails[k] = smallest possible last letter of a strictly increasing run of length k+1.
  std::vector<int> tails;
  for (int x : letters) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end())
      tails.push_back(x);
    else
      *it = x;
  }
  return static_cast<int>(tails.size());
}

int lis(const Word& w) { return lis(w.letters()); }

int lds(const Word& w) {
  std::vector<int> negated(w.letters().begin(), w.letters().end());
  for (int& x : negated) x = -x;
  return lis(negated);
}

}  // namespace inctab
