#include "inctab/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "inctab/errors.hpp"

namespace inctab {

TableauEnumerator::TableauEnumerator(const EnumSpec& spec) : spec_(spec) {
  if (!spec_.shape.is_straight()) throw PreconditionError("enumeration needs a straight shape");
  const Shape& shape = spec_.shape;
  boxes_ = shape.boxes();
  const auto n = boxes_.size();
  left_.assign(n, -1);
  up_.assign(n, -1);
  slack_.assign(n, 0);
  entries_.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const Box b = boxes_[k];
    if (shape.contains({b.row, b.col - 1})) left_[k] = shape.index_of({b.row, b.col - 1});
    if (shape.contains({b.row - 1, b.col})) up_[k] = shape.index_of({b.row - 1, b.col});
  }
  for (std::size_t k = n; k-- > 0;) {
    const Box b = boxes_[k];
    int s = 0;
    if (shape.contains(b.right())) s = std::max(s, 1 + slack_[static_cast<std::size_t>(shape.index_of(b.right()))]);
    if (shape.contains(b.below())) s = std::max(s, 1 + slack_[static_cast<std::size_t>(shape.index_of(b.below()))]);
    slack_[k] = s;
  }
}

TableauEnumerator::TableauEnumerator(const EnumSpec& spec, int shard_value) : TableauEnumerator(spec) {
  shard_index_ = shard_box_index(spec);
  if (shard_index_ < 0) throw PreconditionError("this shape and ceiling have no branching box to shard on");
  shard_value_ = shard_value;
}

int TableauEnumerator::lower(int k) const {
  int lo = 1;
  const auto kk = static_cast<std::size_t>(k);
  if (left_[kk] >= 0) lo = std::max(lo, entries_[static_cast<std::size_t>(left_[kk])] + 1);
  if (up_[kk] >= 0) lo = std::max(lo, entries_[static_cast<std::size_t>(up_[kk])] + 1);
  return lo;
}

int TableauEnumerator::upper(int k) const { return spec_.q - slack_[static_cast<std::size_t>(k)]; }

bool TableauEnumerator::descend(int from) {
  const int n = static_cast<int>(entries_.size());
  for (int k = from; k < n; ++k) {
    const int lo = lower(k);
    const int hi = upper(k);
    int v = lo;
    if (k == shard_index_) v = shard_value_;
    if (v < lo || v > hi) return false;
    entries_[static_cast<std::size_t>(k)] = v;
  }
  return true;
}

bool TableauEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (descend(0)) return true;
    done_ = true;
    return false;
  }
  for (int k = static_cast<int>(entries_.size()) - 1; k >= 0; --k) {
    if (k == shard_index_) continue;
    int& v = entries_[static_cast<std::size_t>(k)];
    while (v < upper(k)) {
      ++v;
      if (descend(k + 1)) return true;
    }
  }
  done_ = true;
  return false;
}

IncreasingTableau TableauEnumerator::current() const {
  return IncreasingTableau::from_entries(spec_.shape, spec_.q, entries_);
}

void TableauEnumerator::resume_after(std::span<const int> entries) {
  if (entries.size() != entries_.size()) throw PreconditionError("resume point has the wrong number of entries");
  entries_.assign(entries.begin(), entries.end());
  for (int k = 0; k < static_cast<int>(entries_.size()); ++k) {
    const int v = entries_[static_cast<std::size_t>(k)];
    if (v < lower(k) || v > upper(k)) throw PreconditionError("resume point is not an element of Inc^q(shape)");
  }
  started_ = true;
  done_ = false;
}

int shard_box_index(const EnumSpec& spec) {
  TableauEnumerator probe(spec);
  const int n = static_cast<int>(probe.entries_.size());
  for (int k = 0; k < n; ++k) {
    const int lo = probe.lower(k);
    const int hi = probe.upper(k);
    if (lo > hi) return -1;
    if (lo < hi) return k;
    probe.entries_[static_cast<std::size_t>(k)] = lo;
  }
  return -1;
}

std::vector<int> shard_values(const EnumSpec& spec) {
  const int k = shard_box_index(spec);
  if (k < 0) return {};
  TableauEnumerator probe(spec);
  for (int j = 0; j < k; ++j) probe.entries_[static_cast<std::size_t>(j)] = probe.lower(j);
  std::vector<int> values;
  for (int v = probe.lower(k); v <= probe.upper(k); ++v) values.push_back(v);
  return values;
}

void enumerate(const EnumSpec& spec, const std::function<void(const IncreasingTableau&)>& visit) {
  TableauEnumerator e(spec);
  while (e.next()) visit(e.current());
}

std::vector<IncreasingTableau> enumerate_all(const EnumSpec& spec) {
  std::vector<IncreasingTableau> out;
  enumerate(spec, [&](const IncreasingTableau& t) { out.push_back(t); });
  return out;
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::size_t error_index = n;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, n); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (i < error_index) {
            error_index = i;
            error = std::current_exception();
          }
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::uint64_t count(const EnumSpec& spec, int jobs) {
  const auto shards = shard_values(spec);
  if (shards.empty() || jobs <= 1) {
    std::uint64_t total = 0;
    TableauEnumerator e(spec);
    while (e.next()) ++total;
    return total;
  }
  std::vector<std::uint64_t> partial(shards.size(), 0);
  parallel_for(shards.size(), jobs, [&](std::size_t s) {
    TableauEnumerator e(spec, shards[s]);
    while (e.next()) ++partial[s];
  });
  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

std::vector<Orbit> orbit_partition(const EnumSpec& spec, int jobs, std::uint64_t budget) {
  const auto all = enumerate_all(spec);
  std::unordered_set<std::string> visited;
  std::vector<Orbit> orbits;
  std::mutex mutex;

  parallel_for(all.size(), jobs, [&](std::size_t i) {
    {
      std::lock_guard lock(mutex);
      if (visited.count(all[i].key())) return;
    }
    Orbit o = orbit(all[i], budget);
    std::lock_guard lock(mutex);
    // Another worker may have walked the same orbit concurrently.
    if (visited.count(o.canonical().key())) return;
    for (const auto& t : o.elements) visited.insert(t.key());
    orbits.push_back(std::move(o));
  });

  for (auto& o : orbits) {
    std::rotate(o.elements.begin(), o.elements.begin() + static_cast<std::ptrdiff_t>(o.canonical_index),
                o.elements.end());
    o.canonical_index = 0;
  }
  std::sort(orbits.begin(), orbits.end(), [](const Orbit& a, const Orbit& b) {
    const auto ea = a.canonical().entries();
    const auto eb = b.canonical().entries();
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
  });
  return orbits;
}

}  // namespace inctab
