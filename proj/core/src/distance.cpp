#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <thread>
#include <unordered_map>
#include <vector>

#include "lcd/errors.hpp"
#include "lcd/linear_code.hpp"

namespace lcd {
namespace {

constexpr std::size_t kMaxWords = 4;  // fast paths cover n <= 256

template <std::size_t W>
struct Block {
  std::array<std::uint64_t, W> w{};

  Block& operator^=(const Block& o) noexcept {
    for (std::size_t i = 0; i < W; ++i) w[i] ^= o.w[i];
    return *this;
  }
  unsigned weight() const noexcept {
    unsigned c = 0;
    for (auto x : w) c += static_cast<unsigned>(std::popcount(x));
    return c;
  }
  bool is_zero() const noexcept {
    for (auto x : w)
      if (x != 0) return false;
    return true;
  }
  friend bool operator==(const Block&, const Block&) = default;
};

template <std::size_t W>
struct BlockHash {
  std::size_t operator()(const Block<W>& b) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : b.w) h = (h ^ x) * 0xff51afd7ed558ccdULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

template <std::size_t W>
Block<W> to_block(const BitVector& v) {
  Block<W> b;
  const auto words = v.words();
  for (std::size_t i = 0; i < words.size(); ++i) b.w[i] = words[i];
  return b;
}

template <std::size_t W>
BitVector from_block(const Block<W>& b, std::size_t n) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((b.w[i / 64] >> (i % 64)) & 1U) v.set(i);
  return v;
}

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// ---------------------------------------------------------------------------
// Engine A: Gray-code walk. The 2^k coefficient vectors are split on their top
// `split` bits; each chunk walks its low bits independently and the chunk
// minima are combined, so the answer does not depend on the worker count.

template <std::size_t W>
unsigned walk_chunk(const std::vector<Block<W>>& rows, std::size_t low_bits, std::uint64_t chunk) {
  Block<W> word;
  for (std::size_t j = 0; low_bits + j < rows.size(); ++j)
    if ((chunk >> j) & 1U) word ^= rows[low_bits + j];
  unsigned best = std::numeric_limits<unsigned>::max();
  if (chunk != 0) best = word.weight();
  const std::uint64_t steps = std::uint64_t{1} << low_bits;
  for (std::uint64_t i = 1; i < steps; ++i) {
    word ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
    const unsigned wt = word.weight();
    if (wt < best) {
      best = wt;
      if (best == 1) break;
    }
  }
  return best;
}

template <std::size_t W>
std::size_t full_enumeration(const LinearCode& c, unsigned workers) {
  std::vector<Block<W>> rows;
  for (const auto& r : c.generator().row_list()) rows.push_back(to_block<W>(r));
  const std::size_t k = rows.size();

  std::size_t split = 0;
  while ((1U << split) < workers && split + 8 < k) ++split;
  const std::size_t low_bits = k - split;
  const std::uint64_t chunks = std::uint64_t{1} << split;

  std::vector<unsigned> best(chunks, std::numeric_limits<unsigned>::max());
  if (chunks == 1) {
    best[0] = walk_chunk(rows, low_bits, 0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers && t < chunks; ++t) {
      pool.emplace_back([&, t] {
        for (std::uint64_t ch = t; ch < chunks; ch += workers) best[ch] = walk_chunk(rows, low_bits, ch);
      });
    }
    for (auto& th : pool) th.join();
  }
  return *std::min_element(best.begin(), best.end());
}

// ---------------------------------------------------------------------------
// Engine B: a codeword of weight w is a set of w parity-check columns summing
// to zero. Choose w - 1 columns in increasing order and look the partial sum up
// among the columns with a larger index.

template <std::size_t W>
class ColumnSearch {
 public:
  explicit ColumnSearch(const BitMatrix& parity_check) {
    const std::size_t n = parity_check.cols();
    const BitMatrix t = parity_check.transpose();
    columns_.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      columns_.push_back(to_block<W>(t.row(j)));
      index_[columns_.back()].push_back(static_cast<std::uint32_t>(j));
    }
  }

  // Visits supports of zero-sum column sets of size w; `visit` returns false to stop.
  template <typename Visit>
  bool for_each(std::size_t w, Visit&& visit) {
    chosen_.assign(w, 0);
    if (w == 0) return true;
    return descend(0, 0, Block<W>{}, w, visit);
  }

  bool exists(std::size_t w) {
    bool found = false;
    for_each(w, [&](const std::vector<std::uint32_t>&) {
      found = true;
      return false;
    });
    return found;
  }

 private:
  template <typename Visit>
  bool descend(std::size_t depth, std::size_t start, const Block<W>& sum, std::size_t w, Visit& visit) {
    const std::size_t n = columns_.size();
    if (depth + 1 == w) {
      auto it = index_.find(sum);
      if (it == index_.end()) return true;
      const auto& list = it->second;
      auto pos = std::lower_bound(list.begin(), list.end(), static_cast<std::uint32_t>(start));
      for (; pos != list.end(); ++pos) {
        chosen_[depth] = *pos;
        if (!visit(chosen_)) return false;
      }
      return true;
    }
    for (std::size_t j = start; j + (w - depth) <= n; ++j) {
      chosen_[depth] = static_cast<std::uint32_t>(j);
      Block<W> next = sum;
      next ^= columns_[j];
      if (!descend(depth + 1, j + 1, next, w, visit)) return false;
    }
    return true;
  }

  std::vector<Block<W>> columns_;
  std::unordered_map<Block<W>, std::vector<std::uint32_t>, BlockHash<W>> index_;
  std::vector<std::uint32_t> chosen_;
};

template <std::size_t W>
std::size_t low_weight(const BitMatrix& parity_check) {
  ColumnSearch<W> search(parity_check);
  for (std::size_t w = 1; w <= kLowWeightMaxWeight; ++w)
    if (search.exists(w)) return w;
  throw BudgetExceeded("low-weight engine: minimum distance >= " + std::to_string(kLowWeightMaxWeight + 1) +
                       " (beyond the search ceiling)");
}

template <typename F>
decltype(auto) dispatch_words(std::size_t bits, F&& f) {
  const std::size_t words = std::max<std::size_t>(1, BitVector::word_count(bits));
  switch (words) {
    case 1:
      return f(std::integral_constant<std::size_t, 1>{});
    case 2:
      return f(std::integral_constant<std::size_t, 2>{});
    case 3:
      return f(std::integral_constant<std::size_t, 3>{});
    case 4:
      return f(std::integral_constant<std::size_t, 4>{});
    default:
      throw PreconditionError("distance engines support lengths up to " + std::to_string(kMaxWords * 64));
  }
}

template <std::size_t W>
void enumerate_weight(const LinearCode& c, std::size_t w, const std::function<bool(const BitVector&)>& visit) {
  std::vector<Block<W>> rows;
  for (const auto& r : c.generator().row_list()) rows.push_back(to_block<W>(r));
  const std::size_t k = rows.size();
  Block<W> word;
  const std::uint64_t steps = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < steps; ++i) {
    word ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
    if (word.weight() == w && !visit(from_block(word, c.length()))) return;
  }
}

}  // namespace

std::size_t min_distance(const LinearCode& c, DistanceOptions options) {
  if (c.dimension() == 0) throw PreconditionError("min_distance: zero-dimensional code has no nonzero codeword");
  DistanceEngine engine = options.engine;
  if (engine == DistanceEngine::automatic)
    engine = c.dimension() <= kFullEnumerationMaxDim ? DistanceEngine::full_enumeration : DistanceEngine::low_weight;

  if (engine == DistanceEngine::full_enumeration) {
    if (c.dimension() > 62) throw BudgetExceeded("full enumeration: dimension too large");
    const unsigned workers = resolve_workers(options.workers);
    return dispatch_words(c.length(), [&](auto w) { return full_enumeration<decltype(w)::value>(c, workers); });
  }
  const LinearCode d = dual(c);
  if (d.dimension() == 0) return 1;  // full space
  return dispatch_words(d.dimension(), [&](auto w) { return low_weight<decltype(w)::value>(d.generator()); });
}

std::size_t min_distance(const LinearCode& c, DistanceEngine engine) {
  return min_distance(c, DistanceOptions{engine, 0});
}

void visit_codewords_of_weight(const LinearCode& c, std::size_t w,
                               const std::function<bool(const BitVector&)>& visit) {
  if (w == 0 || w > c.length() || c.dimension() == 0) return;
  if (c.dimension() <= kFullEnumerationMaxDim) {
    dispatch_words(c.length(), [&](auto words) {
      enumerate_weight<decltype(words)::value>(c, w, visit);
      return 0;
    });
    return;
  }
  if (w > kLowWeightMaxWeight)
    throw BudgetExceeded("weight-" + std::to_string(w) + " enumeration infeasible: k = " +
                         std::to_string(c.dimension()) + " exceeds the enumeration cap and w exceeds " +
                         std::to_string(kLowWeightMaxWeight));
  const LinearCode d = dual(c);
  const std::size_t n = c.length();
  if (d.dimension() == 0) {
    // Full space: every weight-w vector; only reachable for tiny w.
    std::vector<std::size_t> idx(w);
    for (std::size_t i = 0; i < w; ++i) idx[i] = i;
    while (true) {
      BitVector v(n);
      for (auto i : idx) v.set(i);
      if (!visit(v)) return;
      std::size_t p = w;
      while (p > 0 && idx[p - 1] == n - w + p - 1) --p;
      if (p == 0) return;
      ++idx[p - 1];
      for (std::size_t q = p; q < w; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
  dispatch_words(d.dimension(), [&](auto words) {
    ColumnSearch<decltype(words)::value> search(d.generator());
    search.for_each(w, [&](const std::vector<std::uint32_t>& support) {
      BitVector v(n);
      for (auto i : support) v.set(i);
      return visit(v);
    });
    return 0;
  });
}

}  // namespace lcd
