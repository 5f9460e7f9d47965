#include "lcd/search.hpp"

#include <bit>
#include <random>
#include <vector>

#include "lcd/enumeration.hpp"
#include "lcd/errors.hpp"

namespace lcd {

namespace {

using Word = std::uint64_t;

constexpr std::size_t kGrayMaxDim = 24;

struct Score {
  std::size_t d = 0;
  std::uint64_t count = 0;  // codewords of weight d

  bool at_least(const Score& o) const { return d > o.d || (d == o.d && count <= o.count); }
  bool better(const Score& o) const { return d > o.d || (d == o.d && count < o.count); }
};

class Climber {
 public:
  Climber(std::size_t n, std::size_t k) : n_(n), k_(k), a_(k, 0) {}

  // Rows of [I | A], bit j = coordinate j.
  std::vector<Word> rows() const {
    std::vector<Word> out(k_);
    for (std::size_t i = 0; i < k_; ++i) out[i] = (Word{1} << i) | (a_[i] << k_);
    return out;
  }

  bool lcd() const {
    const auto r = rows();
    std::vector<Word> gram(k_, 0);
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < k_; ++j)
        if (std::popcount(r[i] & r[j]) & 1) gram[i] |= Word{1} << j;
    // Row reduction on k x k.
    std::size_t rank = 0;
    for (std::size_t i = 0; i < k_; ++i) {
      if (gram[i] == 0) continue;
      const Word pivot = gram[i] & (~gram[i] + 1);
      for (std::size_t j = i + 1; j < k_; ++j)
        if (gram[j] & pivot) gram[j] ^= gram[i];
      ++rank;
    }
    return rank == k_;
  }

  Score score() const {
    if (k_ <= kGrayMaxDim) {
      const auto r = rows();
      Score s{n_ + 1, 0};
      Word cur = 0;
      for (std::uint64_t step = 1; step < (std::uint64_t{1} << k_); ++step) {
        cur ^= r[static_cast<std::size_t>(std::countr_zero(step))];
        const auto w = static_cast<std::size_t>(std::popcount(cur));
        if (w < s.d) s = {w, 1};
        else if (w == s.d) ++s.count;
      }
      return s;
    }
    const LinearCode c = code();
    const std::size_t d = min_distance(c);
    return {d, codewords_of_weight(c, d).size()};
  }

  LinearCode code() const {
    BitMatrix g(k_, n_);
    const auto r = rows();
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if ((r[i] >> j) & 1U) g.set(i, j);
    return LinearCode(std::move(g));
  }

  void randomize(std::mt19937_64& rng) {
    const std::size_t r = n_ - k_;
    const Word mask = r == 64 ? ~Word{0} : (Word{1} << r) - 1;
    for (auto& x : a_) x = rng() & mask;
  }

  void flip(std::size_t i, std::size_t j) { a_[i] ^= Word{1} << j; }
  std::size_t redundancy() const { return n_ - k_; }

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<Word> a_;
};

}  // namespace

SearchResult search_lcd(std::size_t n, std::size_t k, std::size_t d_target, std::uint64_t seed,
                        const SearchBudget& budget) {
  if (k == 0 || k > n || n > 64) throw PreconditionError("search_lcd: need 1 <= k <= n <= 64");
  SearchResult result;
  if (d_target > griesmer_max_distance(n, k)) {
    result.impossible = true;
    return result;
  }

  std::mt19937_64 rng(seed);
  Climber climb(n, k);
  const auto start = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    return budget.time_limit && std::chrono::steady_clock::now() - start >= *budget.time_limit;
  };

  // [I_k | 0] is LCD and has d = 1.
  if (d_target <= 1 || n == k) {
    result.code = climb.code();
    result.best_distance = 1;
    return result;
  }

  while (result.evaluations < budget.evaluations && !out_of_time()) {
    // Fresh LCD starting point.
    do {
      climb.randomize(rng);
      ++result.evaluations;
    } while (!climb.lcd() && result.evaluations < budget.evaluations);
    if (!climb.lcd()) break;
    Score cur = climb.score();
    Score best = cur;
    std::uint64_t stale = 0;
    while (stale < budget.patience && result.evaluations < budget.evaluations) {
      if (cur.d > result.best_distance) result.best_distance = cur.d;
      if (cur.d >= d_target) {
        result.code = climb.code();
        return result;
      }
      if ((result.evaluations & 0xff) == 0 && out_of_time()) return result;
      const std::size_t i = rng() % k;
      const std::size_t j = rng() % climb.redundancy();
      climb.flip(i, j);
      ++result.evaluations;
      ++stale;
      if (!climb.lcd()) {
        climb.flip(i, j);
        continue;
      }
      const Score next = climb.score();
      if (!next.at_least(cur)) {
        climb.flip(i, j);
        continue;
      }
      cur = next;
      if (cur.better(best)) {
        best = cur;
        stale = 0;
      }
    }
    ++result.restarts;
  }
  return result;
}

}  // namespace lcd
