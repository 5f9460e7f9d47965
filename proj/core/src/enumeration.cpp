#include "lcd/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "lcd/errors.hpp"

namespace lcd {

namespace {

using Word = std::uint64_t;

// GF(2) rank of small rows.
std::size_t word_rank(std::vector<Word> rows) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] == 0) continue;
    const Word pivot = rows[i] & (~rows[i] + 1);
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (rows[j] & pivot) rows[j] ^= rows[i];
    ++r;
  }
  return r;
}

class Walker {
 public:
  Walker(const SystematicWalk& walk, const std::function<bool(const std::vector<Word>&)>& visit)
      : w_(walk), width_(walk.n - walk.k), visit_(visit) {
    rows_.reserve(w_.k);
    sums_.reserve(std::size_t{1} << w_.k);
    sums_.push_back(0);
  }

  std::uint64_t run() {
    const Word full = width_ == 0 ? 0 : (width_ == 64 ? ~Word{0} : (Word{1} << width_) - 1);
    const Word tied = full & ~Word{1};  // bit p: columns at p and p - 1 still equal
    descend(full, tied);
    return visited_;
  }

 private:
  // Returns false once visit asked to stop.
  bool descend(Word upper, Word tied) {
    if (rows_.size() == w_.k) return finish();
    const std::size_t r = rows_.size();
    const Word top = w_.canonical ? upper : (width_ == 0 ? 0 : (Word{1} << width_) - 1);
    for (Word x = top + 1; x-- > 0;) {
      Word next_tied = tied;
      if (w_.canonical) {
        if (tied & ~x & (x << 1)) continue;
        next_tied &= ~(x ^ (x << 1));
      }
      if (!extend(x)) continue;
      rows_.push_back(x);
      const bool go_on = descend(x, next_tied);
      rows_.pop_back();
      sums_.resize(std::size_t{1} << r);
      if (!go_on) return false;
    }
    return true;
  }

  // Appends the codewords involving row x; fails if one is too light.
  bool extend(Word x) {
    const std::size_t half = sums_.size();
    if (w_.min_distance > 0) {
      for (std::size_t m = 0; m < half; ++m) {
        const std::size_t wt = static_cast<std::size_t>(std::popcount(m)) + 1 +
                               static_cast<std::size_t>(std::popcount(sums_[m] ^ x));
        if (wt < w_.min_distance) return false;
      }
    }
    for (std::size_t m = 0; m < half; ++m) sums_.push_back(sums_[m] ^ x);
    return true;
  }

  bool finish() {
    if (w_.lcd_only) {
      // Gram of [I | A] is I + A A^T.
      std::vector<Word> gram(w_.k, 0);
      for (std::size_t i = 0; i < w_.k; ++i)
        for (std::size_t j = 0; j < w_.k; ++j)
          if (((std::popcount(rows_[i] & rows_[j]) + (i == j ? 1 : 0)) & 1) != 0) gram[i] |= Word{1} << j;
      if (word_rank(gram) != w_.k) return true;
    }
    ++visited_;
    return visit_(rows_);
  }

  SystematicWalk w_;
  std::size_t width_;
  const std::function<bool(const std::vector<Word>&)>& visit_;
  std::vector<Word> rows_;
  std::vector<Word> sums_;
  std::uint64_t visited_ = 0;
};

}  // namespace

std::uint64_t walk_systematic(const SystematicWalk& walk,
                              const std::function<bool(const std::vector<std::uint64_t>&)>& visit) {
  if (walk.k == 0 || walk.k > walk.n) throw PreconditionError("walk_systematic: need 1 <= k <= n");
  if (walk.n > kEnumerationMaxLength)
    throw BudgetExceeded("walk_systematic: length above " + std::to_string(kEnumerationMaxLength));
  Walker w(walk, visit);
  return w.run();
}

LinearCode systematic_code(std::size_t n, std::size_t k, const std::vector<std::uint64_t>& a_rows) {
  if (a_rows.size() != k || k > n) throw PreconditionError("systematic_code: shape mismatch");
  const std::size_t width = n - k;
  BitMatrix g(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    g.set(i, i);
    for (std::size_t j = 0; j < width; ++j)
      if ((a_rows[i] >> (width - 1 - j)) & 1U) g.set(i, k + j);
  }
  return LinearCode(std::move(g));
}

std::size_t griesmer_max_distance(std::size_t n, std::size_t k) {
  if (k == 0 || k > n) throw PreconditionError("griesmer_max_distance: need 1 <= k <= n");
  std::size_t best = 0;
  for (std::size_t d = 1; d <= n; ++d) {
    std::size_t sum = 0;
    for (std::size_t i = 0; i < k && sum <= n; ++i) sum += i >= 32 ? 1 : (d + (std::size_t{1} << i) - 1) >> i;
    if (sum <= n) best = d;
  }
  return best;
}

std::size_t dlcd_exact(std::size_t n, std::size_t k, bool canonical) {
  for (std::size_t t = griesmer_max_distance(n, k); t >= 1; --t) {
    SystematicWalk walk{n, k, canonical, t, true};
    bool found = false;
    walk_systematic(walk, [&](const std::vector<std::uint64_t>&) {
      found = true;
      return false;
    });
    if (found) return t;
  }
  throw InternalError("dlcd_exact: no LCD code found for (" + std::to_string(n) + ", " + std::to_string(k) + ")");
}

std::size_t dlcd_dimension_one(std::size_t n) {
  if (n == 0) throw PreconditionError("dlcd_dimension_one: n must be positive");
  return n % 2 == 1 ? n : n - 1;
}

DlcdTable dlcd_table(std::size_t n_max, unsigned workers) {
  if (n_max == 0) throw PreconditionError("dlcd_table: n_max must be positive");
  if (n_max > kEnumerationMaxLength)
    throw BudgetExceeded("dlcd_table: n_max above " + std::to_string(kEnumerationMaxLength));
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());

  DlcdTable table;
  table.n_max = n_max;
  table.d.assign(n_max + 1, std::vector<std::size_t>(n_max + 1, 0));

  // Each dimension is one job; jobs are handed out in order to a fixed pool.
  std::vector<std::size_t> ks;
  for (std::size_t k = 1; k <= n_max; ++k) ks.push_back(k);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < ks.size(); i = next++) {
      const std::size_t k = ks[i];
      for (std::size_t n = k; n <= n_max; ++n) table.d[n][k] = dlcd_exact(n, k);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(workers, ks.size()); ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  return table;
}

std::vector<std::string> check_dlcd_table(const DlcdTable& t) {
  std::vector<std::string> bad;
  auto at = [](std::size_t n, std::size_t k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; };
  for (std::size_t n = 1; n <= t.n_max; ++n) {
    if (t.value(n, 1) != dlcd_dimension_one(n))
      bad.push_back("k = 1 closed form fails at " + at(n, 1) + ": " + std::to_string(t.value(n, 1)));
    for (std::size_t k = 1; k <= n; ++k) {
      if (n + 1 <= t.n_max) {
        const std::size_t a = t.value(n, k);
        const std::size_t b = t.value(n + 1, k);
        if (b < a) bad.push_back("not monotone in n at " + at(n, k));
        if (k >= 2 && b > a + 1) bad.push_back("step property fails at " + at(n, k));
      }
      if (k >= 2 && t.value(n, k - 1) < t.value(n, k)) bad.push_back("not antitone in k at " + at(n, k));
    }
  }
  return bad;
}

std::vector<LinearCode> lcd_oe_corpus(std::size_t n) {
  std::vector<LinearCode> out;
  for (std::size_t k = 2; k < n; ++k) {
    SystematicWalk walk{n, k, true, 3, true};
    walk_systematic(walk, [&](const std::vector<std::uint64_t>& rows) {
      LinearCode c = systematic_code(n, k, rows);
      if (contains_all_one(c)) out.push_back(std::move(c));
      return true;
    });
  }
  return out;
}

}  // namespace lcd
