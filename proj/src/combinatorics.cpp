#include "wlab/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <stdexcept>

namespace wlab {

long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int count_between(Mask m, int a, int b) {
  if (a > b) std::swap(a, b);
  if (b - a <= 1) return 0;
  Mask window = ((Mask{1} << b) - 1) & ~((Mask{1} << (a + 1)) - 1);
  return popcount(m & window);
}

int merge_sign(Mask a, Mask b) {
  // Count pairs (x in a, y in b) with x > y.
  int inversions = 0;
  for (Mask rest = a; rest; rest &= rest - 1) {
    int x = __builtin_ctz(rest);
    inversions += count_below(b, x);
  }
  return (inversions & 1) ? -1 : 1;
}

MultiIndex::MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1 || entries_[i] > kMaxDim)
      throw std::invalid_argument("multi-index entry out of range: " + std::to_string(entries_[i]));
    if (i > 0 && entries_[i] <= entries_[i - 1])
      throw std::invalid_argument("multi-index must be strictly increasing: " + str());
  }
}

MultiIndex MultiIndex::from_mask(Mask m) {
  std::vector<int> e;
  for (int i = 0; i < kMaxDim; ++i)
    if (m & (Mask{1} << i)) e.push_back(i + 1);
  return MultiIndex(std::move(e));
}

Mask MultiIndex::mask() const {
  Mask m = 0;
  for (int e : entries_) m |= Mask{1} << (e - 1);
  return m;
}

void MultiIndex::check_bound(int n) const {
  if (!entries_.empty() && entries_.back() > n)
    throw std::invalid_argument("multi-index " + str() + " exceeds dimension " + std::to_string(n));
}

std::string MultiIndex::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

namespace {

void enumerate(int n, int k, int start, Mask cur, std::vector<Mask>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n - k; ++i) enumerate(n, k - 1, i + 1, cur | (Mask{1} << i), out);
}

}  // namespace

SubsetBasis::SubsetBasis(int n, int k) : n_(n), k_(k), rank_(std::size_t{1} << n, -1) {
  if (n < 0 || n > kMaxDim || k < 0 || k > n)
    throw std::invalid_argument("subset basis out of range");
  enumerate(n, k, 0, 0, masks_);
  for (int r = 0; r < size(); ++r) rank_[masks_[r]] = r;
}

const SubsetBasis& subset_basis(int n, int k) {
  static std::mutex mu;
  static std::array<std::array<std::atomic<const SubsetBasis*>, kMaxDim + 1>, kMaxDim + 1> cache{};
  if (n < 0 || n > kMaxDim || k < 0 || k > n)
    throw std::invalid_argument("subset basis out of range");
  auto& slot = cache[n][k];
  if (const SubsetBasis* b = slot.load(std::memory_order_acquire)) return *b;
  std::lock_guard<std::mutex> lock(mu);
  if (const SubsetBasis* b = slot.load(std::memory_order_acquire)) return *b;
  // Intentionally leaked: tables live for the whole process.
  const SubsetBasis* b = new SubsetBasis(n, k);
  slot.store(b, std::memory_order_release);
  return *b;
}

}  // namespace wlab
