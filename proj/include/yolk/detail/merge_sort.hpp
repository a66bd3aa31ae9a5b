#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace yolk::detail {

// Bottom-up merge sort. Unlike std::sort it stays in bounds even if `less`
// is not a strict weak order, which matters when a comparator built from
// floating-point geometry is inconsistent on near-degenerate inputs.
template <class T, class Less>
void merge_sort(std::vector<T>& items, Less less) {
  const std::size_t n = items.size();
  if (n < 2) return;
  std::vector<T> buffer(n);
  std::vector<T>* src = &items;
  std::vector<T>* dst = &buffer;
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo < n; lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, n);
      const std::size_t hi = std::min(lo + 2 * width, n);
      std::size_t a = lo;
      std::size_t b = mid;
      std::size_t out = lo;
      while (a < mid && b < hi) (*dst)[out++] = less((*src)[b], (*src)[a]) ? (*src)[b++] : (*src)[a++];
      while (a < mid) (*dst)[out++] = (*src)[a++];
      while (b < hi) (*dst)[out++] = (*src)[b++];
    }
    std::swap(src, dst);
  }
  if (src != &items) items.swap(*src);
}

}  // namespace yolk::detail
