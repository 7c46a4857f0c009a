#include "phca/alt_tensor.hpp"

namespace phca {

std::optional<std::pair<IndexTuple, int>> merge_tuples(const IndexTuple& a, const IndexTuple& b) {
  IndexTuple out;
  int i = 0, j = 0, inversions = 0;
  while (i < a.len && j < b.len) {
    if (a.idx[i] == b.idx[j]) return std::nullopt;
    if (a.idx[i] < b.idx[j]) {
      out.idx[out.len++] = a.idx[i++];
    } else {
      // b-element passes over the remaining a-elements
      inversions += a.len - i;
      out.idx[out.len++] = b.idx[j++];
    }
  }
  while (i < a.len) out.idx[out.len++] = a.idx[i++];
  while (j < b.len) out.idx[out.len++] = b.idx[j++];
  return std::make_pair(out, (inversions % 2 == 0) ? 1 : -1);
}

std::vector<IndexTuple> all_tuples(int nidx, int length) {
  std::vector<IndexTuple> out;
  if (length < 0 || length > nidx) return out;
  IndexTuple t;
  t.len = (std::uint8_t)length;
  std::vector<int> cur(length);
  for (int k = 0; k < length; ++k) cur[k] = k;
  while (true) {
    for (int k = 0; k < length; ++k) t.idx[k] = (std::uint8_t)cur[k];
    out.push_back(t);
    if (length == 0) break;
    int k = length - 1;
    while (k >= 0 && cur[k] == nidx - length + k) --k;
    if (k < 0) break;
    ++cur[k];
    for (int m = k + 1; m < length; ++m) cur[m] = cur[m - 1] + 1;
  }
  return out;
}

}  // namespace phca
