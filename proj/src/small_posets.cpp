#include "aclat/small_posets.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "aclat/error.hpp"

namespace aclat {

namespace {

std::vector<bool> code_under(const Poset& p, const std::vector<ElementId>& perm) {
  const std::size_t n = p.size();
  std::vector<bool> code(n * n);
  for (ElementId i = 0; i < n; ++i)
    for (ElementId j = 0; j < n; ++j) code[perm[i] * n + perm[j]] = p.less(i, j);
  return code;
}

}  // namespace

std::vector<bool> canonical_code(const Poset& p) {
  if (p.size() > 9) throw Error(ErrorKind::CapExceeded, "canonical codes are brute force; at most 9 elements");
  std::vector<ElementId> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best = code_under(p, perm);
  while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, code_under(p, perm));
  return best;
}

std::vector<Poset> posets_up_to_isomorphism(std::size_t n) {
  if (n > 6) throw Error(ErrorKind::CapExceeded, "poset enumeration is brute force; at most 6 elements");
  std::vector<OrderedPair> slots;
  for (ElementId i = 0; i < n; ++i)
    for (ElementId j = i + 1; j < n; ++j) slots.emplace_back(i, j);

  std::vector<std::string> labels;
  for (ElementId i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));

  std::set<std::vector<bool>> seen;
  std::vector<Poset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Relation r(n, std::vector<bool>(n));
    for (ElementId i = 0; i < n; ++i) r[i][i] = true;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1U) r[slots[s].first][slots[s].second] = true;
    bool transitive = true;
    for (ElementId i = 0; i < n && transitive; ++i)
      for (ElementId j = 0; j < n && transitive; ++j)
        for (ElementId k = 0; k < n && transitive; ++k) transitive = !(r[i][j] && r[j][k]) || r[i][k];
    if (!transitive) continue;
    Poset p = validate_poset(labels, r);
    if (seen.insert(canonical_code(p)).second) out.push_back(std::move(p));
  }
  return out;
}

std::optional<std::vector<ElementId>> find_order_isomorphism(const Poset& p, const Poset& q) {
  const std::size_t n = p.size();
  if (q.size() != n) return std::nullopt;
  auto profile = [](const Poset& x, ElementId i) {
    std::size_t below = 0, above = 0;
    for (ElementId j = 0; j < x.size(); ++j) {
      below += x.leq(j, i) ? 1 : 0;
      above += x.leq(i, j) ? 1 : 0;
    }
    return std::pair{below, above};
  };
  std::vector<ElementId> image(n);
  std::vector<bool> used(n);
  auto assign = [&](auto&& self, ElementId i) -> bool {
    if (i == n) return true;
    for (ElementId c = 0; c < n; ++c) {
      if (used[c] || profile(p, i) != profile(q, c)) continue;
      bool ok = true;
      for (ElementId k = 0; k < i && ok; ++k)
        ok = p.leq(k, i) == q.leq(image[k], c) && p.leq(i, k) == q.leq(c, image[k]);
      if (!ok) continue;
      image[i] = c;
      used[c] = true;
      if (self(self, i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  if (!assign(assign, 0)) return std::nullopt;
  return image;
}

}  // namespace aclat
