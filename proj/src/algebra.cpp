#include <algorithm>
#include <string>

#include "soft7/octonion.hpp"

namespace soft7 {

const std::array<Triple, 35>& canonical_triples() {
  static const std::array<Triple, 35> triples = [] {
    std::array<Triple, 35> t{};
    std::size_t n = 0;
    for (int i = 1; i <= 7; ++i)
      for (int j = i + 1; j <= 7; ++j)
        for (int k = j + 1; k <= 7; ++k) t[n++] = {i, j, k};
    return t;
  }();
  return triples;
}

namespace {

std::optional<CanonicalTriple> sort_triple(int i, int j, int k) {
  if (i == 0 || j == 0 || k == 0 || i == j || j == k || i == k) return std::nullopt;

  int a[3] = {i, j, k};
  int sign = 1;
  // three element bubble sort, one sign flip per swap
  for (int pass = 0; pass < 2; ++pass)
    for (int p = 0; p < 2 - pass; ++p)
      if (a[p] > a[p + 1]) {
        std::swap(a[p], a[p + 1]);
        sign = -sign;
      }

  const auto& t = canonical_triples();
  auto it = std::find(t.begin(), t.end(), Triple{a[0], a[1], a[2]});
  return CanonicalTriple{static_cast<int>(it - t.begin()), sign};
}

}  // namespace

std::optional<CanonicalTriple> canonicalize(int i, int j, int k) {
  for (int x : {i, j, k})
    if (x < 0 || x > 7) throw IndexError("index " + std::to_string(x) + " out of range 0..7");

  using Lookup = std::array<std::optional<CanonicalTriple>, 512>;
  static const Lookup lookup = [] {
    Lookup l;
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b)
        for (int c = 0; c < 8; ++c) l[static_cast<std::size_t>(64 * a + 8 * b + c)] = sort_triple(a, b, c);
    return l;
  }();
  return lookup[static_cast<std::size_t>(64 * i + 8 * j + k)];
}

const std::array<Triple, 7>& StructureConstants::cycles() {
  static const std::array<Triple, 7> c = {{
      {1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7}, {1, 7, 6}, {2, 5, 7}, {3, 6, 5},
  }};
  return c;
}

StructureConstants::StructureConstants() {
  for (const auto& c : cycles()) {
    auto ct = canonicalize(c.i, c.j, c.k);
    canonical_[static_cast<std::size_t>(ct->index)] = ct->sign;
  }
}

int StructureConstants::operator()(int i, int j, int k) const {
  auto ct = canonicalize(i, j, k);
  if (!ct) return 0;
  return ct->sign * canonical_[static_cast<std::size_t>(ct->index)];
}

const StructureConstants& structure_constants() {
  static const StructureConstants f;
  return f;
}

}  // namespace soft7
