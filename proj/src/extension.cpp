#include "mfree/extension.hpp"

#include <algorithm>

#include "mfree/errors.hpp"

namespace mfree {

Hyperplane generic_hyperplane(const Arrangement& current) {
  const auto flats = dim1_flats(current);
  for (std::int64_t t = 0;; ++t) {
    std::vector<std::int64_t> normal{1, t};
    if (current.dim() == 3) normal.push_back(t * t);
    Hyperplane h(normal);
    if (current.contains(h)) continue;
    bool avoids = true;
    for (const auto& x : flats)
      if (h.eval(x.direction) == 0) {
        avoids = false;
        break;
      }
    if (avoids) return h;
  }
}

bool satisfies_condition_a(const Arrangement& base, std::span<const Hyperplane> added) {
  Arrangement current = base;
  for (const auto& h : added) {
    for (const auto& x : dim1_flats(current))
      if (h.eval(x.direction) == 0) return false;
    current = current.with(h);
  }
  return true;
}

ExtendedArrangement extend(const Arrangement& a, int m, const std::optional<std::vector<Hyperplane>>& given) {
  const int n = static_cast<int>(a.size());
  if (m < n - 2)
    throw BadM("m >= n - 2 is required (n = " + std::to_string(n) + ", m = " + std::to_string(m) + ")");
  const std::size_t needed = static_cast<std::size_t>(m + 2 - n);
  ExtendedArrangement e{a, {}, a, m, true};
  if (!given) {
    while (e.added.size() < needed) {
      Hyperplane h = generic_hyperplane(e.full);
      e.added.push_back(h);
      e.full = e.full.with(h);
    }
    return e;
  }
  if (given->size() != needed)
    throw BadM("extension must supply m + 2 - n = " + std::to_string(needed) + " hyperplanes, got " +
               std::to_string(given->size()));
  for (const auto& h : *given) {
    e.added.push_back(h);
    e.full = e.full.with(h);  // throws Duplicate
  }
  e.condition_a = satisfies_condition_a(a, e.added);
  return e;
}

std::vector<FlatProfile> flat_profiles(const ExtendedArrangement& e) {
  std::vector<FlatProfile> out;
  for (auto& x : dim1_flats(e.full)) {
    FlatProfile prof;
    prof.base_local = localization_indices(e.base, x.direction);
    prof.i_x = static_cast<int>(x.local_indices.size()) - 2;
    prof.p_tilde = Poly::constant(e.full.dim(), 1);
    for (std::size_t i = 0; i < e.full.size(); ++i)
      if (e.full[i].eval(x.direction) != 0) prof.p_tilde *= e.full[i].poly();
    prof.p = Poly::constant(e.base.dim(), 1);
    for (std::size_t i = 0; i < e.base.size(); ++i)
      if (e.base[i].eval(x.direction) != 0) prof.p *= e.base[i].poly();
    prof.flat = std::move(x);
    out.push_back(std::move(prof));
  }
  // Flats of the base arrangement first, then the ones created by the additions.
  std::stable_partition(out.begin(), out.end(), [](const FlatProfile& p) { return p.base_local.size() >= 2; });
  return out;
}

}  // namespace mfree
