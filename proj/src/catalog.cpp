#include "rcchoice/catalog.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "rcchoice/error.hpp"

namespace rcchoice {

namespace {

constexpr std::size_t kMaxCatalogDomain = 8;

// Subsets of {0..size-1} of the given arity in lexicographic order, with a
// bitmask -> index lookup.
struct SubsetIndex {
  std::vector<std::vector<Atom>> subsets;
  std::vector<std::int32_t> by_mask;

  SubsetIndex(int arity, std::size_t size) : by_mask(std::size_t{1} << size, -1) {
    const auto k = static_cast<std::size_t>(arity);
    if (k > size) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      std::vector<Atom> s(idx.begin(), idx.end());
      by_mask[mask_of(s)] = static_cast<std::int32_t>(subsets.size());
      subsets.push_back(std::move(s));
    } while (next_combination(idx, size));
  }

  static std::size_t mask_of(std::span<const Atom> s) {
    std::size_t mask = 0;
    for (Atom a : s) mask |= std::size_t{1} << a;
    return mask;
  }

  std::size_t index_of(std::span<const Atom> s) const { return static_cast<std::size_t>(by_mask[mask_of(s)]); }
};

void check_domain(std::size_t size) {
  if (size > kMaxCatalogDomain) {
    throw Error(ErrorKind::BoundExceeded, "catalog domains are limited to " + std::to_string(kMaxCatalogDomain) + " atoms");
  }
}

std::vector<Atom> relabeled_table(const SubsetIndex& index, const std::vector<Atom>& table,
                                  const std::vector<Atom>& rho) {
  std::vector<Atom> out(table.size());
  std::vector<Atom> image;
  for (std::size_t i = 0; i < index.subsets.size(); ++i) {
    image.clear();
    for (Atom a : index.subsets[i]) image.push_back(rho[static_cast<std::size_t>(a)]);
    out[index.index_of(image)] = rho[static_cast<std::size_t>(table[i])];
  }
  return out;
}

SelectorModel model_from_table(int arity, std::size_t size, const SubsetIndex& index, const std::vector<Atom>& table) {
  SelectorModel model = SelectorModel::on_initial_segment(arity, size);
  for (std::size_t i = 0; i < table.size(); ++i) model.assign(index.subsets[i], table[i]);
  return model;
}

}  // namespace

std::vector<Atom> selector_table(const SelectorModel& model) {
  std::vector<Atom> table;
  table.reserve(model.subset_count());
  model.for_each_subset([&](std::span<const Atom> subset, std::optional<Atom> chosen) {
    if (!chosen) throw Error(ErrorKind::InvalidArgument, "subset " + format_atoms(subset) + " has no selection");
    table.push_back(*chosen);
  });
  return table;
}

std::vector<Atom> canonical_table(const SelectorModel& model) {
  check_domain(model.size());
  const auto domain = model.domain();
  const SubsetIndex index(model.arity(), model.size());
  // Table over positions 0..size-1.
  std::vector<Atom> table;
  for (Atom a : selector_table(model)) {
    table.push_back(static_cast<Atom>(std::lower_bound(domain.begin(), domain.end(), a) - domain.begin()));
  }
  std::vector<Atom> rho(model.size());
  std::iota(rho.begin(), rho.end(), 0);
  std::vector<Atom> best = table;
  do {
    best = std::min(best, relabeled_table(index, table, rho));
  } while (std::next_permutation(rho.begin(), rho.end()));
  return best;
}

std::vector<SelectorModel> catalog_models(int arity, std::size_t size) {
  if (arity < 1) throw Error(ErrorKind::InvalidArgument, "arity must be >= 1");
  check_domain(size);
  const SubsetIndex index(arity, size);
  const std::size_t s = index.subsets.size();
  if (s > kMaxCatalogSubsets) {
    throw Error(ErrorKind::BoundExceeded, std::to_string(s) + " subsets exceed the catalog guard of " +
                                              std::to_string(kMaxCatalogSubsets));
  }
  const auto base = static_cast<std::uint64_t>(arity);
  std::uint64_t selectors = 1;
  for (std::size_t i = 0; i < s; ++i) {
    selectors *= base;
    if (selectors > kMaxCatalogSelectors) throw Error(ErrorKind::BoundExceeded, "too many selectors to enumerate");
  }

  // A selector is coded by the within-subset index of each choice, base arity.
  auto encode = [&](const std::vector<Atom>& table) {
    std::uint64_t code = 0;
    for (std::size_t i = s; i-- > 0;) {
      const auto& subset = index.subsets[i];
      const auto pos = static_cast<std::uint64_t>(std::find(subset.begin(), subset.end(), table[i]) - subset.begin());
      code = code * base + pos;
    }
    return code;
  };
  auto decode = [&](std::uint64_t code) {
    std::vector<Atom> table(s);
    for (std::size_t i = 0; i < s; ++i) {
      table[i] = index.subsets[i][code % base];
      code /= base;
    }
    return table;
  };

  std::vector<bool> seen(selectors, false);
  std::set<std::vector<Atom>> representatives;
  std::vector<Atom> rho(size);
  for (std::uint64_t code = 0; code < selectors; ++code) {
    if (seen[code]) continue;
    const auto table = decode(code);
    std::vector<Atom> best = table;
    std::iota(rho.begin(), rho.end(), 0);
    do {
      auto image = relabeled_table(index, table, rho);
      seen[encode(image)] = true;
      best = std::min(best, image);
    } while (std::next_permutation(rho.begin(), rho.end()));
    representatives.insert(std::move(best));
  }

  std::vector<SelectorModel> out;
  for (const auto& table : representatives) out.push_back(model_from_table(arity, size, index, table));
  return out;
}

std::uint64_t count_classes_burnside(int arity, std::size_t size) {
  if (arity < 1) throw Error(ErrorKind::InvalidArgument, "arity must be >= 1");
  check_domain(size);
  const SubsetIndex index(arity, size);
  const std::size_t s = index.subsets.size();
  std::vector<Atom> rho(size);
  std::iota(rho.begin(), rho.end(), 0);
  std::uint64_t fixed_total = 0, group_order = 0;
  std::vector<Atom> image;
  do {
    ++group_order;
    std::vector<std::size_t> next(s);
    for (std::size_t i = 0; i < s; ++i) {
      image.clear();
      for (Atom a : index.subsets[i]) image.push_back(rho[static_cast<std::size_t>(a)]);
      next[i] = index.index_of(image);
    }
    // Each rho-cycle on subsets is determined by the choice at one subset P,
    // which must be fixed by rho^length.
    std::uint64_t fixed = 1;
    std::vector<bool> done(s, false);
    for (std::size_t i = 0; i < s && fixed != 0; ++i) {
      if (done[i]) continue;
      std::size_t length = 0;
      for (std::size_t j = i; !done[j]; j = next[j]) {
        done[j] = true;
        ++length;
      }
      std::uint64_t choices = 0;
      for (Atom x : index.subsets[i]) {
        Atom y = x;
        for (std::size_t t = 0; t < length; ++t) y = rho[static_cast<std::size_t>(y)];
        if (y == x) ++choices;
      }
      fixed *= choices;
    }
    fixed_total += fixed;
  } while (std::next_permutation(rho.begin(), rho.end()));
  return fixed_total / group_order;
}

std::optional<std::vector<Atom>> find_embedding(const SelectorModel& small, const SelectorModel& big) {
  if (small.arity() != big.arity() || small.size() > big.size()) return std::nullopt;
  const auto src = small.domain();
  const auto dst = big.domain();
  const auto k = static_cast<std::size_t>(small.arity());
  std::vector<Atom> images(src.size());
  std::vector<bool> used(dst.size(), false);

  // Checks every subset of the first `count` source atoms that contains the
  // last one.
  auto consistent = [&](std::size_t count) {
    if (count < k) return true;
    std::vector<std::size_t> idx(k - 1);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Atom> subset(k), mapped(k);
    do {
      for (std::size_t i = 0; i + 1 < k; ++i) subset[i] = src[idx[i]];
      subset[k - 1] = src[count - 1];
      for (std::size_t i = 0; i < k; ++i) {
        mapped[i] = images[static_cast<std::size_t>(std::lower_bound(src.begin(), src.end(), subset[i]) - src.begin())];
      }
      const auto chosen = small.select(subset);
      const auto target = big.select(mapped);
      if (!chosen || !target) return false;
      const auto pos = static_cast<std::size_t>(std::lower_bound(src.begin(), src.end(), *chosen) - src.begin());
      if (images[pos] != *target) return false;
    } while (k > 1 && next_combination(idx, count - 1));
    return true;
  };

  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == src.size()) return true;
    for (std::size_t j = 0; j < dst.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      images[i] = dst[j];
      if (consistent(i + 1) && extend(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return images;
}

bool isomorphic(const SelectorModel& a, const SelectorModel& b) {
  return a.arity() == b.arity() && a.size() == b.size() && find_embedding(a, b).has_value();
}

}  // namespace rcchoice
