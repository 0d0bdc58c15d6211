#include "rcchoice/fraisse.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "rcchoice/catalog.hpp"
#include "rcchoice/error.hpp"

namespace rcchoice {

namespace {

// Visits every arity-subset of `atoms` (given sorted).
template <typename Visit>
void for_each_subset_of(std::span<const Atom> atoms, std::size_t arity, Visit&& visit) {
  if (arity > atoms.size() || arity == 0) return;
  std::vector<std::size_t> idx(arity);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Atom> subset(arity);
  do {
    for (std::size_t i = 0; i < arity; ++i) subset[i] = atoms[idx[i]];
    visit(std::span<const Atom>(subset));
  } while (next_combination(idx, atoms.size()));
}

// Grounds of size `size` among `atoms`, lexicographic.
std::vector<std::vector<Atom>> grounds_of_size(std::span<const Atom> atoms, std::size_t size) {
  std::vector<std::vector<Atom>> out;
  if (size == 0) {
    out.emplace_back();
    return out;
  }
  if (size > atoms.size()) return out;
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    std::vector<Atom> g(size);
    for (std::size_t i = 0; i < size; ++i) g[i] = atoms[idx[i]];
    out.push_back(std::move(g));
  } while (next_combination(idx, atoms.size()));
  return out;
}

Atom image_of(std::span<const Atom> ground, std::span<const Atom> images, Atom a) {
  return images[static_cast<std::size_t>(std::lower_bound(ground.begin(), ground.end(), a) - ground.begin())];
}

/// Selector-preserving injections model|ground -> target, lexicographic in
/// the image tuple.
std::vector<std::vector<Atom>> embeddings(const SelectorModel& model, std::span<const Atom> ground,
                                          const SelectorModel& target) {
  std::vector<std::vector<Atom>> out;
  const auto dst = target.domain();
  const auto k = static_cast<std::size_t>(model.arity());
  std::vector<Atom> images(ground.size());
  std::vector<bool> used(dst.size(), false);
  std::vector<Atom> mapped(k);

  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == ground.size()) {
      bool ok = true;
      for_each_subset_of(ground, k, [&](std::span<const Atom> q) {
        if (!ok) return;
        for (std::size_t t = 0; t < k; ++t) mapped[t] = image_of(ground, images, q[t]);
        ok = image_of(ground, images, *model.select(q)) == *target.select(mapped);
      });
      if (ok) out.push_back(images);
      return;
    }
    for (std::size_t j = 0; j < dst.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      images[i] = dst[j];
      extend(i + 1);
      used[j] = false;
    }
  };
  extend(0);
  return out;
}

/// The target atom outside the image of the ground.
Atom missing_point(const SelectorModel& target, std::span<const Atom> images) {
  for (Atom r : target.domain()) {
    if (std::find(images.begin(), images.end(), r) == images.end()) return r;
  }
  throw Error(ErrorKind::Internal, "embedding is onto; no room for a witness");
}

/// ground + {a} realises target, with ground mapped by images and a by the
/// missing point. Only subsets through a need checking.
bool realises(const SelectorModel& model, std::span<const Atom> ground, Atom a, const SelectorModel& target,
              std::span<const Atom> images) {
  const auto k = static_cast<std::size_t>(model.arity());
  const Atom point = missing_point(target, images);
  auto phi = [&](Atom x) { return x == a ? point : image_of(ground, images, x); };
  bool ok = true;
  std::vector<Atom> subset(k), mapped(k);
  auto check = [&](std::span<const Atom> rest) {
    if (!ok) return;
    std::copy(rest.begin(), rest.end(), subset.begin());
    subset[k - 1] = a;
    for (std::size_t t = 0; t < k; ++t) mapped[t] = phi(subset[t]);
    ok = phi(*model.select(subset)) == *target.select(mapped);
  };
  if (k == 1) {
    check({});
  } else {
    for_each_subset_of(ground, k - 1, check);
  }
  return ok;
}

void require_initial_segment(const SelectorModel& model) {
  const auto d = model.domain();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] != static_cast<Atom>(i)) throw Error(ErrorKind::InvalidArgument, "stage domain is not an initial segment");
  }
  if (!is_valid_model(model)) throw Error(ErrorKind::InvalidArgument, "stage model is not total");
}

struct Witness {
  std::vector<Atom> ground;
  const SelectorModel* target;
  std::vector<Atom> images;
};

}  // namespace

SelectorModel build_fraisse_stage(int arity, const SelectorModel& prev, std::size_t level, const FraisseCaps& caps) {
  if (prev.arity() != arity) throw Error(ErrorKind::InvalidArgument, "stage arity mismatch");
  require_initial_segment(prev);
  const std::size_t old_size = prev.size();

  if (level + 1 > caps.max_extension_size) {
    throw Error(ErrorKind::CapExceeded, "level " + std::to_string(level) + " needs catalogued models of size " +
                                            std::to_string(level + 1) + " > cap " +
                                            std::to_string(caps.max_extension_size));
  }
  std::vector<std::vector<SelectorModel>> catalog(level + 2);
  for (std::size_t t = 1; t <= level + 1; ++t) catalog[t] = catalog_models(arity, t);

  std::vector<Witness> plan;
  for (std::size_t s = 0; s <= std::min(level, old_size); ++s) {
    for (auto& ground : grounds_of_size(prev.domain(), s)) {
      for (const auto& target : catalog[s + 1]) {
        for (auto& images : embeddings(prev, ground, target)) {
          plan.push_back(Witness{ground, &target, std::move(images)});
          if (old_size + plan.size() > caps.max_atoms) {
            throw Error(ErrorKind::CapExceeded, "stage " + std::to_string(level + 1) + " planned " +
                                                    std::to_string(plan.size()) + " witnesses on top of " +
                                                    std::to_string(old_size) + " atoms; cap is " +
                                                    std::to_string(caps.max_atoms) + " atoms (stopped at ground " +
                                                    format_atoms(ground) + ")");
          }
        }
      }
    }
  }

  SelectorModel next = SelectorModel::on_initial_segment(arity, old_size + plan.size());
  prev.for_each_subset([&](std::span<const Atom> subset, std::optional<Atom> chosen) { next.assign(subset, *chosen); });

  const auto k = static_cast<std::size_t>(arity);
  std::vector<Atom> subset(k), mapped(k);
  for (std::size_t l = 0; l < plan.size(); ++l) {
    const auto& w = plan[l];
    const Atom a = static_cast<Atom>(old_size + l);
    const Atom point = missing_point(*w.target, w.images);
    // Inverse of phi on the target's atoms.
    std::vector<Atom> back(w.target->size());
    for (std::size_t i = 0; i < w.ground.size(); ++i) back[static_cast<std::size_t>(w.images[i])] = w.ground[i];
    back[static_cast<std::size_t>(point)] = a;
    auto assign_through = [&](std::span<const Atom> rest) {
      std::copy(rest.begin(), rest.end(), subset.begin());
      subset[k - 1] = a;
      for (std::size_t t = 0; t < k; ++t) {
        mapped[t] = subset[t] == a ? point : image_of(w.ground, w.images, subset[t]);
      }
      next.assign(subset, back[static_cast<std::size_t>(*w.target->select(mapped))]);
    };
    if (k == 1) {
      assign_through({});
    } else {
      for_each_subset_of(w.ground, k - 1, assign_through);
    }
  }

  // Everything else selects its largest atom.
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k <= next.size()) {
    do {
      for (std::size_t i = 0; i < k; ++i) subset[i] = static_cast<Atom>(idx[i]);
      if (!next.is_assigned(subset)) next.assign(subset, subset.back());
    } while (next_combination(idx, next.size()));
  }
  return next;
}

std::vector<SelectorModel> build_fraisse_stages(int arity, std::size_t stages, const FraisseCaps& caps) {
  std::vector<SelectorModel> out{SelectorModel::on_initial_segment(arity, 0)};
  for (std::size_t level = 0; level < stages; ++level) out.push_back(build_fraisse_stage(arity, out.back(), level, caps));
  return out;
}

ExtensionReport check_one_point_extension(const SelectorModel& model, std::size_t k,
                                          std::optional<std::size_t> base_size) {
  ExtensionReport report;
  const auto domain = model.domain();
  // The empty structure has no substructure to extend.
  if (domain.empty()) return report;
  const std::size_t base = std::min(base_size.value_or(domain.size()), domain.size());
  const auto base_atoms = domain.first(base);
  for (std::size_t s = 0; s < k && s <= base; ++s) {
    const auto catalog = catalog_models(model.arity(), s + 1);
    for (const auto& ground : grounds_of_size(base_atoms, s)) {
      for (std::size_t r = 0; r < catalog.size(); ++r) {
        for (const auto& images : embeddings(model, ground, catalog[r])) {
          ++report.checked;
          const bool found = std::any_of(domain.begin(), domain.end(), [&](Atom a) {
            return !std::binary_search(ground.begin(), ground.end(), a) && realises(model, ground, a, catalog[r], images);
          });
          if (!found) {
            report.complete = false;
            report.missing.push_back(MissingExtension{ground, r, images});
          }
        }
      }
    }
  }
  return report;
}

bool embeds_all_small_models(const SelectorModel& model, std::size_t max_size) {
  for (std::size_t t = 1; t <= max_size; ++t) {
    for (const auto& r : catalog_models(model.arity(), t)) {
      if (!find_embedding(r, model)) return false;
    }
  }
  return true;
}

}  // namespace rcchoice
