#include "rcchoice/selector_model.hpp"

#include <algorithm>
#include <sstream>

#include "rcchoice/error.hpp"

namespace rcchoice {

bool next_combination(std::vector<std::size_t>& indices, std::size_t n) {
  const std::size_t k = indices.size();
  for (std::size_t i = k; i-- > 0;) {
    if (indices[i] < n - k + i) {
      ++indices[i];
      for (std::size_t j = i + 1; j < k; ++j) indices[j] = indices[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::string format_atoms(std::span<const Atom> atoms) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < atoms.size(); ++i) out << (i ? "," : "") << atoms[i];
  out << '}';
  return out.str();
}

SelectorModel::SelectorModel(int arity, std::vector<Atom> domain) : arity_(arity), domain_(std::move(domain)) {
  if (arity < 1) throw Error(ErrorKind::InvalidArgument, "selector arity must be >= 1");
  std::sort(domain_.begin(), domain_.end());
  if (std::adjacent_find(domain_.begin(), domain_.end()) != domain_.end()) {
    throw Error(ErrorKind::InvalidArgument, "duplicate atom in domain");
  }
  const std::size_t n = domain_.size();
  const auto k = static_cast<std::size_t>(arity);
  binomial_.assign(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    binomial_[i][0] = 1;
    for (std::size_t j = 1; j <= std::min(i, k); ++j) {
      // Saturate; any term used by rank_of is below subset_count().
      const std::uint64_t v = binomial_[i - 1][j - 1] + (j <= i - 1 ? binomial_[i - 1][j] : 0);
      binomial_[i][j] = std::min(v, kMaxSubsets + 1);
    }
  }
  const std::uint64_t count = k <= n ? binomial_[n][k] : 0;
  if (count > kMaxSubsets) throw Error(ErrorKind::BoundExceeded, "too many subsets for a selector model");
  selection_.assign(count, -1);
}

SelectorModel SelectorModel::on_initial_segment(int arity, std::size_t size) {
  std::vector<Atom> atoms(size);
  for (std::size_t i = 0; i < size; ++i) atoms[i] = static_cast<Atom>(i);
  return SelectorModel(arity, std::move(atoms));
}

bool SelectorModel::contains(Atom a) const noexcept { return std::binary_search(domain_.begin(), domain_.end(), a); }

std::uint64_t SelectorModel::rank_of(std::span<const Atom> subset) const {
  if (subset.size() != static_cast<std::size_t>(arity_)) {
    throw Error(ErrorKind::BadSubset, "subset " + format_atoms(subset) + " does not have " + std::to_string(arity_) + " elements");
  }
  std::vector<std::size_t> positions;
  positions.reserve(subset.size());
  for (Atom a : subset) {
    auto it = std::lower_bound(domain_.begin(), domain_.end(), a);
    if (it == domain_.end() || *it != a) {
      throw Error(ErrorKind::BadSubset, "atom " + std::to_string(a) + " is not in the domain");
    }
    positions.push_back(static_cast<std::size_t>(it - domain_.begin()));
  }
  std::sort(positions.begin(), positions.end());
  if (std::adjacent_find(positions.begin(), positions.end()) != positions.end()) {
    throw Error(ErrorKind::BadSubset, "subset " + format_atoms(subset) + " repeats an atom");
  }
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i + 1 <= positions[i]) rank += binomial_[positions[i]][i + 1];
  }
  return rank;
}

std::optional<Atom> SelectorModel::select(std::span<const Atom> subset) const {
  const auto position = selection_[rank_of(subset)];
  if (position < 0) return std::nullopt;
  return domain_[static_cast<std::size_t>(position)];
}

bool SelectorModel::is_assigned(std::span<const Atom> subset) const { return selection_[rank_of(subset)] >= 0; }

void SelectorModel::assign(std::span<const Atom> subset, Atom chosen) {
  const auto rank = rank_of(subset);
  if (std::find(subset.begin(), subset.end(), chosen) == subset.end()) {
    throw Error(ErrorKind::BadSubset, "atom " + std::to_string(chosen) + " is not a member of " + format_atoms(subset));
  }
  auto it = std::lower_bound(domain_.begin(), domain_.end(), chosen);
  selection_[rank] = static_cast<std::int32_t>(it - domain_.begin());
}

bool SelectorModel::is_total() const noexcept {
  return std::none_of(selection_.begin(), selection_.end(), [](std::int32_t p) { return p < 0; });
}

void SelectorModel::for_each_subset(
    const std::function<void(std::span<const Atom>, std::optional<Atom>)>& visit) const {
  const auto k = static_cast<std::size_t>(arity_);
  if (k > domain_.size()) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<Atom> subset(k);
  do {
    for (std::size_t i = 0; i < k; ++i) subset[i] = domain_[idx[i]];
    visit(subset, select(subset));
  } while (next_combination(idx, domain_.size()));
}

SelectorModel SelectorModel::restrict_to(std::vector<Atom> atoms) const {
  SelectorModel sub(arity_, std::move(atoms));
  for (Atom a : sub.domain()) {
    if (!contains(a)) throw Error(ErrorKind::BadSubset, "atom " + std::to_string(a) + " is not in the domain");
  }
  sub.for_each_subset([&](std::span<const Atom> subset, std::optional<Atom>) {
    if (auto chosen = select(subset)) sub.assign(subset, *chosen);
  });
  return sub;
}

std::string SelectorModel::dump() const {
  std::ostringstream out;
  out << "m=" << arity_ << " domain=" << domain_.size() << '\n';
  for_each_subset([&](std::span<const Atom> subset, std::optional<Atom> chosen) {
    out << "P=" << format_atoms(subset) << " sel=";
    if (chosen) {
      out << *chosen;
    } else {
      out << '?';
    }
    out << '\n';
  });
  return out.str();
}

bool is_valid_model(const SelectorModel& model) {
  bool ok = true;
  model.for_each_subset([&](std::span<const Atom> subset, std::optional<Atom> chosen) {
    if (!chosen || std::find(subset.begin(), subset.end(), *chosen) == subset.end()) ok = false;
  });
  return ok;
}

}  // namespace rcchoice
