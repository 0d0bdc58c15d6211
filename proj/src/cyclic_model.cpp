#include "rcchoice/cyclic_model.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "rcchoice/error.hpp"

namespace rcchoice {

CyclicAutomorphism::CyclicAutomorphism(SelectorModel model, std::vector<Atom> fixed,
                                       std::vector<std::vector<Atom>> cycles)
    : model_(std::move(model)), fixed_(std::move(fixed)), cycles_(std::move(cycles)) {
  const auto domain = model_.domain();
  where_.assign(domain.size(), {-2, 0});
  auto claim = [&](Atom a, int cycle, std::size_t offset) {
    auto it = std::lower_bound(domain.begin(), domain.end(), a);
    if (it == domain.end() || *it != a) {
      throw Error(ErrorKind::InvalidArgument, "atom " + std::to_string(a) + " is not in the domain");
    }
    auto& slot = where_[static_cast<std::size_t>(it - domain.begin())];
    if (slot.first != -2) throw Error(ErrorKind::InvalidArgument, "atom " + std::to_string(a) + " listed twice");
    slot = {cycle, offset};
  };
  std::sort(fixed_.begin(), fixed_.end());
  for (Atom a : fixed_) claim(a, -1, 0);
  for (std::size_t c = 0; c < cycles_.size(); ++c) {
    if (cycles_[c].size() < 2) {
      throw Error(ErrorKind::InvalidArgument, "cycle " + std::to_string(c) + " has length " +
                                                  std::to_string(cycles_[c].size()) + "; cycles need length >= 2");
    }
    for (std::size_t i = 0; i < cycles_[c].size(); ++i) claim(cycles_[c][i], static_cast<int>(c), i);
    order_ = std::lcm(order_, cycles_[c].size());
  }
  if (std::any_of(where_.begin(), where_.end(), [](const auto& w) { return w.first == -2; })) {
    throw Error(ErrorKind::InvalidArgument, "fixed set and cycles do not cover the domain");
  }
}

Atom CyclicAutomorphism::apply(Atom a, std::size_t power) const {
  const auto domain = model_.domain();
  auto it = std::lower_bound(domain.begin(), domain.end(), a);
  if (it == domain.end() || *it != a) throw Error(ErrorKind::BadSubset, "atom " + std::to_string(a) + " is not in the domain");
  const auto [cycle, offset] = where_[static_cast<std::size_t>(it - domain.begin())];
  if (cycle < 0) return a;
  const auto& cyc = cycles_[static_cast<std::size_t>(cycle)];
  return cyc[(offset + power) % cyc.size()];
}

CyclicAutomorphism CyclicAutomorphism::with_model(SelectorModel model) const {
  if (!std::equal(model.domain().begin(), model.domain().end(), model_.domain().begin(), model_.domain().end())) {
    throw Error(ErrorKind::InvalidArgument, "replacement model has a different domain");
  }
  return CyclicAutomorphism(std::move(model), fixed_, cycles_);
}

std::string CyclicAutomorphism::cycle_line() const {
  std::ostringstream out;
  out << "S=" << format_atoms(fixed_) << " cycles=[";
  for (std::size_t c = 0; c < cycles_.size(); ++c) {
    out << (c ? ";" : "") << '(';
    for (std::size_t i = 0; i < cycles_[c].size(); ++i) out << (i ? "," : "") << cycles_[c][i];
    out << ')';
  }
  out << ']';
  return out.str();
}

std::string CyclicAutomorphism::dump() const {
  std::string body = model_.dump();
  const auto header_end = body.find('\n') + 1;
  return body.substr(0, header_end) + cycle_line() + '\n' + body.substr(header_end);
}

CyclicAutomorphism build_cyclic_model(int arity, std::size_t fixed_size, const Decomposition& d) {
  const std::size_t total = fixed_size + static_cast<std::size_t>(d.total());
  std::vector<Atom> fixed(fixed_size);
  std::iota(fixed.begin(), fixed.end(), 0);
  std::vector<std::vector<Atom>> cycles;
  Atom next = static_cast<Atom>(fixed_size);
  for (Integer len : d.parts()) {
    std::vector<Atom> cyc(static_cast<std::size_t>(len));
    std::iota(cyc.begin(), cyc.end(), next);
    next += static_cast<Atom>(len);
    cycles.push_back(std::move(cyc));
  }
  // The permutation only; the selector is filled below.
  const CyclicAutomorphism sigma(SelectorModel::on_initial_segment(arity, total), fixed, cycles);
  SelectorModel model = sigma.model();

  const auto k = static_cast<std::size_t>(arity);
  if (k > total) return sigma;

  auto cycle_of = [&](Atom a) -> int {
    if (a < static_cast<Atom>(fixed_size)) return -1;
    Atom start = static_cast<Atom>(fixed_size);
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      if (a < start + static_cast<Atom>(cycles[c].size())) return static_cast<int>(c);
      start += static_cast<Atom>(cycles[c].size());
    }
    return -2;
  };

  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Atom> subset(k), image(k);
  do {
    for (std::size_t i = 0; i < k; ++i) subset[i] = static_cast<Atom>(idx[i]);
    if (model.is_assigned(subset)) continue;

    std::optional<Atom> chosen;
    if (subset.front() < static_cast<Atom>(fixed_size)) {
      chosen = subset.front();
    } else {
      std::vector<std::size_t> hits(cycles.size(), 0);
      std::vector<Atom> least(cycles.size(), -1);
      for (Atom a : subset) {
        const auto c = static_cast<std::size_t>(cycle_of(a));
        if (hits[c]++ == 0) least[c] = a;
      }
      for (std::size_t c = 0; c < cycles.size() && !chosen; ++c) {
        if (hits[c] > 0 && std::gcd(hits[c], cycles[c].size()) == 1) chosen = least[c];
      }
      if (!chosen) {
        throw Error(ErrorKind::NotBlocking, "subset " + format_atoms(subset) + " meets every cycle C_j in a set whose size shares a factor with |C_j|; " +
                                               d.to_string() + " admits m = " + std::to_string(arity));
      }
    }

    for (std::size_t t = 0; t < sigma.order(); ++t) {
      for (std::size_t i = 0; i < k; ++i) image[i] = sigma.apply(subset[i], t);
      const Atom carried = sigma.apply(*chosen, t);
      if (auto existing = model.select(image)) {
        if (*existing != carried) {
          throw Error(ErrorKind::OrbitConflict, "orbit of " + format_atoms(subset) + " assigns both " +
                                                    std::to_string(*existing) + " and " + std::to_string(carried) +
                                                    " to " + format_atoms(image));
        }
      } else {
        model.assign(image, carried);
      }
    }
  } while (next_combination(idx, total));

  return sigma.with_model(std::move(model));
}

EquivarianceReport verify_equivariance(const CyclicAutomorphism& c) {
  EquivarianceReport report;
  const auto& model = c.model();
  std::vector<Atom> image(static_cast<std::size_t>(model.arity()));
  model.for_each_subset([&](std::span<const Atom> subset, std::optional<Atom> chosen) {
    if (!report.ok) return;
    for (std::size_t t = 1; t < c.order(); ++t) {
      for (std::size_t i = 0; i < subset.size(); ++i) image[i] = c.apply(subset[i], t);
      ++report.checked;
      std::optional<Atom> expected;
      if (chosen) expected = c.apply(*chosen, t);
      const auto actual = model.select(image);
      if (!expected || actual != expected) {
        report.ok = false;
        report.subset.assign(subset.begin(), subset.end());
        report.power = t;
        report.expected = expected;
        report.actual = actual;
        return;
      }
    }
  });
  return report;
}

bool witness_no_invariant_choice(const CyclicAutomorphism& c, Integer n) {
  std::vector<Atom> moved;
  for (const auto& cyc : c.cycles()) moved.insert(moved.end(), cyc.begin(), cyc.end());
  if (static_cast<Integer>(moved.size()) != n) return false;
  std::sort(moved.begin(), moved.end());
  for (Atom a : moved) {
    const Atom b = c.apply(a);
    if (b == a || !std::binary_search(moved.begin(), moved.end(), b)) return false;
  }
  return true;
}

GcdClaimReport verify_gcd_claim(int q_max) {
  if (q_max < 2 || q_max > 20) throw Error(ErrorKind::InvalidArgument, "q_max must lie in [2, 20]");
  GcdClaimReport report;
  for (int q = 2; q <= q_max; ++q) {
    GcdClaimRow row{q, 0, 0, 0};
    const std::uint32_t full = (std::uint32_t{1} << q) - 1;
    // pi sends position i to i + 1 mod q; pi^r rotates the mask by r.
    auto rotate = [&](std::uint32_t mask, int r) { return ((mask << r) | (mask >> (q - r))) & full; };
    for (int r = 1; r < q; ++r) {
      ++row.powers;
      for (std::uint32_t mask = 1; mask < full; ++mask) {
        if (rotate(mask, r) != mask) continue;
        ++row.invariant_subsets;
        if (std::gcd(std::popcount(mask), q) <= 1) ++row.violations;
      }
    }
    if (row.violations != 0) report.holds = false;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace rcchoice
