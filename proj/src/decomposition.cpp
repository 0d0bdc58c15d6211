#include "rcchoice/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "rcchoice/error.hpp"

namespace rcchoice {

Decomposition::Decomposition(std::vector<Integer> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(ErrorKind::InvalidArgument, "a decomposition needs at least one part");
  for (Integer p : parts_) {
    if (p < 2) throw Error(ErrorKind::InvalidPart, "part " + std::to_string(p) + " is below 2");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  total_ = std::accumulate(parts_.begin(), parts_.end(), Integer{0});
}

std::string Decomposition::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
  out << '}';
  return out.str();
}

std::vector<Integer> AdmissibleSumSet::values() const {
  std::vector<Integer> out;
  for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i)) {
    out.push_back(static_cast<Integer>(i));
  }
  return out;
}

std::vector<Integer> allowed_contributions(Integer part) {
  if (part < 2) throw Error(ErrorKind::InvalidPart, "part " + std::to_string(part) + " is below 2");
  std::vector<Integer> out{0};
  for (Integer j = 1; j <= part; ++j) {
    if (gcd(j, part) > 1) out.push_back(j);
  }
  return out;
}

AdmissibleSumSet admissible_sums(const Decomposition& d) {
  const auto width = static_cast<std::size_t>(d.total()) + 1;
  boost::dynamic_bitset<> acc(width);
  acc.set(0);
  for (Integer part : d.parts()) {
    boost::dynamic_bitset<> next(width);
    for (Integer c : allowed_contributions(part)) next |= acc << static_cast<std::size_t>(c);
    acc = std::move(next);
  }
  return AdmissibleSumSet(std::move(acc));
}

bool blocks(const Decomposition& d, Integer m) {
  if (m > d.total()) return true;
  return !admissible_sums(d).contains(m);
}

namespace {

__extension__ using Mask = unsigned __int128;

Mask bit(Integer i) { return Mask{1} << static_cast<unsigned>(i); }

// Depth-first walk over non-increasing part lists. `admitted` holds the
// admissible sums of the parts chosen so far.
class PartitionWalker {
 public:
  explicit PartitionWalker(Integer n) : n_(n), contributions_(static_cast<std::size_t>(n) + 1, 0) {
    for (Integer part = 2; part <= n; ++part) {
      Mask mask = 0;
      for (Integer c : allowed_contributions(part)) mask |= bit(c);
      contributions_[static_cast<std::size_t>(part)] = mask;
    }
  }

  Mask extend(Mask admitted, Integer part) const {
    Mask out = 0;
    Mask c = contributions_[static_cast<std::size_t>(part)];
    for (Integer shift = 0; c != 0; ++shift, c >>= 1) {
      if (c & 1) out |= admitted << static_cast<unsigned>(shift);
    }
    return out & (bit(n_ + 1) - 1);
  }

 private:
  Integer n_;
  std::vector<Mask> contributions_;
};

void enumerate(Integer remaining, Integer max_part, std::vector<Integer>& prefix, bool& keep_going,
               const std::function<bool(std::span<const Integer>)>& visit) {
  if (!keep_going) return;
  if (remaining == 0) {
    keep_going = visit(prefix);
    return;
  }
  for (Integer part = std::min(remaining, max_part); part >= 2 && keep_going; --part) {
    if (remaining - part == 1) continue;
    prefix.push_back(part);
    enumerate(remaining - part, part, prefix, keep_going, visit);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_partition(Integer n, const std::function<bool(std::span<const Integer>)>& visit) {
  if (n < 2) return;
  std::vector<Integer> prefix;
  bool keep_going = true;
  enumerate(n, n, prefix, keep_going, visit);
}

std::optional<Decomposition> find_blocking_decomposition(Integer m, Integer n, Integer bound) {
  if (bound > kMaxExhaustiveBound) {
    throw Error(ErrorKind::InvalidArgument,
                "exhaustive bound " + std::to_string(bound) + " exceeds " + std::to_string(kMaxExhaustiveBound));
  }
  if (n > bound) {
    throw Error(ErrorKind::BoundExceeded,
                "n = " + std::to_string(n) + " exceeds exhaustive bound " + std::to_string(bound));
  }
  if (n < 2 || m < 1) {
    throw Error(ErrorKind::InvalidArgument, "need m >= 1 and n >= 2");
  }
  if (m > n) return Decomposition({n});

  const PartitionWalker walker(n);
  std::vector<Integer> prefix;
  std::optional<Decomposition> found;

  std::function<void(Integer, Integer, Mask)> walk = [&](Integer remaining, Integer max_part, Mask admitted) {
    if (remaining == 0) {
      found = Decomposition(prefix);
      return;
    }
    for (Integer part = std::min(remaining, max_part); part >= 2 && !found; --part) {
      if (remaining - part == 1) continue;
      const Mask next = walker.extend(admitted, part);
      if (next & bit(m)) continue;
      prefix.push_back(part);
      walk(remaining - part, part, next);
      prefix.pop_back();
    }
  };
  walk(n, n, Mask{1});
  return found;
}

}  // namespace rcchoice
