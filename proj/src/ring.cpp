#include "ringlab/ring.hpp"

#include <algorithm>
#include <deque>

namespace ringlab {

Subgroup::Subgroup(FiniteAbelianGroup group, std::vector<RingElement> members)
    : group_(std::move(group)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  for (const RingElement& e : members_) indices_.insert(group_.index_of(e));
}

bool Subgroup::contains(const RingElement& e) const {
  if (e.group() != group_) return false;
  return indices_.count(group_.index_of(e)) != 0;
}

Subgroup additive_closure(const FiniteAbelianGroup& group,
                          std::span<const RingElement> seed) {
  std::unordered_set<unsigned long long> seen;
  std::vector<RingElement> members;
  std::deque<RingElement> work;

  auto push = [&](const RingElement& e) {
    if (seen.insert(group.index_of(e)).second) {
      members.push_back(e);
      work.push_back(e);
    }
  };

  push(group.zero());
  // Every finite sum of seed elements is reachable by repeatedly adding one
  // seed element, and negation is such a sum in a finite group.
  std::vector<RingElement> generators(seed.begin(), seed.end());
  while (!work.empty()) {
    RingElement current = work.front();
    work.pop_front();
    for (const RingElement& g : generators) push(current + g);
  }
  return Subgroup(group, std::move(members));
}

FiniteRing FiniteRing::make(
    std::vector<long long> orders,
    const std::vector<std::vector<std::vector<long long>>>& table,
    std::string name) {
  FiniteAbelianGroup group(std::move(orders));
  std::size_t k = group.rank();
  if (table.size() != k) throw BadShape("table must have k rows");
  std::vector<RingElement> constants;
  constants.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    if (table[i].size() != k) throw BadShape("table row " + std::to_string(i + 1) +
                                             " must have k entries");
    for (std::size_t j = 0; j < k; ++j) {
      const auto& coords = table[i][j];
      if (coords.size() != k)
        throw BadShape("entry (" + std::to_string(i + 1) + "," +
                       std::to_string(j + 1) + ") has wrong arity");
      for (std::size_t t = 0; t < k; ++t)
        if (coords[t] < 0 || coords[t] >= group.order(t))
          throw BadShape("entry (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ") coordinate " +
                         std::to_string(t + 1) + " out of range");
      constants.push_back(group.element(coords));
    }
  }
  return make_from_elements(std::move(group), std::move(constants), std::move(name));
}

FiniteRing FiniteRing::make_from_elements(FiniteAbelianGroup group,
                                          std::vector<RingElement> constants,
                                          std::string name) {
  std::size_t k = group.rank();
  if (constants.size() != k * k) throw BadShape("expected k*k structure constants");
  for (const RingElement& c : constants)
    if (c.group() != group) throw GroupMismatch();

  // n_i c_ij = n_j c_ij = 0: forced by bilinearity, so inconsistent tables
  // are rejected up front.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const RingElement& c = constants[i * k + j];
      if (!c.scaled(group.order(i)).is_zero() || !c.scaled(group.order(j)).is_zero())
        throw OrderIncompatible(i, j);
    }

  FiniteRing ring(std::move(group), std::move(constants), std::move(name));

  // Generator associativity; bilinear extension then gives it on all of R.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        RingElement lhs = ring.mul(ring.structure_constant(i, j), ring.generator(l));
        RingElement rhs = ring.mul(ring.generator(i), ring.structure_constant(j, l));
        if (lhs != rhs) throw NonAssociative(i, j, l);
      }
  return ring;
}

RingElement FiniteRing::generator(std::size_t i) const {
  std::vector<long long> coords(rank(), 0);
  coords[i] = 1;
  return group_.element(std::move(coords));
}

RingElement FiniteRing::mul(const RingElement& r, const RingElement& s) const {
  if (r.group() != group_ || s.group() != group_) throw GroupMismatch();
  std::size_t k = rank();
  std::vector<long long> acc(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (r.coord(i) == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (s.coord(j) == 0) continue;
      const RingElement& c = constants_[i * k + j];
      long long factor = (r.coord(i) * s.coord(j));
      for (std::size_t t = 0; t < k; ++t) {
        long long n = group_.order(t);
        acc[t] = (acc[t] + (factor % n) * c.coord(t)) % n;
      }
    }
  }
  return group_.element(std::move(acc));
}

std::vector<RingElement> FiniteRing::element_list() const {
  std::vector<RingElement> out;
  out.reserve(size());
  for (RingElement e : elements()) out.push_back(std::move(e));
  return out;
}

std::vector<RingElement> FiniteRing::idempotents() const {
  std::vector<RingElement> out;
  for (RingElement e : elements())
    if (mul(e, e) == e) out.push_back(std::move(e));
  return out;
}

Subgroup FiniteRing::square() const {
  std::unordered_set<unsigned long long> seen;
  std::vector<RingElement> products;
  for (RingElement r : elements())
    for (RingElement s : elements()) {
      RingElement p = mul(r, s);
      if (seen.insert(group_.index_of(p)).second) products.push_back(std::move(p));
    }
  return additive_closure(products);
}

}  // namespace ringlab
