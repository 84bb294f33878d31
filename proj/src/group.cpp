#include "ringlab/group.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace ringlab {

const char* to_string(Side side) {
  return side == Side::left ? "left" : "right";
}

Side opposite(Side side) {
  return side == Side::left ? Side::right : Side::left;
}

namespace {

long long floor_mod(long long value, long long modulus) {
  long long r = value % modulus;
  return r < 0 ? r + modulus : r;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long long> orders)
    : orders_(std::move(orders)) {
  for (long long n : orders_) {
    if (n < 2) throw BadShape("cyclic factor order " + std::to_string(n) + " < 2");
    if (size_ > std::numeric_limits<unsigned long long>::max() / 4 /
                    static_cast<unsigned long long>(n))
      throw TooLarge("group size overflows");
    size_ *= static_cast<unsigned long long>(n);
  }
}

RingElement FiniteAbelianGroup::zero() const {
  return RingElement(*this, std::vector<long long>(rank(), 0));
}

RingElement FiniteAbelianGroup::element(std::vector<long long> coords) const {
  return RingElement(*this, std::move(coords));
}

RingElement FiniteAbelianGroup::from_index(unsigned long long index) const {
  std::vector<long long> coords(rank());
  for (std::size_t i = rank(); i-- > 0;) {
    auto n = static_cast<unsigned long long>(orders_[i]);
    coords[i] = static_cast<long long>(index % n);
    index /= n;
  }
  return RingElement(*this, std::move(coords));
}

unsigned long long FiniteAbelianGroup::index_of(const RingElement& e) const {
  unsigned long long index = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    index = index * static_cast<unsigned long long>(orders_[i]) +
            static_cast<unsigned long long>(e.coord(i));
  return index;
}

RingElement::RingElement(FiniteAbelianGroup group, std::vector<long long> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
  if (coords_.size() != group_.rank())
    throw ArityMismatch(group_.rank(), coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    coords_[i] = floor_mod(coords_[i], group_.order(i));
}

bool RingElement::is_zero() const {
  for (long long c : coords_)
    if (c != 0) return false;
  return true;
}

void RingElement::check_same_group(const RingElement& other) const {
  if (group_ != other.group_) throw GroupMismatch();
}

RingElement RingElement::operator+(const RingElement& other) const {
  check_same_group(other);
  std::vector<long long> coords(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    coords[i] = (coords_[i] + other.coords_[i]) % group_.order(i);
  return RingElement(group_, std::move(coords));
}

RingElement RingElement::operator-() const {
  std::vector<long long> coords(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    coords[i] = coords_[i] == 0 ? 0 : group_.order(i) - coords_[i];
  return RingElement(group_, std::move(coords));
}

RingElement RingElement::operator-(const RingElement& other) const {
  return *this + (-other);
}

RingElement RingElement::scaled(long long m) const {
  std::vector<long long> coords(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    long long n = group_.order(i);
    coords[i] = (floor_mod(m, n) * coords_[i]) % n;
  }
  return RingElement(group_, std::move(coords));
}

long long RingElement::additive_order() const {
  long long n = 1;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    long long m = group_.order(i);
    long long ord = m / std::gcd(m, coords_[i]);  // order of coords_[i] in Z_m
    n = std::lcm(n, ord);
  }
  return n;
}

std::string RingElement::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RingElement& e) {
  return os << e.str();
}

}  // namespace ringlab
