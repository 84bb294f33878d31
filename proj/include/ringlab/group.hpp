#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ringlab/errors.hpp"

namespace ringlab {

enum class Side { left, right };

const char* to_string(Side side);
Side opposite(Side side);

class RingElement;

/// Finite product of cyclic groups Z_{n_1} x ... x Z_{n_k}.  This is the
/// additive structure underneath every FiniteRing; elements are coordinate
/// vectors reduced into [0, n_i).  The empty product (k = 0) is the trivial
/// group with one element.
class FiniteAbelianGroup {
public:
  explicit FiniteAbelianGroup(std::vector<long long> orders);

  std::size_t rank() const { return orders_.size(); }
  long long order(std::size_t i) const { return orders_[i]; }
  const std::vector<long long>& orders() const { return orders_; }
  unsigned long long size() const { return size_; }

  RingElement zero() const;
  /// Builds an element, reducing each coordinate into its canonical range.
  RingElement element(std::vector<long long> coords) const;
  /// Element at the given position of the lexicographic enumeration.
  RingElement from_index(unsigned long long index) const;
  /// Position of an element in the lexicographic enumeration.
  unsigned long long index_of(const RingElement& e) const;

  bool operator==(const FiniteAbelianGroup& other) const {
    return orders_ == other.orders_;
  }
  bool operator!=(const FiniteAbelianGroup& other) const {
    return !(*this == other);
  }

private:
  std::vector<long long> orders_;
  unsigned long long size_ = 1;
};

/// An element of a FiniteAbelianGroup: canonical coordinates plus a copy of
/// the owning group.  Values; all arithmetic returns new elements.
class RingElement {
public:
  RingElement(FiniteAbelianGroup group, std::vector<long long> coords);

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<long long>& coords() const { return coords_; }
  long long coord(std::size_t i) const { return coords_[i]; }
  bool is_zero() const;

  RingElement operator+(const RingElement& other) const;
  RingElement operator-(const RingElement& other) const;
  RingElement operator-() const;
  /// m * this, for any integer m (reduced coordinatewise).
  RingElement scaled(long long m) const;
  /// Additive order: least n >= 1 with n * this == 0.
  long long additive_order() const;

  bool operator==(const RingElement& other) const {
    return coords_ == other.coords_ && group_ == other.group_;
  }
  bool operator!=(const RingElement& other) const { return !(*this == other); }
  /// Lexicographic coordinate order (same group assumed).
  bool operator<(const RingElement& other) const {
    return coords_ < other.coords_;
  }

  /// Renders as "(c1,...,ck)".
  std::string str() const;

private:
  void check_same_group(const RingElement& other) const;

  FiniteAbelianGroup group_;
  std::vector<long long> coords_;
};

std::ostream& operator<<(std::ostream& os, const RingElement& e);

}  // namespace ringlab
