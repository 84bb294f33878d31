#pragma once

#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "ringlab/group.hpp"

namespace ringlab {

class FiniteRing;

/// Lazy range over all elements of a group in lexicographic coordinate
/// order; `for (RingElement e : ring.elements())`.
class ElementRange {
public:
  explicit ElementRange(FiniteAbelianGroup group) : group_(std::move(group)) {}

  class iterator {
  public:
    using value_type = RingElement;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const FiniteAbelianGroup* group, unsigned long long pos)
        : group_(group), pos_(pos) {}
    RingElement operator*() const { return group_->from_index(pos_); }
    iterator& operator++() { ++pos_; return *this; }
    iterator operator++(int) { iterator old = *this; ++pos_; return old; }
    bool operator==(const iterator& other) const { return pos_ == other.pos_; }
    bool operator!=(const iterator& other) const { return pos_ != other.pos_; }

  private:
    const FiniteAbelianGroup* group_ = nullptr;
    unsigned long long pos_ = 0;
  };

  iterator begin() const { return iterator(&group_, 0); }
  iterator end() const { return iterator(&group_, group_.size()); }

private:
  FiniteAbelianGroup group_;
};

/// An additive subgroup of a FiniteAbelianGroup, materialized as its member
/// set.  Members are kept in enumeration order.
class Subgroup {
public:
  Subgroup(FiniteAbelianGroup group, std::vector<RingElement> members);

  const std::vector<RingElement>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const RingElement& e) const;
  bool is_whole_group() const { return members_.size() == group_.size(); }
  const FiniteAbelianGroup& group() const { return group_; }

private:
  FiniteAbelianGroup group_;
  std::vector<RingElement> members_;
  std::unordered_set<unsigned long long> indices_;
};

/// Smallest additive subgroup containing the seed (closure under + and -,
/// found by fixpoint iteration; the empty seed yields {0}).
Subgroup additive_closure(const FiniteAbelianGroup& group,
                          std::span<const RingElement> seed);

/// An associative ring presented by structure constants over a finite
/// abelian group: entry (i,j) of the table is the product of the i-th and
/// j-th cyclic generators, and multiplication extends bilinearly.
///
/// Validation happens once, in make(): every table entry must be canonical
/// (BadShape otherwise), annihilated by both factor orders
/// (OrderIncompatible), and generator-associative (NonAssociative).
/// Bilinearity then gives associativity and distributivity on all elements.
/// Instances are immutable and safe to share across threads.
class FiniteRing {
public:
  /// Validating constructor.  `table` is a k x k matrix of coordinate
  /// vectors; coordinates must already lie in [0, n_i).
  static FiniteRing make(std::vector<long long> orders,
                         const std::vector<std::vector<std::vector<long long>>>& table,
                         std::string name);

  /// Same validation, structure constants given as elements.
  static FiniteRing make_from_elements(FiniteAbelianGroup group,
                                       std::vector<RingElement> constants,
                                       std::string name);

  const FiniteAbelianGroup& group() const { return group_; }
  const std::string& name() const { return name_; }
  unsigned long long size() const { return group_.size(); }
  std::size_t rank() const { return group_.rank(); }

  RingElement zero() const { return group_.zero(); }
  RingElement element(std::vector<long long> coords) const {
    return group_.element(std::move(coords));
  }
  /// The i-th cyclic generator (coordinate vector delta_i).
  RingElement generator(std::size_t i) const;
  /// Product of generators i and j.
  const RingElement& structure_constant(std::size_t i, std::size_t j) const {
    return constants_[i * rank() + j];
  }

  RingElement add(const RingElement& r, const RingElement& s) const { return r + s; }
  RingElement neg(const RingElement& r) const { return -r; }
  /// Bilinear product sum_{i,j} r_i s_j c_ij.
  RingElement mul(const RingElement& r, const RingElement& s) const;

  ElementRange elements() const { return ElementRange(group_); }
  std::vector<RingElement> element_list() const;

  /// All e with e*e == e, in enumeration order (always starts with zero).
  std::vector<RingElement> idempotents() const;

  Subgroup additive_closure(std::span<const RingElement> seed) const {
    return ringlab::additive_closure(group_, seed);
  }

  /// R^2: the additive span of all pairwise products.
  Subgroup square() const;

  bool same_table(const FiniteRing& other) const {
    return group_ == other.group_ && constants_ == other.constants_;
  }

private:
  FiniteRing(FiniteAbelianGroup group, std::vector<RingElement> constants,
             std::string name)
      : group_(std::move(group)), constants_(std::move(constants)),
        name_(std::move(name)) {}

  FiniteAbelianGroup group_;
  std::vector<RingElement> constants_;  // k*k, row-major
  std::string name_;
};

}  // namespace ringlab
