#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <variant>

#include "ringlab/funring.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Class names of the hierarchy, used as verdict keys everywhere.
namespace cls {
inline constexpr const char* idempotent_ring = "idempotent_ring";
inline constexpr const char* left_s_unital = "left_s_unital";
inline constexpr const char* right_s_unital = "right_s_unital";
inline constexpr const char* s_unital = "s_unital";
inline constexpr const char* left_locally_unital = "left_locally_unital";
inline constexpr const char* right_locally_unital = "right_locally_unital";
inline constexpr const char* locally_unital = "locally_unital";
inline constexpr const char* has_local_unit_set = "has_local_unit_set";
inline constexpr const char* has_enough_idempotents = "has_enough_idempotents";
inline constexpr const char* left_unital = "left_unital";
inline constexpr const char* right_unital = "right_unital";
inline constexpr const char* unital = "unital";
inline constexpr const char* regular = "regular";
}  // namespace cls

/// Finitely supported element of a countable direct sum: index -> nonzero
/// component element.
struct SupportedElement {
  std::map<long long, RingElement> parts;

  bool is_zero() const { return parts.empty(); }
  bool operator==(const SupportedElement& other) const { return parts == other.parts; }
};

/// Finitely supported N x N matrix over a finite base ring.
struct SparseMatrix {
  std::map<std::pair<long long, long long>, RingElement> entries;

  bool is_zero() const { return entries.empty(); }
  bool operator==(const SparseMatrix& other) const { return entries == other.entries; }
};

/// Element of some computable ring.
using CValue = std::variant<SupportedElement, SparseMatrix, PiecewisePolynomial>;

/// A classification fact established at construction time, from exhaustive
/// checks on the finite component underneath.
struct Fact {
  bool holds;
  std::string reason;
  std::string witness;
  std::string counterexample;
  /// True when the refutation rests on the probe_outside contract; classify
  /// then reports it bounded ("refuted up to N") after mechanical checking.
  bool probe_backed = false;
};

/// Capability record for an infinite ring whose elements all have finite
/// representations.  Required operations are total; optional capabilities
/// may be absent (empty std::function), and their results are re-verified
/// by every caller.
class ComputableRing {
public:
  std::string name;

  std::function<CValue()> zero;
  std::function<CValue(const CValue&, const CValue&)> add;
  std::function<CValue(const CValue&)> neg;
  std::function<CValue(const CValue&, const CValue&)> mul;
  std::function<bool(const CValue&, const CValue&)> equal;
  std::function<std::string(const CValue&)> show;
  std::function<CValue(std::mt19937_64&)> sample;

  /// Optional: a one-sided unit fixing every listed element on that side.
  std::function<std::optional<CValue>(std::span<const CValue>, Side)> s_unit_for;
  /// Optional: an idempotent fixing every listed element on both sides.
  std::function<std::optional<CValue>(std::span<const CValue>)> idempotent_unit_for;
  /// Optional: an element supported strictly beyond the given bound; no
  /// candidate identity with support within the bound can fix it.
  std::function<CValue(long long)> probe_outside;
  /// Optional: random identity candidates with support within the given
  /// bound, used to check the probe contract mechanically.
  std::function<std::vector<CValue>(long long, std::mt19937_64&, int)> bounded_candidates;
  /// Optional: a finite orthogonal idempotent family that decomposes the
  /// given elements (r = sum r e_i = sum e_i r).
  std::function<std::vector<CValue>(std::span<const CValue>)> complete_family_for;
  /// Optional: s with m = m*s*m.
  std::function<std::optional<CValue>(const CValue&)> quasi_inverse;

  /// Facts keyed by cls:: names.
  std::map<std::string, Fact> facts;

  bool is_zero(const CValue& v) const { return equal(v, zero()); }
};

/// The countable direct sum of copies of `component`, with finitely
/// supported elements.  Units are assembled coordinatewise; classification
/// facts are inherited from the exhaustively decided component.
ComputableRing supported_direct_sum(const FiniteRing& component);

/// Finitely supported square matrices over a unital finite base: the ring
/// of finite-rank transformations.  Locally unital via diagonal
/// projections; when the base is a field, regular via generalized inverses.
ComputableRing finite_rank_matrix_ring(const FiniteRing& base);

/// The ring of continuous compactly supported piecewise-polynomial
/// functions, wrapped as a ComputableRing.
ComputableRing piecewise_function_ring();

/// Random compactly supported function with support inside [lo, hi],
/// assembled from tents and parabolic arcs.
PiecewisePolynomial random_compact_function(std::mt19937_64& rng, const Rat& lo,
                                            const Rat& hi);

/// Generalized inverse of a finitely supported matrix over a field base:
/// returns g with m*g*m == m.
std::optional<SparseMatrix> sparse_generalized_inverse(const FiniteRing& base,
                                                       const SparseMatrix& m);

}  // namespace ringlab
