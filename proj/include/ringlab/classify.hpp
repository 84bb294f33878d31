#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/computable.hpp"

namespace ringlab {

/// Tri-state membership verdict.  Witnesses and counterexamples are kept as
/// rendered element strings; every decider re-verifies them against the
/// defining equations before returning.  `unknown` always carries a reason.
struct Verdict {
  enum class State { yes, no, unknown };

  State state = State::unknown;
  std::string witness;
  std::string counterexample;
  std::string reason;
  std::optional<long long> bound;  // "refuted up to N" for probe refutations

  bool is_yes() const { return state == State::yes; }
  bool is_no() const { return state == State::no; }
  bool is_unknown() const { return state == State::unknown; }

  static Verdict yes(std::string witness = "", std::string reason = "");
  static Verdict no(std::string counterexample = "", std::string reason = "");
  static Verdict unknown(std::string reason);

  bool operator==(const Verdict&) const = default;
};

const char* to_string(Verdict::State s);

/// Membership record for the full hierarchy.
struct Classification {
  std::string ring_name;
  std::optional<unsigned long long> size;  // absent for infinite rings
  std::optional<long long> probe_bound;    // for computable rings
  std::map<std::string, Verdict> classes;

  static const std::array<const char*, 13>& class_names();
  const Verdict& at(std::string_view name) const;
  bool yes(std::string_view name) const { return at(name).is_yes(); }

  bool operator==(const Classification&) const = default;
};

// ---------------------------------------------------------------------------
// Exhaustive deciders over finite rings.  "First" always means first in the
// lexicographic element enumeration.

struct SUnitalSearch {
  /// First element e with e*r = r (resp. r*e = r) for every r, if any.
  std::optional<RingElement> common_unit;
  /// First failing element otherwise.
  std::optional<RingElement> counterexample;
  /// Per-element first units (only filled when the search succeeds).
  std::vector<std::pair<RingElement, RingElement>> unit_table;

  bool holds() const { return !counterexample.has_value(); }
};

SUnitalSearch s_unital_search(const FiniteRing& ring, Side side);

/// All one-sided identities, in enumeration order.
std::vector<RingElement> one_sided_identities(const FiniteRing& ring, Side side);

/// First idempotent fixing every element on the given side, if any.  For a
/// finite ring this single idempotent settles local unitality.
std::optional<RingElement> locally_unital_idempotent(const FiniteRing& ring, Side side);

/// First idempotent fixing every element on both sides (single-idempotent
/// formulation of local unitality).
std::optional<RingElement> locally_unital_idempotent_two_sided(const FiniteRing& ring);

struct LocalUnitSetSearch {
  std::optional<std::vector<RingElement>> units;
  bool used_collapse_shortcut = false;
  std::string note;
};

/// Search for a set of local units: commuting idempotents, closed under the
/// join e+f-ef, with a two-sided unit for every element.  Direct subset
/// search for |R| <= 64 (and few idempotents); beyond that the finite
/// collapse shortcut decides and is flagged in `note`.
LocalUnitSetSearch local_unit_set_search(const FiniteRing& ring);

/// First (depth-first over the idempotent list) complete family of nonzero
/// orthogonal idempotents, if any.
std::optional<std::vector<RingElement>> enough_idempotents_search(const FiniteRing& ring);

/// Checks that the family members are nonzero idempotents
/// (NotIdempotentInput), pairwise orthogonal (NotOrthogonal), and that
/// every ring element r satisfies r = sum r e_i = sum e_i r.
bool verify_complete_idempotents(const FiniteRing& ring,
                                 std::span<const RingElement> family);

/// Same check over a computable ring, on the given probe elements.
bool verify_complete_idempotents(const ComputableRing& ring,
                                 std::span<const CValue> family,
                                 std::span<const CValue> probes);

struct RegularSearch {
  std::optional<RingElement> counterexample;  // first r with no s, r = rsr
  std::vector<std::pair<RingElement, RingElement>> quasi_inverse_table;

  bool holds() const { return !counterexample.has_value(); }
};

RegularSearch regular_search(const FiniteRing& ring);

// Verdict wrappers.
Verdict is_idempotent_ring(const FiniteRing& ring);
Verdict is_one_sided_s_unital(const FiniteRing& ring, Side side);
Verdict is_one_sided_locally_unital(const FiniteRing& ring, Side side);
Verdict is_locally_unital_am(const FiniteRing& ring);
Verdict has_set_of_local_units(const FiniteRing& ring);
Verdict has_enough_idempotents(const FiniteRing& ring);
Verdict is_one_sided_unital(const FiniteRing& ring, Side side);
Verdict is_unital(const FiniteRing& ring);
Verdict is_regular(const FiniteRing& ring);

/// Runs every decider and assembles the record; the result always satisfies
/// the inclusion-chain invariants (checked, InternalCheckFailed otherwise).
Classification classify(const FiniteRing& ring);

struct ClassifyOptions {
  long long probe_bound = 8;   // identity refutation bound
  int samples = 12;            // spot-verification sample size
  unsigned long long seed = 0x5eed;
};

/// Classification via capabilities and construction facts: capability
/// results are re-verified on sampled elements, probe-backed refutations
/// are mechanically checked up to the bound and reported with it, and the
/// remaining classes are settled by the hierarchy's implications or left
/// unknown with a reason.
Classification classify(const ComputableRing& ring, const ClassifyOptions& opts = {});

/// Throws InternalCheckFailed when the verdicts violate the inclusion chain
/// or one of the two-sided/one-sided consistency rules.
void check_hierarchy(const Classification& c);

}  // namespace ringlab
