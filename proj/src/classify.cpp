#include "ringlab/classify.hpp"

#include <algorithm>
#include <functional>

namespace ringlab {

Verdict Verdict::yes(std::string witness, std::string reason) {
  Verdict v;
  v.state = State::yes;
  v.witness = std::move(witness);
  v.reason = std::move(reason);
  return v;
}

Verdict Verdict::no(std::string counterexample, std::string reason) {
  Verdict v;
  v.state = State::no;
  v.counterexample = std::move(counterexample);
  v.reason = std::move(reason);
  return v;
}

Verdict Verdict::unknown(std::string reason) {
  Verdict v;
  v.state = State::unknown;
  v.reason = std::move(reason);
  return v;
}

const char* to_string(Verdict::State s) {
  switch (s) {
    case Verdict::State::yes: return "yes";
    case Verdict::State::no: return "no";
    default: return "unknown";
  }
}

const std::array<const char*, 13>& Classification::class_names() {
  static const std::array<const char*, 13> names = {
      cls::idempotent_ring, cls::left_s_unital, cls::right_s_unital,
      cls::s_unital, cls::left_locally_unital, cls::right_locally_unital,
      cls::locally_unital, cls::has_local_unit_set, cls::has_enough_idempotents,
      cls::left_unital, cls::right_unital, cls::unital, cls::regular};
  return names;
}

const Verdict& Classification::at(std::string_view name) const {
  auto it = classes.find(std::string(name));
  if (it == classes.end())
    throw InternalCheckFailed("no verdict for class " + std::string(name));
  return it->second;
}

// ---------------------------------------------------------------------------
// Finite deciders

namespace {

RingElement side_mul(const FiniteRing& ring, Side side, const RingElement& e,
                     const RingElement& m) {
  return side == Side::left ? ring.mul(e, m) : ring.mul(m, e);
}

}  // namespace

SUnitalSearch s_unital_search(const FiniteRing& ring, Side side) {
  SUnitalSearch out;
  for (RingElement m : ring.elements()) {
    bool fixed = false;
    for (RingElement e : ring.elements())
      if (side_mul(ring, side, e, m) == m) {
        out.unit_table.emplace_back(m, std::move(e));
        fixed = true;
        break;
      }
    if (!fixed) {
      out.counterexample = std::move(m);
      out.unit_table.clear();
      return out;
    }
  }
  for (RingElement e : ring.elements()) {
    bool fixes_all = true;
    for (RingElement m : ring.elements())
      if (side_mul(ring, side, e, m) != m) {
        fixes_all = false;
        break;
      }
    if (fixes_all) {
      out.common_unit = std::move(e);
      break;
    }
  }
  return out;
}

std::vector<RingElement> one_sided_identities(const FiniteRing& ring, Side side) {
  std::vector<RingElement> out;
  for (RingElement e : ring.elements()) {
    bool identity = true;
    for (RingElement r : ring.elements())
      if (side_mul(ring, side, e, r) != r) {
        identity = false;
        break;
      }
    if (identity) out.push_back(std::move(e));
  }
  return out;
}

std::optional<RingElement> locally_unital_idempotent(const FiniteRing& ring, Side side) {
  for (const RingElement& e : ring.idempotents()) {
    bool fixes_all = true;
    for (RingElement r : ring.elements())
      if (side_mul(ring, side, e, r) != r) {
        fixes_all = false;
        break;
      }
    if (fixes_all) return e;
  }
  return std::nullopt;
}

std::optional<RingElement> locally_unital_idempotent_two_sided(const FiniteRing& ring) {
  for (const RingElement& e : ring.idempotents()) {
    bool fixes_all = true;
    for (RingElement r : ring.elements())
      if (ring.mul(e, r) != r || ring.mul(r, e) != r) {
        fixes_all = false;
        break;
      }
    if (fixes_all) return e;
  }
  return std::nullopt;
}

namespace {

RingElement join_of(const FiniteRing& ring, const RingElement& a, const RingElement& b) {
  return a + b - ring.mul(a, b);
}

/// Close a commuting idempotent set under the join; the closure stays
/// commuting and idempotent.
std::vector<RingElement> join_closure(const FiniteRing& ring,
                                      std::vector<RingElement> set) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < set.size() && !grew; ++i)
      for (std::size_t j = 0; j < set.size() && !grew; ++j) {
        RingElement v = join_of(ring, set[i], set[j]);
        if (std::find(set.begin(), set.end(), v) == set.end()) {
          set.push_back(std::move(v));
          grew = true;
        }
      }
  }
  return set;
}

bool covers_all(const FiniteRing& ring, const std::vector<RingElement>& units) {
  for (RingElement r : ring.elements()) {
    bool fixed = false;
    for (const RingElement& e : units)
      if (ring.mul(e, r) == r && ring.mul(r, e) == r) {
        fixed = true;
        break;
      }
    if (!fixed) return false;
  }
  return true;
}

}  // namespace

LocalUnitSetSearch local_unit_set_search(const FiniteRing& ring) {
  LocalUnitSetSearch out;
  if (ring.size() == 1) {  // the trivial ring: E = {0} with 0 its identity
    out.units = std::vector<RingElement>{ring.zero()};
    return out;
  }
  // Nonzero candidates suffice: a nonzero ring with a set of local units has
  // one avoiding 0 (joins of nonzero commuting idempotents stay nonzero).
  std::vector<RingElement> idem;
  for (const RingElement& e : ring.idempotents())
    if (!e.is_zero()) idem.push_back(e);

  bool direct_feasible = ring.size() <= 64 && idem.size() <= 14;
  if (direct_feasible) {
    // Depth-first over subsets of pairwise-commuting idempotents (generator
    // sets); each candidate is join-closed before the covering test.
    std::vector<RingElement> chosen;
    std::function<bool(std::size_t)> dfs = [&](std::size_t start) {
      if (!chosen.empty()) {
        std::vector<RingElement> closed = join_closure(ring, chosen);
        if (covers_all(ring, closed)) {
          out.units = std::move(closed);
          return true;
        }
      }
      for (std::size_t i = start; i < idem.size(); ++i) {
        bool commutes = true;
        for (const RingElement& e : chosen)
          if (ring.mul(e, idem[i]) != ring.mul(idem[i], e)) {
            commutes = false;
            break;
          }
        if (!commutes) continue;
        chosen.push_back(idem[i]);
        if (dfs(i + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    dfs(0);
  }

  // Finite collapse shortcut: a finite ring has a set of local units exactly
  // when it is unital, in which case {1} is one.
  std::optional<RingElement> identity;
  for (RingElement e : ring.elements()) {
    bool two_sided = true;
    for (RingElement r : ring.elements())
      if (ring.mul(e, r) != r || ring.mul(r, e) != r) {
        two_sided = false;
        break;
      }
    if (two_sided) {
      identity = std::move(e);
      break;
    }
  }

  if (!direct_feasible) {
    out.used_collapse_shortcut = true;
    out.note = "direct subset search skipped (|R| > 64 or too many idempotents)";
    if (identity) out.units = std::vector<RingElement>{*identity};
    return out;
  }

  if (out.units.has_value() != identity.has_value())
    throw InternalCheckFailed("local unit set search disagrees with collapse shortcut");
  return out;
}

std::optional<std::vector<RingElement>> enough_idempotents_search(const FiniteRing& ring) {
  std::vector<RingElement> idem;
  for (const RingElement& e : ring.idempotents())
    if (!e.is_zero()) idem.push_back(e);

  // Family size is bounded: the cyclic spans of a direct decomposition
  // multiply up to |R|, so at most log2 |R| nonzero summands.
  std::size_t max_size = 0;
  for (unsigned long long s = ring.size(); s > 1; s /= 2) ++max_size;

  std::vector<RingElement> family;
  std::function<bool(std::size_t)> dfs = [&](std::size_t start) {
    if (!family.empty()) {
      bool complete = true;
      for (RingElement r : ring.elements()) {
        RingElement left = ring.zero(), right = ring.zero();
        for (const RingElement& e : family) {
          left = left + ring.mul(r, e);
          right = right + ring.mul(e, r);
        }
        if (left != r || right != r) {
          complete = false;
          break;
        }
      }
      if (complete) return true;
    }
    if (family.size() == max_size) return false;
    for (std::size_t i = start; i < idem.size(); ++i) {
      bool orthogonal = true;
      for (const RingElement& e : family)
        if (!ring.mul(e, idem[i]).is_zero() || !ring.mul(idem[i], e).is_zero()) {
          orthogonal = false;
          break;
        }
      if (!orthogonal) continue;
      family.push_back(idem[i]);
      if (dfs(i + 1)) return true;
      family.pop_back();
    }
    return false;
  };
  if (dfs(0)) return family;
  return std::nullopt;
}

bool verify_complete_idempotents(const FiniteRing& ring,
                                 std::span<const RingElement> family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].is_zero())
      throw NotIdempotentInput("family member " + std::to_string(i) + " is zero");
    if (ring.mul(family[i], family[i]) != family[i])
      throw NotIdempotentInput("family member " + std::to_string(i));
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!ring.mul(family[i], family[j]).is_zero() ||
          !ring.mul(family[j], family[i]).is_zero())
        throw NotOrthogonal(i, j);
  }
  for (RingElement r : ring.elements()) {
    RingElement left = ring.zero(), right = ring.zero();
    for (const RingElement& e : family) {
      left = left + ring.mul(r, e);
      right = right + ring.mul(e, r);
    }
    if (left != r || right != r) return false;
  }
  return true;
}

bool verify_complete_idempotents(const ComputableRing& ring,
                                 std::span<const CValue> family,
                                 std::span<const CValue> probes) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (ring.is_zero(family[i]))
      throw NotIdempotentInput("family member " + std::to_string(i) + " is zero");
    if (!ring.equal(ring.mul(family[i], family[i]), family[i]))
      throw NotIdempotentInput("family member " + std::to_string(i));
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!ring.is_zero(ring.mul(family[i], family[j])) ||
          !ring.is_zero(ring.mul(family[j], family[i])))
        throw NotOrthogonal(i, j);
  }
  for (const CValue& r : probes) {
    CValue left = ring.zero(), right = ring.zero();
    for (const CValue& e : family) {
      left = ring.add(left, ring.mul(r, e));
      right = ring.add(right, ring.mul(e, r));
    }
    if (!ring.equal(left, r) || !ring.equal(right, r)) return false;
  }
  return true;
}

RegularSearch regular_search(const FiniteRing& ring) {
  RegularSearch out;
  for (RingElement r : ring.elements()) {
    bool found = false;
    for (RingElement s : ring.elements())
      if (ring.mul(ring.mul(r, s), r) == r) {
        out.quasi_inverse_table.emplace_back(r, std::move(s));
        found = true;
        break;
      }
    if (!found) {
      out.counterexample = std::move(r);
      out.quasi_inverse_table.clear();
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verdict wrappers

Verdict is_idempotent_ring(const FiniteRing& ring) {
  Subgroup sq = ring.square();
  if (sq.is_whole_group())
    return Verdict::yes("", "additive closure of products spans R");
  for (RingElement r : ring.elements())
    if (!sq.contains(r))
      return Verdict::no(r.str(), "element outside R^2");
  throw InternalCheckFailed("R^2 proper but no element outside it");
}

Verdict is_one_sided_s_unital(const FiniteRing& ring, Side side) {
  SUnitalSearch search = s_unital_search(ring, side);
  if (!search.holds())
    return Verdict::no(search.counterexample->str(),
                       std::string("no ") + to_string(side) + " unit exists");
  std::string witness = search.common_unit ? search.common_unit->str() : "";
  return Verdict::yes(witness, "per-element units found by exhaustion");
}

Verdict is_one_sided_locally_unital(const FiniteRing& ring, Side side) {
  if (auto e = locally_unital_idempotent(ring, side))
    return Verdict::yes(e->str(), "single idempotent fixes every element");
  return Verdict::no("", std::string("no idempotent fixes all of R on the ") +
                             to_string(side));
}

Verdict is_locally_unital_am(const FiniteRing& ring) {
  if (auto e = locally_unital_idempotent_two_sided(ring))
    return Verdict::yes(e->str(), "single idempotent fixes every element two-sidedly");
  return Verdict::no("", "no idempotent fixes all of R two-sidedly");
}

namespace {

std::string render_set(const std::vector<RingElement>& elems) {
  std::string out = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ",";
    out += elems[i].str();
  }
  return out + "}";
}

}  // namespace

Verdict has_set_of_local_units(const FiniteRing& ring) {
  LocalUnitSetSearch search = local_unit_set_search(ring);
  if (search.units) {
    Verdict v = Verdict::yes(render_set(*search.units),
                             search.used_collapse_shortcut
                                 ? search.note
                                 : "join-closed commuting idempotent cover");
    return v;
  }
  return Verdict::no("", search.used_collapse_shortcut
                             ? search.note + "; ring is not unital"
                             : "no join-closed commuting idempotent cover exists");
}

Verdict has_enough_idempotents(const FiniteRing& ring) {
  auto family = enough_idempotents_search(ring);
  // Cross-validation against the finite collapse: a finite ring has enough
  // idempotents exactly when it is unital.
  bool unital = locally_unital_idempotent_two_sided(ring).has_value() &&
                !one_sided_identities(ring, Side::left).empty() &&
                !one_sided_identities(ring, Side::right).empty();
  if (family.has_value() != unital)
    throw InternalCheckFailed("enough-idempotents search disagrees with collapse");
  if (family) {
    if (!verify_complete_idempotents(ring, *family))
      throw InternalCheckFailed("complete family failed re-verification");
    return Verdict::yes(render_set(*family), "complete orthogonal family");
  }
  return Verdict::no("", "no complete family of nonzero orthogonal idempotents");
}

Verdict is_one_sided_unital(const FiniteRing& ring, Side side) {
  std::vector<RingElement> ids = one_sided_identities(ring, side);
  if (ids.empty())
    return Verdict::no("", std::string("no ") + to_string(side) + " identity");
  return Verdict::yes(render_set(ids), "identities found by exhaustion");
}

Verdict is_unital(const FiniteRing& ring) {
  for (RingElement e : ring.elements()) {
    bool two_sided = true;
    for (RingElement r : ring.elements())
      if (ring.mul(e, r) != r || ring.mul(r, e) != r) {
        two_sided = false;
        break;
      }
    if (two_sided) {
      // Uniqueness: any left identity equals any right identity.
      for (const RingElement& l : one_sided_identities(ring, Side::left))
        for (const RingElement& r : one_sided_identities(ring, Side::right))
          if (l != r || l != e)
            throw InternalCheckFailed("identity is not unique");
      return Verdict::yes(e.str(), "two-sided identity, unique");
    }
  }
  return Verdict::no("", "no two-sided identity");
}

Verdict is_regular(const FiniteRing& ring) {
  RegularSearch search = regular_search(ring);
  if (search.holds()) return Verdict::yes("", "quasi-inverse found for every element");
  return Verdict::no(search.counterexample->str(), "no s with r = rsr");
}

// ---------------------------------------------------------------------------
// Aggregation

Classification classify(const FiniteRing& ring) {
  Classification c;
  c.ring_name = ring.name();
  c.size = ring.size();

  Verdict left_s = is_one_sided_s_unital(ring, Side::left);
  Verdict right_s = is_one_sided_s_unital(ring, Side::right);
  Verdict left_lu = is_one_sided_locally_unital(ring, Side::left);
  Verdict right_lu = is_one_sided_locally_unital(ring, Side::right);
  Verdict lu = is_locally_unital_am(ring);
  Verdict left_u = is_one_sided_unital(ring, Side::left);
  Verdict right_u = is_one_sided_unital(ring, Side::right);

  c.classes[cls::idempotent_ring] = is_idempotent_ring(ring);
  c.classes[cls::left_s_unital] = left_s;
  c.classes[cls::right_s_unital] = right_s;
  if (left_s.is_yes() && right_s.is_yes()) {
    // The single two-sided unit exists by the finite collapse.
    auto e = locally_unital_idempotent_two_sided(ring);
    c.classes[cls::s_unital] =
        Verdict::yes(e ? e->str() : "", "left and right s-unital");
  } else {
    const Verdict& bad = left_s.is_no() ? left_s : right_s;
    c.classes[cls::s_unital] =
        Verdict::no(bad.counterexample, left_s.is_no() ? "not left s-unital"
                                                       : "not right s-unital");
  }
  c.classes[cls::left_locally_unital] = left_lu;
  c.classes[cls::right_locally_unital] = right_lu;
  c.classes[cls::locally_unital] = lu;
  c.classes[cls::has_local_unit_set] = has_set_of_local_units(ring);
  c.classes[cls::has_enough_idempotents] = has_enough_idempotents(ring);
  c.classes[cls::left_unital] = left_u;
  c.classes[cls::right_unital] = right_u;
  c.classes[cls::unital] = is_unital(ring);
  c.classes[cls::regular] = is_regular(ring);

  check_hierarchy(c);
  return c;
}

// ---------------------------------------------------------------------------
// Computable rings: facts + verified capabilities + implication closure

namespace {

std::vector<std::vector<CValue>> sample_sets(const ComputableRing& ring,
                                             std::mt19937_64& rng, int count) {
  std::vector<std::vector<CValue>> sets;
  for (int i = 0; i < count; ++i) {
    std::vector<CValue> set;
    std::size_t n = 1 + rng() % 3;
    for (std::size_t j = 0; j < n; ++j) set.push_back(ring.sample(rng));
    sets.push_back(std::move(set));
  }
  return sets;
}

void verify_capabilities(const ComputableRing& ring, const ClassifyOptions& opts,
                         std::mt19937_64& rng) {
  auto fact_yes = [&](const char* key) {
    auto it = ring.facts.find(key);
    return it != ring.facts.end() && it->second.holds;
  };

  auto sets = sample_sets(ring, rng, opts.samples);

  if (ring.s_unit_for) {
    for (Side side : {Side::left, Side::right}) {
      const char* key = side == Side::left ? cls::left_s_unital : cls::right_s_unital;
      if (!fact_yes(key)) continue;
      for (const auto& set : sets) {
        auto u = ring.s_unit_for(set, side);
        if (!u)
          throw InternalCheckFailed(ring.name + ": total s-unit capability returned nothing");
        for (const CValue& m : set) {
          CValue fixed = side == Side::left ? ring.mul(*u, m) : ring.mul(m, *u);
          if (!ring.equal(fixed, m))
            throw InternalCheckFailed(ring.name + ": s-unit failed to fix " + ring.show(m));
        }
      }
    }
  }

  if (ring.idempotent_unit_for && fact_yes(cls::locally_unital)) {
    for (const auto& set : sets) {
      auto u = ring.idempotent_unit_for(set);
      if (!u)
        throw InternalCheckFailed(ring.name + ": idempotent-unit capability returned nothing");
      if (!ring.equal(ring.mul(*u, *u), *u))
        throw InternalCheckFailed(ring.name + ": returned unit is not idempotent");
      for (const CValue& m : set)
        if (!ring.equal(ring.mul(*u, m), m) || !ring.equal(ring.mul(m, *u), m))
          throw InternalCheckFailed(ring.name + ": idempotent unit failed to fix " +
                                    ring.show(m));
    }
  }

  if (ring.complete_family_for && fact_yes(cls::has_enough_idempotents)) {
    for (const auto& set : sets) {
      std::vector<CValue> family = ring.complete_family_for(set);
      if (!verify_complete_idempotents(ring, family, set))
        throw InternalCheckFailed(ring.name + ": complete family failed to decompose probes");
    }
  }

  if (ring.quasi_inverse && fact_yes(cls::regular)) {
    for (const auto& set : sets)
      for (const CValue& m : set) {
        auto s = ring.quasi_inverse(m);
        if (!s) throw InternalCheckFailed(ring.name + ": quasi-inverse capability returned nothing");
        if (!ring.equal(ring.mul(ring.mul(m, *s), m), m))
          throw InternalCheckFailed(ring.name + ": m*s*m != m for " + ring.show(m));
      }
  }

  // Probe contract: no candidate with support within n fixes the probe
  // beyond n.  Checked mechanically for all bounds up to the configured one.
  if (ring.probe_outside && ring.bounded_candidates) {
    for (const auto& [key, fact] : ring.facts) {
      if (!fact.probe_backed || fact.holds) continue;
      Side side = key == std::string(cls::right_unital) ? Side::right : Side::left;
      for (long long n = 0; n <= opts.probe_bound; ++n) {
        CValue probe = ring.probe_outside(n);
        if (ring.is_zero(probe))
          throw InternalCheckFailed(ring.name + ": probe element is zero");
        for (const CValue& e : ring.bounded_candidates(n, rng, opts.samples)) {
          CValue fixed = side == Side::left ? ring.mul(e, probe) : ring.mul(probe, e);
          if (ring.equal(fixed, probe))
            throw InternalCheckFailed(ring.name + ": bounded candidate fixes the probe");
        }
      }
    }
  }
}

struct Implication {
  const char* a;
  const char* b;  // a => b
};

constexpr Implication kImplications[] = {
    {cls::unital, cls::has_enough_idempotents},
    {cls::has_enough_idempotents, cls::has_local_unit_set},
    {cls::has_local_unit_set, cls::locally_unital},
    {cls::locally_unital, cls::s_unital},
    {cls::s_unital, cls::idempotent_ring},
    {cls::regular, cls::locally_unital},
    {cls::unital, cls::left_unital},
    {cls::unital, cls::right_unital},
    {cls::left_unital, cls::left_locally_unital},
    {cls::right_unital, cls::right_locally_unital},
    {cls::left_locally_unital, cls::left_s_unital},
    {cls::right_locally_unital, cls::right_s_unital},
    {cls::locally_unital, cls::left_locally_unital},
    {cls::locally_unital, cls::right_locally_unital},
    {cls::s_unital, cls::left_s_unital},
    {cls::s_unital, cls::right_s_unital},
};

struct Conjunction {
  const char* a;
  const char* b;
  const char* c;  // a and b => c
};

constexpr Conjunction kConjunctions[] = {
    {cls::left_s_unital, cls::right_s_unital, cls::s_unital},
    {cls::left_locally_unital, cls::right_locally_unital, cls::locally_unital},
    {cls::left_unital, cls::right_unital, cls::unital},
    {cls::left_s_unital, cls::right_unital, cls::unital},
    {cls::right_s_unital, cls::left_unital, cls::unital},
};

void derive_closure(Classification& c) {
  auto state = [&](const char* key) { return c.classes[key].state; };
  auto set_yes = [&](const char* key, const std::string& reason,
                     std::optional<long long> bound = std::nullopt) {
    Verdict v = Verdict::yes("", reason);
    v.bound = bound;
    c.classes[key] = v;
  };
  auto set_no = [&](const char* key, const std::string& reason,
                    std::optional<long long> bound = std::nullopt) {
    Verdict v = Verdict::no("", reason);
    v.bound = bound;
    c.classes[key] = v;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& rule : kImplications) {
      if (state(rule.a) == Verdict::State::yes &&
          state(rule.b) == Verdict::State::unknown) {
        set_yes(rule.b, std::string("implied by ") + rule.a);
        changed = true;
      }
      if (state(rule.b) == Verdict::State::no &&
          state(rule.a) == Verdict::State::unknown) {
        set_no(rule.a, std::string("excluded: not ") + rule.b, c.classes[rule.b].bound);
        changed = true;
      }
    }
    for (const auto& rule : kConjunctions) {
      if (state(rule.a) == Verdict::State::yes &&
          state(rule.b) == Verdict::State::yes &&
          state(rule.c) == Verdict::State::unknown) {
        set_yes(rule.c, std::string(rule.a) + " and " + rule.b);
        changed = true;
      }
      if (state(rule.c) == Verdict::State::no) {
        if (state(rule.a) == Verdict::State::yes &&
            state(rule.b) == Verdict::State::unknown) {
          set_no(rule.b, std::string("would force ") + rule.c, c.classes[rule.c].bound);
          changed = true;
        }
        if (state(rule.b) == Verdict::State::yes &&
            state(rule.a) == Verdict::State::unknown) {
          set_no(rule.a, std::string("would force ") + rule.c, c.classes[rule.c].bound);
          changed = true;
        }
      }
    }
  }
}

}  // namespace

Classification classify(const ComputableRing& ring, const ClassifyOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  Classification c;
  c.ring_name = ring.name;
  c.probe_bound = opts.probe_bound;
  for (const char* name : Classification::class_names())
    c.classes[name] = Verdict::unknown("no decision procedure available");

  for (const auto& [key, fact] : ring.facts) {
    Verdict v = fact.holds ? Verdict::yes(fact.witness, fact.reason)
                           : Verdict::no(fact.counterexample, fact.reason);
    if (fact.probe_backed) v.bound = opts.probe_bound;
    c.classes[key] = v;
  }

  verify_capabilities(ring, opts, rng);
  derive_closure(c);
  check_hierarchy(c);
  return c;
}

// ---------------------------------------------------------------------------
// Hierarchy consistency

namespace {

void require_implies(const Classification& c, const char* a, const char* b) {
  if (c.at(a).is_yes() && c.at(b).is_no())
    throw InternalCheckFailed(std::string(c.ring_name) + ": " + a + " holds but " +
                              b + " fails");
}

}  // namespace

void check_hierarchy(const Classification& c) {
  // The inclusion chain.
  require_implies(c, cls::unital, cls::has_enough_idempotents);
  require_implies(c, cls::has_enough_idempotents, cls::has_local_unit_set);
  require_implies(c, cls::has_local_unit_set, cls::locally_unital);
  require_implies(c, cls::locally_unital, cls::s_unital);
  require_implies(c, cls::s_unital, cls::idempotent_ring);
  // Regular rings are locally unital.
  require_implies(c, cls::regular, cls::locally_unital);
  // One-sided refinements.
  require_implies(c, cls::unital, cls::left_unital);
  require_implies(c, cls::unital, cls::right_unital);
  require_implies(c, cls::left_unital, cls::left_locally_unital);
  require_implies(c, cls::right_unital, cls::right_locally_unital);
  require_implies(c, cls::left_locally_unital, cls::left_s_unital);
  require_implies(c, cls::right_locally_unital, cls::right_s_unital);
  require_implies(c, cls::locally_unital, cls::left_locally_unital);
  require_implies(c, cls::locally_unital, cls::right_locally_unital);
  require_implies(c, cls::s_unital, cls::left_s_unital);
  require_implies(c, cls::s_unital, cls::right_s_unital);

  auto both = [&c](const char* l, const char* r, const char* two) {
    if (c.at(l).is_yes() && c.at(r).is_yes() && c.at(two).is_no())
      throw InternalCheckFailed(std::string(c.ring_name) + ": " + l + " and " + r +
                                " hold but " + two + " fails");
  };
  both(cls::left_s_unital, cls::right_s_unital, cls::s_unital);
  both(cls::left_locally_unital, cls::right_locally_unital, cls::locally_unital);
  both(cls::left_unital, cls::right_unital, cls::unital);
  // Left s-unital + right unital forces unitality (and mirrored).
  both(cls::left_s_unital, cls::right_unital, cls::unital);
  both(cls::right_s_unital, cls::left_unital, cls::unital);
}

}  // namespace ringlab
