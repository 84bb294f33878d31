#include "ringlab/witnesses.hpp"

namespace ringlab {

RingOps<RingElement> ops_of(const FiniteRing& ring) {
  auto r = std::make_shared<const FiniteRing>(ring);
  RingOps<RingElement> ops;
  ops.zero = [r] { return r->zero(); };
  ops.add = [](const RingElement& a, const RingElement& b) { return a + b; };
  ops.mul = [r](const RingElement& a, const RingElement& b) { return r->mul(a, b); };
  ops.neg = [](const RingElement& a) { return -a; };
  ops.equal = [](const RingElement& a, const RingElement& b) { return a == b; };
  ops.show = [](const RingElement& a) { return a.str(); };
  return ops;
}

RingOps<CValue> ops_of(const ComputableRing& ring) {
  auto r = std::make_shared<const ComputableRing>(ring);
  RingOps<CValue> ops;
  ops.zero = [r] { return r->zero(); };
  ops.add = [r](const CValue& a, const CValue& b) { return r->add(a, b); };
  ops.mul = [r](const CValue& a, const CValue& b) { return r->mul(a, b); };
  ops.neg = [r](const CValue& a) { return r->neg(a); };
  ops.equal = [r](const CValue& a, const CValue& b) { return r->equal(a, b); };
  ops.show = [r](const CValue& a) { return r->show(a); };
  return ops;
}

RingElement join(const FiniteRing& ring, const RingElement& a, const RingElement& b) {
  return a + b - ring.mul(a, b);
}

JoinReport<RingElement> join_analysis(const FiniteRing& ring, const RingElement& e1,
                                      const RingElement& e2) {
  return join_analysis(ops_of(ring), e1, e2);
}

RingElement quasi_inverse(const FiniteRing& ring, const RingElement& r) {
  for (RingElement s : ring.elements())
    if (ring.mul(ring.mul(r, s), r) == r) return s;
  throw NotRegularAt(r.str());
}

RingElement promote_to_identity(const FiniteRing& ring, Side known_unital_side) {
  Side s_side = opposite(known_unital_side);
  std::vector<RingElement> ids = one_sided_identities(ring, known_unital_side);
  if (ids.empty())
    throw HypothesisFailed("ring is not " + std::string(to_string(known_unital_side)) +
                           " unital");
  SUnitalSearch search = s_unital_search(ring, s_side);
  if (!search.holds())
    throw HypothesisFailed("ring is not " + std::string(to_string(s_side)) +
                           " s-unital; counterexample " +
                           search.counterexample->str());

  // With both hypotheses verified, the one-sided identity is two-sided.
  const RingElement& f = ids.front();
  for (RingElement r : ring.elements())
    if (ring.mul(f, r) != r || ring.mul(r, f) != r)
      throw InternalCheckFailed("promoted identity fails an element");
  // Uniqueness: any left identity equals any right identity.
  for (Side side : {Side::left, Side::right})
    for (const RingElement& e : one_sided_identities(ring, side))
      if (e != f) throw InternalCheckFailed("one-sided identity differs from f");
  return f;
}

UnitOracle<RingElement> brute_force_unit_oracle(const FiniteRing& ring) {
  auto r = std::make_shared<const FiniteRing>(ring);
  return [r](const RingElement& m, Side side) -> std::optional<RingElement> {
    for (RingElement e : r->elements()) {
      RingElement p = side == Side::left ? r->mul(e, m) : r->mul(m, e);
      if (p == m) return e;
    }
    return std::nullopt;
  };
}

QuasiInverseOracle<RingElement> brute_force_quasi_inverse_oracle(const FiniteRing& ring) {
  auto r = std::make_shared<const FiniteRing>(ring);
  return [r](const RingElement& m) -> std::optional<RingElement> {
    for (RingElement s : r->elements())
      if (r->mul(r->mul(m, s), m) == m) return s;
    return std::nullopt;
  };
}

IdempotentUnitOracle<RingElement> brute_force_idempotent_unit_oracle(
    const FiniteRing& ring) {
  auto r = std::make_shared<const FiniteRing>(ring);
  return [r](std::span<const RingElement> elements,
             Side side) -> std::optional<RingElement> {
    for (const RingElement& e : r->idempotents()) {
      bool fixes = true;
      for (const RingElement& m : elements) {
        RingElement p = side == Side::left ? r->mul(e, m) : r->mul(m, e);
        if (p != m) {
          fixes = false;
          break;
        }
      }
      if (fixes) return e;
    }
    return std::nullopt;
  };
}

UnitOracle<CValue> capability_unit_oracle(const ComputableRing& ring) {
  auto r = std::make_shared<const ComputableRing>(ring);
  return [r](const CValue& m, Side side) -> std::optional<CValue> {
    if (!r->s_unit_for) return std::nullopt;
    std::vector<CValue> one{m};
    return r->s_unit_for(one, side);
  };
}

QuasiInverseOracle<CValue> capability_quasi_inverse_oracle(const ComputableRing& ring) {
  auto r = std::make_shared<const ComputableRing>(ring);
  return [r](const CValue& m) -> std::optional<CValue> {
    if (!r->quasi_inverse) return std::nullopt;
    return r->quasi_inverse(m);
  };
}

IdempotentUnitOracle<CValue> capability_idempotent_unit_oracle(
    const ComputableRing& ring) {
  auto r = std::make_shared<const ComputableRing>(ring);
  return [r](std::span<const CValue> elements, Side) -> std::optional<CValue> {
    if (!r->idempotent_unit_for) return std::nullopt;
    return r->idempotent_unit_for(elements);
  };
}

}  // namespace ringlab
