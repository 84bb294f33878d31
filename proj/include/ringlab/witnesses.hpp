#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ringlab/classify.hpp"

namespace ringlab {

/// The arithmetic surface the witness algorithms need.  The same algorithms
/// run over finite rings (brute-force oracles) and computable rings
/// (capability oracles).
template <class E>
struct RingOps {
  std::function<E()> zero;
  std::function<E(const E&, const E&)> add;
  std::function<E(const E&, const E&)> mul;
  std::function<E(const E&)> neg;
  std::function<bool(const E&, const E&)> equal;
  std::function<std::string(const E&)> show;
};

RingOps<RingElement> ops_of(const FiniteRing& ring);
RingOps<CValue> ops_of(const ComputableRing& ring);

/// The unit-combining join a v b = a + b - ab.  No idempotency assumed.
template <class E>
E join(const RingOps<E>& ops, const E& a, const E& b) {
  return ops.add(ops.add(a, b), ops.neg(ops.mul(a, b)));
}

RingElement join(const FiniteRing& ring, const RingElement& a, const RingElement& b);

/// Analysis of e = e'' v e' for idempotents e', e'': the exact expansion
///   e^2 = e + e'e'' - e'e''e' - e''e'e'' + e''e'e''e'
/// plus the five degeneracy conditions, any one of which forces e
/// idempotent.
template <class E>
struct JoinReport {
  E first;           // e'
  E second;          // e''
  E joined;          // e = e'' v e'
  E square;          // e^2
  E square_defect;   // e^2 - e
  bool expansion_holds = false;
  // (i) e'e''=e'  (ii) e'e''=e''  (iii) e''e'=e''  (iv) e''e'=e'  (v) commute
  std::array<bool, 5> conditions{};

  bool join_idempotent() const { return defect_zero; }
  bool defect_zero = false;
};

template <class E>
JoinReport<E> join_analysis(const RingOps<E>& ops, const E& e1, const E& e2) {
  if (!ops.equal(ops.mul(e1, e1), e1))
    throw NotIdempotentInput("e' = " + ops.show(e1));
  if (!ops.equal(ops.mul(e2, e2), e2))
    throw NotIdempotentInput("e'' = " + ops.show(e2));

  JoinReport<E> report{e1, e2, join(ops, e2, e1), ops.zero(), ops.zero(), false, {},
                       false};
  report.square = ops.mul(report.joined, report.joined);
  report.square_defect = ops.add(report.square, ops.neg(report.joined));
  report.defect_zero = ops.equal(report.square_defect, ops.zero());

  const E ab = ops.mul(e1, e2);    // e'e''
  const E ba = ops.mul(e2, e1);    // e''e'
  const E aba = ops.mul(ab, e1);   // e'e''e'
  const E bab = ops.mul(e2, ab);   // e''e'e''  ( = e''(e'e'') )
  const E baba = ops.mul(bab, e1); // e''e'e''e'
  E expansion = ops.add(report.joined, ab);
  expansion = ops.add(expansion, ops.neg(aba));
  expansion = ops.add(expansion, ops.neg(bab));
  expansion = ops.add(expansion, baba);
  report.expansion_holds = ops.equal(report.square, expansion);

  report.conditions[0] = ops.equal(ab, e1);
  report.conditions[1] = ops.equal(ab, e2);
  report.conditions[2] = ops.equal(ba, e2);
  report.conditions[3] = ops.equal(ba, e1);
  report.conditions[4] = ops.equal(ab, ba);

  for (bool cond : report.conditions)
    if (cond && !report.defect_zero)
      throw InternalCheckFailed("degenerate join is not idempotent");
  return report;
}

JoinReport<RingElement> join_analysis(const FiniteRing& ring, const RingElement& e1,
                                      const RingElement& e2);

/// Single-element one-sided unit provider.
template <class E>
using UnitOracle = std::function<std::optional<E>(const E&, Side)>;

template <class E>
using QuasiInverseOracle = std::function<std::optional<E>(const E&)>;

/// One-sided idempotent unit provider for finite element sets.
template <class E>
using IdempotentUnitOracle = std::function<std::optional<E>(std::span<const E>, Side)>;

template <class E>
struct UnitStep {
  E target;                  // m_n at this level
  E base_unit;               // e_n
  std::vector<E> residuals;  // v_i = m_i - e_n m_i (m_i - m_i e_n on the right)
  E combined;                // e = e' v e_n (left) or e_n v e' (right)
};

template <class E>
struct UnitTrace {
  Side side = Side::left;
  std::vector<UnitStep<E>> steps;  // innermost level first
};

namespace detail {

template <class E>
E side_mul(const RingOps<E>& ops, Side side, const E& e, const E& m) {
  return side == Side::left ? ops.mul(e, m) : ops.mul(m, e);
}

template <class E>
E common_unit_rec(const RingOps<E>& ops, std::span<const E> elements, Side side,
                  const UnitOracle<E>& oracle, UnitTrace<E>* trace) {
  if (elements.empty()) return ops.zero();  // vacuous unit
  const E& target = elements.back();
  std::optional<E> base = oracle(target, side);
  if (!base) throw OracleFailed(ops.show(target));
  if (!ops.equal(side_mul(ops, side, *base, target), target))
    throw OracleFailed("oracle unit does not fix " + ops.show(target));

  std::vector<E> residuals;
  for (std::size_t i = 0; i + 1 < elements.size(); ++i)
    residuals.push_back(
        ops.add(elements[i], ops.neg(side_mul(ops, side, *base, elements[i]))));

  E inner = common_unit_rec(ops, std::span<const E>(residuals), side, oracle, trace);
  // The two join orders are not interchangeable: e' v e_n on the left,
  // e_n v e' on the right, exactly as the induction requires.
  E combined = side == Side::left ? join(ops, inner, *base) : join(ops, *base, inner);

  for (const E& v : residuals)
    if (!ops.equal(side_mul(ops, side, inner, v), v))
      throw InternalCheckFailed("inner unit fails a residual");
  for (const E& m : elements)
    if (!ops.equal(side_mul(ops, side, combined, m), m))
      throw InternalCheckFailed("combined unit fails an element");

  if (trace) trace->steps.push_back({target, *base, std::move(residuals), combined});
  return combined;
}

}  // namespace detail

/// Common one-sided unit for finitely many elements, built by the
/// s-unitality induction (unit for the last element, residuals, recursive
/// unit, join).  Throws OracleFailed when the ring is not s-unital on that
/// side at one of the involved elements.
template <class E>
E common_one_sided_unit(const RingOps<E>& ops, std::span<const E> elements, Side side,
                        const UnitOracle<E>& oracle, UnitTrace<E>* trace = nullptr) {
  if (trace) {
    trace->side = side;
    trace->steps.clear();
  }
  return detail::common_unit_rec(ops, elements, side, oracle, trace);
}

/// Common two-sided unit: left unit e', right unit e'', combined as
/// e'' v e', which fixes every element on both sides.
template <class E>
E common_two_sided_unit(const RingOps<E>& ops, std::span<const E> elements,
                        const UnitOracle<E>& oracle,
                        UnitTrace<E>* left_trace = nullptr,
                        UnitTrace<E>* right_trace = nullptr) {
  E left = common_one_sided_unit(ops, elements, Side::left, oracle, left_trace);
  E right = common_one_sided_unit(ops, elements, Side::right, oracle, right_trace);
  E combined = join(ops, right, left);
  for (const E& m : elements)
    if (!ops.equal(ops.mul(combined, m), m) || !ops.equal(ops.mul(m, combined), m))
      throw InternalCheckFailed("two-sided unit fails an element");
  return combined;
}

/// Combines two commuting idempotent units into one covering the union of
/// the element lists they fix.
template <class E>
E merge_local_units(const RingOps<E>& ops, const E& e1, const E& e2,
                    std::span<const E> fixed1, std::span<const E> fixed2) {
  if (!ops.equal(ops.mul(e1, e1), e1)) throw NotIdempotentInput(ops.show(e1));
  if (!ops.equal(ops.mul(e2, e2), e2)) throw NotIdempotentInput(ops.show(e2));
  if (!ops.equal(ops.mul(e1, e2), ops.mul(e2, e1))) throw NotCommuting();
  auto fixes = [&](const E& e, const E& m) {
    return ops.equal(ops.mul(e, m), m) && ops.equal(ops.mul(m, e), m);
  };
  for (const E& m : fixed1)
    if (!fixes(e1, m)) throw HypothesisFailed("e1 does not fix " + ops.show(m));
  for (const E& m : fixed2)
    if (!fixes(e2, m)) throw HypothesisFailed("e2 does not fix " + ops.show(m));

  E e = join(ops, e1, e2);
  if (!ops.equal(ops.mul(e, e), e))
    throw InternalCheckFailed("join of commuting idempotents is not idempotent");
  for (const E& m : fixed1)
    if (!fixes(e, m)) throw InternalCheckFailed("merged unit fails an element");
  for (const E& m : fixed2)
    if (!fixes(e, m)) throw InternalCheckFailed("merged unit fails an element");
  return e;
}

template <class E>
struct RegularStep {
  E target;         // r_n
  E residual;       // s = r_n - e1 r_n   (r_n - r_n e1 on the right)
  E quasi_inverse;  // t with s = s t s
  E projection;     // f = s t (left) / t s (right)
  E orthogonal;     // g with e1 g = g e1 = 0
  E combined;       // e = e1 + g
};

template <class E>
struct RegularTrace {
  Side side = Side::left;
  std::vector<RegularStep<E>> steps;
};

namespace detail {

template <class E>
E regular_unit_rec(const RingOps<E>& ops, Side side, std::span<const E> elements,
                   const QuasiInverseOracle<E>& oracle, RegularTrace<E>* trace) {
  if (elements.empty()) return ops.zero();
  E e1 = regular_unit_rec(ops, side,
                          elements.subspan(0, elements.size() - 1), oracle, trace);
  const E& target = elements.back();
  const E zero = ops.zero();

  E s = side == Side::left ? ops.add(target, ops.neg(ops.mul(e1, target)))
                           : ops.add(target, ops.neg(ops.mul(target, e1)));
  std::optional<E> t = oracle(s);
  if (!t) throw OracleFailed(ops.show(s));
  if (!ops.equal(ops.mul(ops.mul(s, *t), s), s))
    throw OracleFailed("oracle value is not a quasi-inverse of " + ops.show(s));

  E f = side == Side::left ? ops.mul(s, *t) : ops.mul(*t, s);
  if (!ops.equal(ops.mul(f, f), f))
    throw InternalCheckFailed("f is not idempotent");
  // e1 f = 0 in the left recursion, f e1 = 0 in the right one.
  if (side == Side::left) {
    if (!ops.equal(ops.mul(e1, f), zero)) throw InternalCheckFailed("e1 f != 0");
  } else {
    if (!ops.equal(ops.mul(f, e1), zero)) throw InternalCheckFailed("f e1 != 0");
  }

  E g = side == Side::left ? ops.add(f, ops.neg(ops.mul(f, e1)))
                           : ops.add(f, ops.neg(ops.mul(e1, f)));
  if (!ops.equal(ops.mul(e1, g), zero) || !ops.equal(ops.mul(g, e1), zero))
    throw InternalCheckFailed("g is not orthogonal to e1");
  if (!ops.equal(ops.mul(g, g), g)) throw InternalCheckFailed("g^2 != g");

  E e = ops.add(e1, g);
  if (!ops.equal(ops.mul(e, e), e)) throw InternalCheckFailed("e is not idempotent");
  for (const E& r : elements)
    if (!ops.equal(side_mul(ops, side, e, r), r))
      throw InternalCheckFailed("regular unit fails an element");

  if (trace) trace->steps.push_back({target, s, *t, f, g, e});
  return e;
}

}  // namespace detail

/// Idempotent one-sided unit for finitely many elements of a regular ring,
/// built from quasi-inverses exactly as in the regularity argument; all its
/// intermediate identities (f^2 = f, e1 f = 0, g^2 = g, e1 g = g e1 = 0)
/// are re-checked at runtime.
template <class E>
E regular_local_unit(const RingOps<E>& ops, Side side, std::span<const E> elements,
                     const QuasiInverseOracle<E>& oracle,
                     RegularTrace<E>* trace = nullptr) {
  if (trace) {
    trace->side = side;
    trace->steps.clear();
  }
  return detail::regular_unit_rec(ops, side, elements, oracle, trace);
}

/// First s in enumeration order with r = r s r.
RingElement quasi_inverse(const FiniteRing& ring, const RingElement& r);

/// Two-sided idempotent unit from one-sided idempotent-unit oracles: a
/// right unit e', a left unit e'' that additionally fixes e', and the join
/// e' v e'' (idempotent by condition (ii)).
template <class E>
E two_sided_idempotent_unit(const RingOps<E>& ops, std::span<const E> elements,
                            const IdempotentUnitOracle<E>& left_oracle,
                            const IdempotentUnitOracle<E>& right_oracle) {
  std::optional<E> right = right_oracle(elements, Side::right);
  if (!right) throw OracleFailed("no right idempotent unit");
  if (!ops.equal(ops.mul(*right, *right), *right))
    throw OracleFailed("right oracle returned a non-idempotent");
  for (const E& r : elements)
    if (!ops.equal(ops.mul(r, *right), r))
      throw OracleFailed("right unit fails " + ops.show(r));

  std::vector<E> extended(elements.begin(), elements.end());
  extended.push_back(*right);
  std::optional<E> left = left_oracle(std::span<const E>(extended), Side::left);
  if (!left) throw OracleFailed("no left idempotent unit");
  if (!ops.equal(ops.mul(*left, *left), *left))
    throw OracleFailed("left oracle returned a non-idempotent");
  for (const E& r : extended)
    if (!ops.equal(ops.mul(*left, r), r))
      throw OracleFailed("left unit fails " + ops.show(r));

  JoinReport<E> report = join_analysis(ops, *left, *right);
  // In the report's orientation e'' e' = e' reads as condition (ii).
  if (!report.conditions[1])
    throw InternalCheckFailed("expected condition (ii) after extending the left unit");
  const E& e = report.joined;  // e' v e''
  if (!ops.equal(ops.mul(e, e), e))
    throw InternalCheckFailed("joined unit is not idempotent");
  for (const E& r : elements)
    if (!ops.equal(ops.mul(e, r), r) || !ops.equal(ops.mul(r, e), r))
      throw InternalCheckFailed("joined unit fails an element");
  return e;
}

/// Upgrades a one-sided identity to the two-sided identity, given
/// s-unitality on the other side; refuting either hypothesis raises
/// HypothesisFailed.  Returns the (unique) identity.
RingElement promote_to_identity(const FiniteRing& ring, Side known_unital_side);

// Brute-force oracles over finite rings (first hit in enumeration order).
UnitOracle<RingElement> brute_force_unit_oracle(const FiniteRing& ring);
QuasiInverseOracle<RingElement> brute_force_quasi_inverse_oracle(const FiniteRing& ring);
IdempotentUnitOracle<RingElement> brute_force_idempotent_unit_oracle(const FiniteRing& ring);

// Capability-backed oracles over computable rings.
UnitOracle<CValue> capability_unit_oracle(const ComputableRing& ring);
QuasiInverseOracle<CValue> capability_quasi_inverse_oracle(const ComputableRing& ring);
IdempotentUnitOracle<CValue> capability_idempotent_unit_oracle(const ComputableRing& ring);

}  // namespace ringlab
