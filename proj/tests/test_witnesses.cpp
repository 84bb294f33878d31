#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ringlab/constructions.hpp"
#include "ringlab/witnesses.hpp"

using namespace ringlab;

namespace {

FiniteRing m2f2() { return matrix_ring(prime_field(2), 2); }

RingElement unit_of(const FiniteRing& m2, std::size_t r, std::size_t c) {
  return matrix_unit(m2, MatrixLayout{2, 2}, r, c);
}

}  // namespace

TEST_CASE("join") {
  FiniteRing ff = direct_sum({prime_field(2), prime_field(2)});
  CHECK(join(ff, ff.element({1, 0}), ff.element({0, 1})) == ff.element({1, 1}));

  FiniteRing z8 = unital_cyclic(8);
  CHECK(join(z8, z8.element({3}), z8.element({5})) == z8.element({1}));

  FiniteRing m2 = m2f2();
  for (const RingElement& e : m2.idempotents()) CHECK(join(m2, e, e) == e);
}

TEST_CASE("join_analysis: the non-idempotent join in M2(F2)") {
  FiniteRing m2 = m2f2();
  RingElement e1 = unit_of(m2, 0, 0);                 // e'
  RingElement e2 = m2.element({0, 1, 0, 1});          // e'' = [[0,1],[0,1]]
  JoinReport<RingElement> rep = join_analysis(m2, e1, e2);
  CHECK(rep.joined == m2.element({1, 1, 0, 1}));      // [[1,1],[0,1]]
  CHECK(rep.square == *find_identity(m2));            // e^2 = I
  CHECK_FALSE(rep.defect_zero);
  CHECK(rep.expansion_holds);
  for (bool cond : rep.conditions) CHECK_FALSE(cond);
}

TEST_CASE("join_analysis: degenerate cases are idempotent") {
  FiniteRing ff = direct_sum({prime_field(2), prime_field(2)});
  JoinReport<RingElement> orth =
      join_analysis(ff, ff.element({1, 0}), ff.element({0, 1}));
  CHECK(orth.conditions[4]);  // (v): orthogonal idempotents commute
  CHECK(orth.defect_zero);
  CHECK(orth.joined == ff.element({1, 1}));

  FiniteRing m2 = m2f2();
  for (const RingElement& e : m2.idempotents()) {
    JoinReport<RingElement> same = join_analysis(m2, e, e);
    for (bool cond : same.conditions) CHECK(cond);
    CHECK(same.defect_zero);
    CHECK(same.joined == e);
  }

  CHECK_THROWS_AS(join_analysis(m2, unit_of(m2, 0, 1), unit_of(m2, 0, 0)),
                  NotIdempotentInput);
}

TEST_CASE("expansion identity over all idempotent pairs of small rings") {
  for (const FiniteRing& ring :
       {m2f2(), twisted_semigroup_ring(2), pairs_left(2), unital_cyclic(8)}) {
    auto idem = ring.idempotents();
    for (const RingElement& a : idem)
      for (const RingElement& b : idem) {
        JoinReport<RingElement> rep = join_analysis(ring, a, b);
        CHECK(rep.expansion_holds);
        for (int i = 0; i < 5; ++i)
          if (rep.conditions[i]) CHECK(rep.defect_zero);
      }
  }
}

TEST_CASE("common one-sided unit: the worked trace") {
  FiniteRing ff = direct_sum({prime_field(2), prime_field(2)});
  std::vector<RingElement> elems{ff.element({1, 0}), ff.element({0, 1})};
  UnitTrace<RingElement> trace;
  RingElement e = common_one_sided_unit(ops_of(ff), std::span<const RingElement>(elems),
                                        Side::left, brute_force_unit_oracle(ff), &trace);
  CHECK(e == ff.element({1, 1}));
  REQUIRE(trace.steps.size() == 2);
  const auto& top = trace.steps.back();
  CHECK(top.base_unit == ff.element({0, 1}));               // e_n
  REQUIRE(top.residuals.size() == 1);
  CHECK(top.residuals[0] == ff.element({1, 0}));            // v_1
  CHECK(trace.steps.front().combined == ff.element({1, 0})); // e'
}

TEST_CASE("common unit examples") {
  FiniteRing bl = pairs_left(2);
  std::vector<RingElement> elems{bl.element({0, 1}), bl.element({1, 1})};
  RingElement e = common_one_sided_unit(ops_of(bl), std::span<const RingElement>(elems),
                                        Side::left, brute_force_unit_oracle(bl));
  CHECK(e == bl.element({1, 0}));

  FiniteRing z4 = unital_cyclic(4);
  std::vector<RingElement> all{z4.element({1}), z4.element({2}), z4.element({3})};
  RingElement two_sided = common_two_sided_unit(
      ops_of(z4), std::span<const RingElement>(all), brute_force_unit_oracle(z4));
  CHECK(two_sided == z4.element({1}));

  // empty request: the zero element is a vacuous unit
  RingElement vacuous = common_one_sided_unit(
      ops_of(z4), std::span<const RingElement>(), Side::left,
      brute_force_unit_oracle(z4));
  CHECK(vacuous.is_zero());

  // a unital oracle that always answers with the identity
  FiniteRing m2 = m2f2();
  RingElement one = *find_identity(m2);
  UnitOracle<RingElement> id_oracle = [one](const RingElement&, Side) {
    return std::optional<RingElement>(one);
  };
  std::vector<RingElement> ms{unit_of(m2, 0, 1)};
  CHECK(common_two_sided_unit(ops_of(m2), std::span<const RingElement>(ms), id_oracle) ==
        one);

  // finite-rank matrices, capability oracle: {E01, E22} combine to the
  // diagonal projection on {0,1,2}
  ComputableRing fr = finite_rank_matrix_ring(prime_field(2));
  RingOps<CValue> fops = ops_of(fr);
  RingElement f2one = prime_field(2).element({1});
  auto sparse_unit = [&](long long r, long long c) {
    SparseMatrix m;
    m.entries.emplace(std::make_pair(r, c), f2one);
    return CValue(m);
  };
  std::vector<CValue> fr_elems{sparse_unit(0, 1), sparse_unit(2, 2)};
  CValue combined = common_two_sided_unit(fops, std::span<const CValue>(fr_elems),
                                          capability_unit_oracle(fr));
  SparseMatrix diag012;
  for (long long i : {0, 1, 2}) diag012.entries.emplace(std::make_pair(i, i), f2one);
  CHECK(fops.equal(combined, CValue(diag012)));
}

TEST_CASE("common unit fails with OracleFailed off the s-unital side") {
  FiniteRing bl = pairs_left(2);
  std::vector<RingElement> elems{bl.element({0, 1})};
  CHECK_THROWS_AS(common_one_sided_unit(ops_of(bl), std::span<const RingElement>(elems),
                                        Side::right, brute_force_unit_oracle(bl)),
                  OracleFailed);
}

TEST_CASE("the two join orders are pinned by the trace") {
  std::mt19937_64 rng(41);
  for (const FiniteRing& ring : {m2f2(), pairs_left(2)}) {
    RingOps<RingElement> ops = ops_of(ring);
    UnitOracle<RingElement> oracle = brute_force_unit_oracle(ring);
    SUnitalSearch left_ok = s_unital_search(ring, Side::left);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<RingElement> elems;
      for (int i = 0; i < 3; ++i)
        elems.push_back(ring.group().from_index(rng() % ring.size()));
      if (!left_ok.holds()) continue;
      UnitTrace<RingElement> trace;
      common_one_sided_unit(ops, std::span<const RingElement>(elems), Side::left,
                            oracle, &trace);
      // level l combines as e' v e_n with e' the previous level's unit
      for (std::size_t l = 1; l < trace.steps.size(); ++l)
        CHECK(trace.steps[l].combined ==
              join(ring, trace.steps[l - 1].combined, trace.steps[l].base_unit));
    }
  }
  // right side mirrors the order: e_n v e'
  FiniteRing br = pairs_right(2);
  std::vector<RingElement> elems{br.element({0, 1}), br.element({1, 1})};
  UnitTrace<RingElement> trace;
  common_one_sided_unit(ops_of(br), std::span<const RingElement>(elems), Side::right,
                        brute_force_unit_oracle(br), &trace);
  for (std::size_t l = 1; l < trace.steps.size(); ++l)
    CHECK(trace.steps[l].combined ==
          join(br, trace.steps[l].base_unit, trace.steps[l - 1].combined));
}

TEST_CASE("merge_local_units") {
  ComputableRing fr = finite_rank_matrix_ring(prime_field(2));
  RingOps<CValue> ops = ops_of(fr);
  RingElement one = prime_field(2).element({1});
  auto diag = [&](std::vector<long long> idx) {
    SparseMatrix m;
    for (long long i : idx) m.entries.emplace(std::make_pair(i, i), one);
    return CValue(m);
  };
  auto eu = [&](long long r, long long c) {
    SparseMatrix m;
    m.entries.emplace(std::make_pair(r, c), one);
    return CValue(m);
  };
  std::vector<CValue> first{eu(0, 0)}, second{eu(1, 1)};
  CValue merged = merge_local_units(ops, diag({0}), diag({1}),
                                    std::span<const CValue>(first),
                                    std::span<const CValue>(second));
  CHECK(ops.equal(merged, diag({0, 1})));

  // Abrams' I: 0/1 functions join to the union of supports
  ComputableRing abrams = supported_direct_sum(prime_field(2));
  RingOps<CValue> aops = ops_of(abrams);
  auto fs = [&](std::vector<long long> idx) {
    SupportedElement f;
    for (long long i : idx) f.parts.emplace(i, one);
    return CValue(f);
  };
  std::vector<CValue> fa{fs({0, 2})}, fb{fs({2, 5})};
  CValue fj = merge_local_units(aops, fs({0, 2}), fs({2, 5}),
                                std::span<const CValue>(fa),
                                std::span<const CValue>(fb));
  CHECK(aops.equal(fj, fs({0, 2, 5})));

  // equal inputs are idempotent under merge
  CValue same = merge_local_units(aops, fs({1}), fs({1}), std::span<const CValue>(),
                                  std::span<const CValue>());
  CHECK(aops.equal(same, fs({1})));

  // non-commuting idempotents are rejected
  FiniteRing m2 = m2f2();
  RingElement p = unit_of(m2, 0, 0);
  RingElement q = m2.element({1, 1, 0, 0});  // [[1,1],[0,0]], idempotent
  REQUIRE(m2.mul(q, q) == q);
  REQUIRE(m2.mul(p, q) != m2.mul(q, p));
  CHECK_THROWS_AS(merge_local_units(ops_of(m2), p, q, std::span<const RingElement>(),
                                    std::span<const RingElement>()),
                  NotCommuting);
}

TEST_CASE("quasi_inverse") {
  FiniteRing m2 = m2f2();
  CHECK(quasi_inverse(m2, unit_of(m2, 0, 1)) == unit_of(m2, 1, 0));
  FiniteRing z4 = unital_cyclic(4);
  CHECK(quasi_inverse(z4, z4.element({1})) == z4.element({1}));
  CHECK_THROWS_AS(quasi_inverse(z4, z4.element({2})), NotRegularAt);
}

TEST_CASE("regular_local_unit: single-step trace on M2(F2)") {
  FiniteRing m2 = m2f2();
  std::vector<RingElement> elems{unit_of(m2, 0, 1)};
  RegularTrace<RingElement> trace;
  RingElement e = regular_local_unit(ops_of(m2), Side::left,
                                     std::span<const RingElement>(elems),
                                     brute_force_quasi_inverse_oracle(m2), &trace);
  CHECK(e == unit_of(m2, 0, 0));
  REQUIRE(trace.steps.size() == 1);
  CHECK(trace.steps[0].residual == unit_of(m2, 0, 1));       // s
  CHECK(trace.steps[0].quasi_inverse == unit_of(m2, 1, 0));  // t
  CHECK(trace.steps[0].projection == unit_of(m2, 0, 0));     // f = st
  CHECK(m2.mul(e, unit_of(m2, 0, 1)) == unit_of(m2, 0, 1));
}

TEST_CASE("regular_local_unit: two-step recursion and degenerate input") {
  FiniteRing m2 = m2f2();
  std::vector<RingElement> elems{unit_of(m2, 0, 1), unit_of(m2, 1, 0)};
  for (Side side : {Side::left, Side::right}) {
    RingElement e = regular_local_unit(ops_of(m2), side,
                                       std::span<const RingElement>(elems),
                                       brute_force_quasi_inverse_oracle(m2));
    CHECK(m2.mul(e, e) == e);
    for (const RingElement& r : elems) {
      RingElement fixed = side == Side::left ? m2.mul(e, r) : m2.mul(r, e);
      CHECK(fixed == r);
    }
  }

  std::vector<RingElement> zero{m2.zero()};
  CHECK(regular_local_unit(ops_of(m2), Side::left, std::span<const RingElement>(zero),
                           brute_force_quasi_inverse_oracle(m2))
            .is_zero());

  // a non-regular element makes the oracle fail
  FiniteRing z4 = unital_cyclic(4);
  std::vector<RingElement> bad{z4.element({2})};
  CHECK_THROWS_AS(
      regular_local_unit(ops_of(z4), Side::left, std::span<const RingElement>(bad),
                         brute_force_quasi_inverse_oracle(z4)),
      OracleFailed);
}

TEST_CASE("two_sided_idempotent_unit") {
  ComputableRing fr = finite_rank_matrix_ring(prime_field(2));
  RingOps<CValue> ops = ops_of(fr);
  IdempotentUnitOracle<CValue> oracle = capability_idempotent_unit_oracle(fr);
  RingElement one = prime_field(2).element({1});
  SparseMatrix e01;
  e01.entries.emplace(std::make_pair(0, 1), one);
  std::vector<CValue> elems{CValue(e01)};
  CValue e = two_sided_idempotent_unit(ops, std::span<const CValue>(elems), oracle, oracle);
  SparseMatrix expect;
  expect.entries.emplace(std::make_pair(0, 0), one);
  expect.entries.emplace(std::make_pair(1, 1), one);
  CHECK(ops.equal(e, CValue(expect)));

  // oracles answering with the identity give the identity
  FiniteRing m2 = m2f2();
  RingElement id = *find_identity(m2);
  IdempotentUnitOracle<RingElement> id_oracle =
      [id](std::span<const RingElement>, Side) {
        return std::optional<RingElement>(id);
      };
  std::vector<RingElement> ms{unit_of(m2, 0, 1)};
  CHECK(two_sided_idempotent_unit(ops_of(m2), std::span<const RingElement>(ms),
                                  id_oracle, id_oracle) == id);

  // oracles answering E00 on {E00} give E00
  RingElement e00 = unit_of(m2, 0, 0);
  IdempotentUnitOracle<RingElement> e00_oracle =
      [e00](std::span<const RingElement>, Side) {
        return std::optional<RingElement>(e00);
      };
  std::vector<RingElement> just{e00};
  CHECK(two_sided_idempotent_unit(ops_of(m2), std::span<const RingElement>(just),
                                  e00_oracle, e00_oracle) == e00);

  // no right idempotent unit exists for (0,1) in pairs_left
  FiniteRing bl = pairs_left(2);
  IdempotentUnitOracle<RingElement> bl_oracle = brute_force_idempotent_unit_oracle(bl);
  std::vector<RingElement> stuck{bl.element({0, 1})};
  CHECK_THROWS_AS(two_sided_idempotent_unit(ops_of(bl),
                                            std::span<const RingElement>(stuck),
                                            bl_oracle, bl_oracle),
                  OracleFailed);
}

TEST_CASE("promote_to_identity") {
  FiniteRing z4 = unital_cyclic(4);
  CHECK(promote_to_identity(z4, Side::right) == z4.element({1}));
  CHECK(promote_to_identity(z4, Side::left) == z4.element({1}));

  FiniteRing m2 = m2f2();
  CHECK(promote_to_identity(m2, Side::right) == *find_identity(m2));

  // pairs_right is right unital but not left s-unital
  CHECK_THROWS_AS(promote_to_identity(pairs_right(2), Side::right), HypothesisFailed);
  // pairs_left mirrored
  CHECK_THROWS_AS(promote_to_identity(pairs_left(2), Side::left), HypothesisFailed);
  // and a ring with no identity on the claimed side at all
  CHECK_THROWS_AS(promote_to_identity(zero_ring({2}), Side::right), HypothesisFailed);
}
