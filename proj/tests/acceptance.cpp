// Acceptance suite: one criterion per entry, one PASS/FAIL line each.
// Exits nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "ringlab/cli.hpp"
#include "ringlab/report.hpp"
#include "ringlab/ringfile.hpp"
#include "ringlab/witnesses.hpp"

using namespace ringlab;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

std::vector<FiniteRing> finite_corpus() {
  std::vector<FiniteRing> rings;
  rings.push_back(zero_ring({2}));
  rings.push_back(zero_ring({4}));
  rings.push_back(zero_ring({2, 2}));
  rings.push_back(unital_cyclic(2));
  rings.push_back(unital_cyclic(4));
  rings.push_back(unital_cyclic(8));
  rings.push_back(prime_field(3));
  rings.push_back(pairs_left(2));
  rings.push_back(pairs_right(2));
  rings.push_back(twisted_semigroup_ring(2));
  rings.push_back(matrix_ring(prime_field(2), 2));
  rings.push_back(matrix_ring(prime_field(2), 1));
  rings.push_back(direct_sum({prime_field(2), prime_field(2)}));
  rings.push_back(direct_sum({zero_ring({2}), unital_cyclic(2)}));
  rings.push_back(direct_sum({pairs_left(2), pairs_left(2)}));
  FiniteRing z4 = unital_cyclic(4);
  rings.push_back(principal_ideal_subring(z4, z4.element({2})));
  return rings;
}

RingElement sample_element(const FiniteRing& ring, std::mt19937_64& rng) {
  return ring.group().from_index(rng() % ring.size());
}

// --- criterion 1 -----------------------------------------------------------

void criterion_twisted_classification() {
  auto start = std::chrono::steady_clock::now();
  FiniteRing tw = twisted_semigroup_ring(2);
  Classification c = classify(tw);
  require(c.at(cls::idempotent_ring).is_yes(), "twisted ring must be idempotent");
  require(c.at(cls::left_s_unital).is_no(), "twisted ring must not be left s-unital");
  require(c.at(cls::right_s_unital).is_no(), "twisted ring must not be right s-unital");
  // g = ((0,0),(1,1)) is a counterexample on both sides, exhaustively
  RingElement g = tw.element({0, 0, 1, 1});
  for (RingElement e : tw.elements()) {
    require(tw.mul(e, g) != g, "g acquired a left unit");
    require(tw.mul(g, e) != g, "g acquired a right unit");
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  require(ms < 1000, "twisted classification exceeded 1s");
}

// --- criterion 2 -----------------------------------------------------------

void criterion_pairs_examples() {
  FiniteRing bl = pairs_left(2);
  std::vector<RingElement> left_ids = one_sided_identities(bl, Side::left);
  require(left_ids.size() == 2, "B_l must have exactly two left identities");
  require(left_ids[0] == bl.element({1, 0}) && left_ids[1] == bl.element({1, 1}),
          "B_l left identities must be (1,0) and (1,1)");
  for (RingElement x : bl.elements())
    require(bl.mul(bl.element({0, 1}), x).is_zero(), "(0,1)B_l must be {0}");
  Classification cbl = classify(bl);
  require(cbl.at(cls::left_s_unital).is_yes() && cbl.at(cls::left_unital).is_yes() &&
              cbl.at(cls::right_s_unital).is_no() && cbl.at(cls::right_unital).is_no() &&
              cbl.at(cls::unital).is_no(),
          "B_l classification flags");

  FiniteRing br = pairs_right(2);
  std::vector<RingElement> right_ids = one_sided_identities(br, Side::right);
  require(right_ids.size() == 2 && right_ids[0] == br.element({1, 0}) &&
              right_ids[1] == br.element({1, 1}),
          "B_r right identities must be (1,0) and (1,1)");
  for (RingElement x : br.elements())
    require(br.mul(x, br.element({0, 1})).is_zero(), "B_r(0,1) must be {0}");
  Classification cbr = classify(br);
  require(cbr.at(cls::right_s_unital).is_yes() && cbr.at(cls::right_unital).is_yes() &&
              cbr.at(cls::left_s_unital).is_no() && cbr.at(cls::left_unital).is_no() &&
              cbr.at(cls::unital).is_no(),
          "B_r classification flags");
}

// --- criterion 3 -----------------------------------------------------------

void criterion_associativity_triples() {
  FiniteRing tw = twisted_semigroup_ring(2);
  for (RingElement a : tw.elements())
    for (RingElement b : tw.elements())
      for (RingElement c : tw.elements())
        require(tw.mul(tw.mul(a, b), c) == tw.mul(a, tw.mul(b, c)),
                "twisted ring associativity");
  for (const FiniteRing& ring : {pairs_left(2), pairs_right(2)})
    for (RingElement a : ring.elements())
      for (RingElement b : ring.elements())
        for (RingElement c : ring.elements())
          require(ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c)),
                  "pair ring associativity");
}

// --- criterion 4 -----------------------------------------------------------

void criterion_join_expansion() {
  for (const FiniteRing& ring : finite_corpus()) {
    if (ring.size() > 64) continue;
    auto idem = ring.idempotents();
    for (const RingElement& a : idem)
      for (const RingElement& b : idem) {
        JoinReport<RingElement> rep = join_analysis(ring, a, b);
        require(rep.expansion_holds, "expansion identity failed in " + ring.name());
        for (int i = 0; i < 5; ++i)
          if (rep.conditions[i])
            require(rep.defect_zero, "condition did not force idempotency");
      }
  }
  // the specific non-idempotent join in M2(F2)
  FiniteRing m2 = matrix_ring(prime_field(2), 2);
  JoinReport<RingElement> rep =
      join_analysis(m2, m2.element({1, 0, 0, 0}), m2.element({0, 1, 0, 1}));
  require(rep.joined == m2.element({1, 1, 0, 1}), "join must be [[1,1],[0,1]]");
  require(!rep.defect_zero, "that join must not be idempotent");
  require(rep.square == *find_identity(m2), "its square must be the identity");
  require(rep.expansion_holds, "expansion identity on the specific pair");
  for (bool cond : rep.conditions) require(!cond, "no degeneracy condition may hold");
}

// --- criterion 5 -----------------------------------------------------------

void verify_unit_trace(const FiniteRing& ring, const UnitTrace<RingElement>& trace,
                       Side side) {
  for (std::size_t l = 0; l < trace.steps.size(); ++l) {
    const auto& step = trace.steps[l];
    auto fix = [&](const RingElement& e, const RingElement& m) {
      return side == Side::left ? ring.mul(e, m) : ring.mul(m, e);
    };
    require(fix(step.base_unit, step.target) == step.target,
            "e_n does not fix its target");
    if (l > 0) {
      const RingElement& inner = trace.steps[l - 1].combined;
      for (const RingElement& v : step.residuals)
        require(fix(inner, v) == v, "e' does not fix a residual");
      RingElement expected = side == Side::left
                                 ? join(ring, inner, step.base_unit)
                                 : join(ring, step.base_unit, inner);
      require(step.combined == expected, "join order violated");
    }
  }
}

void criterion_common_units() {
  std::vector<FiniteRing> s_unital;
  for (const FiniteRing& ring : finite_corpus())
    if (classify(ring).at(cls::s_unital).is_yes()) s_unital.push_back(ring);
  require(s_unital.size() >= 5, "expected several s-unital corpus rings");

  std::mt19937_64 rng(0xACCE55);
  int finite_requests = 800;
  for (int i = 0; i < finite_requests; ++i) {
    const FiniteRing& ring = s_unital[i % s_unital.size()];
    RingOps<RingElement> ops = ops_of(ring);
    UnitOracle<RingElement> oracle = brute_force_unit_oracle(ring);
    std::vector<RingElement> elems;
    std::size_t n = 1 + rng() % 4;
    for (std::size_t j = 0; j < n; ++j) elems.push_back(sample_element(ring, rng));

    switch (rng() % 3) {
      case 0: {
        UnitTrace<RingElement> trace;
        RingElement e = common_one_sided_unit(ops, std::span<const RingElement>(elems),
                                              Side::left, oracle, &trace);
        for (const RingElement& m : elems)
          require(ring.mul(e, m) == m, "left unit fails");
        verify_unit_trace(ring, trace, Side::left);
        break;
      }
      case 1: {
        UnitTrace<RingElement> trace;
        RingElement e = common_one_sided_unit(ops, std::span<const RingElement>(elems),
                                              Side::right, oracle, &trace);
        for (const RingElement& m : elems)
          require(ring.mul(m, e) == m, "right unit fails");
        verify_unit_trace(ring, trace, Side::right);
        break;
      }
      default: {
        RingElement e =
            common_two_sided_unit(ops, std::span<const RingElement>(elems), oracle);
        for (const RingElement& m : elems)
          require(ring.mul(e, m) == m && ring.mul(m, e) == m, "two-sided unit fails");
      }
    }
  }

  // 200 capability-backed requests over the computable members
  ComputableRing sum_bl = supported_direct_sum(pairs_left(2));
  ComputableRing abrams = supported_direct_sum(prime_field(2));
  ComputableRing funring = piecewise_function_ring();
  int computable_requests = 200;
  for (int i = 0; i < computable_requests; ++i) {
    const ComputableRing& ring = i % 3 == 0 ? sum_bl : (i % 3 == 1 ? abrams : funring);
    RingOps<CValue> ops = ops_of(ring);
    UnitOracle<CValue> oracle = capability_unit_oracle(ring);
    std::vector<CValue> elems;
    std::size_t n = 1 + rng() % 3;
    for (std::size_t j = 0; j < n; ++j) elems.push_back(ring.sample(rng));
    if (i % 3 == 0) {
      CValue e = common_one_sided_unit(ops, std::span<const CValue>(elems), Side::left,
                                       oracle);
      for (const CValue& m : elems)
        require(ring.equal(ring.mul(e, m), m), "capability left unit fails");
    } else {
      CValue e = common_two_sided_unit(ops, std::span<const CValue>(elems), oracle);
      for (const CValue& m : elems)
        require(ring.equal(ring.mul(e, m), m) && ring.equal(ring.mul(m, e), m),
                "capability two-sided unit fails");
    }
  }
}

// --- criterion 6 -----------------------------------------------------------

void verify_regular_trace(const FiniteRing& ring, const RegularTrace<RingElement>& trace,
                          Side side) {
  RingElement prev = ring.zero();
  for (const auto& step : trace.steps) {
    require(ring.mul(step.projection, step.projection) == step.projection, "f^2 != f");
    if (side == Side::left)
      require(ring.mul(prev, step.projection).is_zero(), "e1 f != 0");
    else
      require(ring.mul(step.projection, prev).is_zero(), "f e1 != 0");
    require(ring.mul(step.orthogonal, step.orthogonal) == step.orthogonal, "g^2 != g");
    require(ring.mul(prev, step.orthogonal).is_zero() &&
                ring.mul(step.orthogonal, prev).is_zero(),
            "g not orthogonal to e1");
    require(step.combined == prev + step.orthogonal, "e != e1 + g");
    prev = step.combined;
  }
}

void criterion_regular_algorithm() {
  FiniteRing m2 = matrix_ring(prime_field(2), 2);
  require(regular_search(m2).holds(), "M2(F2) must be regular (exhaustive)");

  std::mt19937_64 rng(0x2E6);
  RingOps<RingElement> ops = ops_of(m2);
  QuasiInverseOracle<RingElement> oracle = brute_force_quasi_inverse_oracle(m2);
  for (int i = 0; i < 100; ++i) {
    Side side = rng() % 2 ? Side::left : Side::right;
    std::vector<RingElement> elems;
    std::size_t n = 1 + rng() % 3;
    for (std::size_t j = 0; j < n; ++j) elems.push_back(sample_element(m2, rng));
    RegularTrace<RingElement> trace;
    RingElement e = regular_local_unit(ops, side, std::span<const RingElement>(elems),
                                       oracle, &trace);
    require(m2.mul(e, e) == e, "regular unit not idempotent");
    for (const RingElement& r : elems) {
      RingElement fixed = side == Side::left ? m2.mul(e, r) : m2.mul(r, e);
      require(fixed == r, "regular unit fails an element");
    }
    verify_regular_trace(m2, trace, side);
  }

  ComputableRing fr = finite_rank_matrix_ring(prime_field(2));
  RingOps<CValue> fops = ops_of(fr);
  QuasiInverseOracle<CValue> geninv = capability_quasi_inverse_oracle(fr);
  for (int i = 0; i < 60; ++i) {
    Side side = rng() % 2 ? Side::left : Side::right;
    std::vector<CValue> elems;
    std::size_t n = 1 + rng() % 3;
    for (std::size_t j = 0; j < n; ++j) elems.push_back(fr.sample(rng));
    CValue e = regular_local_unit(fops, side, std::span<const CValue>(elems), geninv);
    require(fr.equal(fr.mul(e, e), e), "finite-rank regular unit not idempotent");
    for (const CValue& r : elems) {
      CValue fixed = side == Side::left ? fr.mul(e, r) : fr.mul(r, e);
      require(fr.equal(fixed, r), "finite-rank regular unit fails an element");
    }
  }
}

// --- criterion 7 -----------------------------------------------------------

void criterion_finite_collapse() {
  for (const FiniteRing& ring : finite_corpus()) {
    Classification c = classify(ring);
    bool s = c.at(cls::s_unital).is_yes();
    require(c.at(cls::locally_unital).is_yes() == s, ring.name() + ": locally unital");
    require(c.at(cls::has_local_unit_set).is_yes() == s, ring.name() + ": local units");
    require(c.at(cls::has_enough_idempotents).is_yes() == s,
            ring.name() + ": enough idempotents");
    require(c.at(cls::unital).is_yes() == s, ring.name() + ": unital");
  }
  // the strict separations live on the infinite side
  ClassifyOptions opts;
  Classification pp = classify(piecewise_function_ring(), opts);
  require(pp.at(cls::s_unital).is_yes() && pp.at(cls::locally_unital).is_no(),
          "funring must separate s-unital from locally unital");
  Classification fr = classify(finite_rank_matrix_ring(prime_field(2)), opts);
  require(fr.at(cls::has_enough_idempotents).is_yes() && fr.at(cls::unital).is_no(),
          "finite-rank matrices must separate enough idempotents from unital");
  Classification sum = classify(supported_direct_sum(pairs_left(2)), opts);
  require(sum.at(cls::left_s_unital).is_yes() && sum.at(cls::right_s_unital).is_no(),
          "the supported sum must keep the one-sided separation");
}

// --- criterion 8 -----------------------------------------------------------

void criterion_funring() {
  std::mt19937_64 rng(0xF0);
  // s_unit_for fixes randomized finite sets exactly
  for (int i = 0; i < 200; ++i) {
    std::vector<PiecewisePolynomial> set;
    std::size_t n = 1 + rng() % 3;
    for (std::size_t j = 0; j < n; ++j)
      set.push_back(random_compact_function(rng, Rat(-6), Rat(6)));
    PiecewisePolynomial e = s_unit_for(set);
    for (const PiecewisePolynomial& f : set)
      require(e * f == f && f * e == f, "s_unit_for failed to fix an input");
  }
  // randomized idempotent search finds only zero
  int nonzero_idempotents = 0;
  for (int i = 0; i < 10000; ++i) {
    PiecewisePolynomial f = random_compact_function(rng, Rat(-5), Rat(5));
    if (pp_is_idempotent(f) && !f.is_zero()) ++nonzero_idempotents;
  }
  require(nonzero_idempotents == 0, "found a nonzero idempotent function");
  // bump * f = f for functions with contained support
  for (int i = 0; i < 100; ++i) {
    long a = -static_cast<long>(1 + rng() % 5);
    long b = 1 + rng() % 5;
    PiecewisePolynomial f = random_compact_function(rng, Rat(a), Rat(b));
    PiecewisePolynomial e = bump(Rat(a), Rat(b));
    require(e * f == f && f * e == f, "bump failed on contained support");
  }
}

// --- criterion 9 -----------------------------------------------------------

void criterion_supported_sums() {
  ComputableRing c = supported_direct_sum(pairs_left(2));
  FiniteRing bl = pairs_left(2);
  std::mt19937_64 rng(0x50);
  for (int i = 0; i < 200; ++i) {
    std::vector<CValue> set;
    std::size_t n = 1 + rng() % 3;
    for (std::size_t j = 0; j < n; ++j) set.push_back(c.sample(rng));
    auto unit = c.s_unit_for(set, Side::left);
    require(unit.has_value(), "left s-unit capability must succeed");
    for (const CValue& m : set)
      require(c.equal(c.mul(*unit, m), m), "left s-unit fails");
  }

  // right s-unitality is refuted by the component-level certificate
  require(classify(c).at(cls::right_s_unital).is_no(), "right s-unital must be no");
  for (RingElement e : bl.elements())
    require(bl.mul(bl.element({0, 1}), e).is_zero(),
            "component certificate: (0,1)B_l = {0}");
  SupportedElement emb;
  emb.parts.emplace(0, bl.element({0, 1}));
  require(!c.s_unit_for(std::vector<CValue>{CValue(emb)}, Side::right).has_value(),
          "iota_0((0,1)) must have no right unit");

  // no left identity with support <= 8: exhaustive over all 4^9 candidates
  const long long bound = 8;
  CValue probe = c.probe_outside(bound);
  unsigned long long total = 1;
  for (int i = 0; i <= bound; ++i) total *= bl.size();
  for (unsigned long long code = 0; code < total; ++code) {
    SupportedElement cand;
    unsigned long long rest = code;
    for (long long idx = 0; idx <= bound; ++idx) {
      RingElement comp = bl.group().from_index(rest % bl.size());
      rest /= bl.size();
      if (!comp.is_zero()) cand.parts.emplace(idx, comp);
    }
    require(!c.equal(c.mul(CValue(cand), probe), probe),
            "a bounded candidate fixed the probe");
  }
}

// --- criterion 10 ----------------------------------------------------------

void criterion_identity_promotion() {
  for (const FiniteRing& ring : finite_corpus()) {
    Classification c = classify(ring);
    if (c.at(cls::left_s_unital).is_yes() && c.at(cls::right_unital).is_yes())
      require(c.at(cls::unital).is_yes(), ring.name() + ": final proposition violated");
    if (c.at(cls::right_s_unital).is_yes() && c.at(cls::left_unital).is_yes())
      require(c.at(cls::unital).is_yes(), ring.name() + ": mirrored proposition violated");
    if (c.at(cls::unital).is_yes()) {
      RingElement f = promote_to_identity(ring, Side::right);
      RingElement g = promote_to_identity(ring, Side::left);
      require(f == g && f == *find_identity(ring), ring.name() + ": unique identity");
    }
  }
  bool threw = false;
  try {
    promote_to_identity(pairs_right(2), Side::right);
  } catch (const HypothesisFailed&) {
    threw = true;
  }
  require(threw, "B_r promotion must fail its left s-unitality hypothesis");
}

// --- criterion 11 ----------------------------------------------------------

void criterion_cli() {
  std::vector<FiniteRing> exportable;
  exportable.push_back(zero_ring({2}));
  exportable.push_back(zero_ring({2, 2}));
  exportable.push_back(unital_cyclic(4));
  exportable.push_back(prime_field(2));
  exportable.push_back(pairs_left(2));
  exportable.push_back(pairs_right(2));
  exportable.push_back(twisted_semigroup_ring(2));
  exportable.push_back(matrix_ring(prime_field(2), 2));
  exportable.push_back(direct_sum({prime_field(2), prime_field(2)}));
  FiniteRing z4 = unital_cyclic(4);
  exportable.push_back(principal_ideal_subring(z4, z4.element({2})));
  for (const FiniteRing& ring : exportable) {
    std::string once = render_ring_file(ring);
    FiniteRing back = parse_ring_file(once);
    require(back.same_table(ring) && back.name() == ring.name(),
            ring.name() + ": parse does not reproduce the table");
    require(render_ring_file(back) == once, ring.name() + ": round trip not bit-exact");
  }

  std::ostringstream out, err;
  int code = cli::run({"demo", "hierarchy", "--bound", "4"}, out, err);
  require(code == 0, "demo hierarchy must exit 0");
  for (int stage = 1; stage <= 6; ++stage)
    require(out.str().find("[" + std::to_string(stage) + "/6]") != std::string::npos,
            "demo must report stage " + std::to_string(stage));
  require(out.str().find("[documented]") != std::string::npos,
          "demo must flag the documented non-constructive step");
}

struct Criterion {
  int id;
  const char* title;
  std::function<void()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "twisted semigroup ring: idempotent, neither side s-unital, g refuted",
       criterion_twisted_classification},
      {2, "B_l/B_r: identities {(1,0),(1,1)}, annihilation, classification flags",
       criterion_pairs_examples},
      {3, "exhaustive associativity triples (16^3 and 4^3)",
       criterion_associativity_triples},
      {4, "join expansion identity and conditions (i)-(v), plus the M2(F2) pair",
       criterion_join_expansion},
      {5, "1000 randomized common-unit requests with verified traces",
       criterion_common_units},
      {6, "regular-ring units on M2(F2) and finite-rank matrices",
       criterion_regular_algorithm},
      {7, "finite collapse corpus-wide; separations only on the infinite side",
       criterion_finite_collapse},
      {8, "funring: exact units, no nonzero idempotent in 10^4 samples, bump fixes",
       criterion_funring},
      {9, "supported sums: left units, right refutation, probe refutation to N=8",
       criterion_supported_sums},
      {10, "left s-unital + right unital => unital; promotion and its refutation",
       criterion_identity_promotion},
      {11, "CLI: bit-exact ring-file round trips; demo hierarchy six stages",
       criterion_cli},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    try {
      c.run();
      std::printf("PASS %2d: %s\n", c.id, c.title);
    } catch (const std::exception& e) {
      std::printf("FAIL %2d: %s\n         %s\n", c.id, c.title, e.what());
      ++failures;
    }
    std::fflush(stdout);
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
