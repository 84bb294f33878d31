#include "ringlab/computable.hpp"

#include <memory>
#include <sstream>

#include "ringlab/classify.hpp"
#include "ringlab/constructions.hpp"

namespace ringlab {

namespace {

const SupportedElement& as_sum(const CValue& v) { return std::get<SupportedElement>(v); }
const SparseMatrix& as_matrix(const CValue& v) { return std::get<SparseMatrix>(v); }
const PiecewisePolynomial& as_pp(const CValue& v) { return std::get<PiecewisePolynomial>(v); }

std::string show_supported(const SupportedElement& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [i, x] : v.parts) {
    if (!first) os << ", ";
    os << i << ':' << x.str();
    first = false;
  }
  os << '}';
  return os.str();
}

std::string show_matrix(const SparseMatrix& v, const RingElement& one) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [rc, x] : v.entries) {
    if (!first) os << '+';
    if (x != one) os << x.str() << '*';
    if (rc.first < 10 && rc.second < 10)
      os << 'E' << rc.first << rc.second;
    else
      os << "E(" << rc.first << ',' << rc.second << ')';
    first = false;
  }
  return os.str();
}

RingElement random_nonzero(const FiniteRing& ring, std::mt19937_64& rng) {
  return ring.group().from_index(1 + rng() % (ring.size() - 1));
}

}  // namespace

// ---------------------------------------------------------------------------
// Supported direct sums

ComputableRing supported_direct_sum(const FiniteRing& component) {
  auto comp = std::make_shared<const FiniteRing>(component);
  Classification comp_class = classify(*comp);

  auto left_ids = one_sided_identities(*comp, Side::left);
  auto right_ids = one_sided_identities(*comp, Side::right);
  auto identity = find_identity(*comp);
  RegularSearch comp_regular = regular_search(*comp);

  ComputableRing ring;
  ring.name = "sum(" + comp->name() + ")";

  ring.zero = [] { return CValue(SupportedElement{}); };
  ring.add = [comp](const CValue& a, const CValue& b) {
    SupportedElement out = as_sum(a);
    for (const auto& [i, x] : as_sum(b).parts) {
      auto it = out.parts.find(i);
      if (it == out.parts.end()) {
        out.parts.emplace(i, x);
      } else {
        RingElement s = it->second + x;
        if (s.is_zero())
          out.parts.erase(it);
        else
          it->second = std::move(s);
      }
    }
    return CValue(std::move(out));
  };
  ring.neg = [](const CValue& a) {
    SupportedElement out;
    for (const auto& [i, x] : as_sum(a).parts) out.parts.emplace(i, -x);
    return CValue(std::move(out));
  };
  ring.mul = [comp](const CValue& a, const CValue& b) {
    SupportedElement out;
    const auto& bp = as_sum(b).parts;
    for (const auto& [i, x] : as_sum(a).parts) {
      auto it = bp.find(i);
      if (it == bp.end()) continue;
      RingElement p = comp->mul(x, it->second);
      if (!p.is_zero()) out.parts.emplace(i, std::move(p));
    }
    return CValue(std::move(out));
  };
  ring.equal = [](const CValue& a, const CValue& b) { return as_sum(a) == as_sum(b); };
  ring.show = [](const CValue& v) { return show_supported(as_sum(v)); };
  ring.sample = [comp](std::mt19937_64& rng) {
    SupportedElement out;
    std::size_t n = rng() % 4;
    for (std::size_t j = 0; j < n; ++j)
      out.parts.insert_or_assign(static_cast<long long>(rng() % 6),
                                 random_nonzero(*comp, rng));
    return CValue(std::move(out));
  };

  ring.s_unit_for = [comp](std::span<const CValue> vals,
                           Side side) -> std::optional<CValue> {
    std::map<long long, std::vector<RingElement>> need;
    for (const CValue& v : vals)
      for (const auto& [i, x] : as_sum(v).parts) need[i].push_back(x);
    SupportedElement unit;
    for (const auto& [i, xs] : need) {
      std::optional<RingElement> found;
      for (RingElement e : comp->elements()) {
        bool fixes = true;
        for (const RingElement& x : xs) {
          RingElement p = side == Side::left ? comp->mul(e, x) : comp->mul(x, e);
          if (p != x) {
            fixes = false;
            break;
          }
        }
        if (fixes) {
          found = std::move(e);
          break;
        }
      }
      if (!found) return std::nullopt;
      if (!found->is_zero()) unit.parts.emplace(i, std::move(*found));
    }
    return CValue(std::move(unit));
  };

  ring.idempotent_unit_for = [comp](std::span<const CValue> vals)
      -> std::optional<CValue> {
    std::map<long long, std::vector<RingElement>> need;
    for (const CValue& v : vals)
      for (const auto& [i, x] : as_sum(v).parts) need[i].push_back(x);
    SupportedElement unit;
    for (const auto& [i, xs] : need) {
      std::optional<RingElement> found;
      for (const RingElement& e : comp->idempotents()) {
        bool fixes = true;
        for (const RingElement& x : xs)
          if (comp->mul(e, x) != x || comp->mul(x, e) != x) {
            fixes = false;
            break;
          }
        if (fixes) {
          found = e;
          break;
        }
      }
      if (!found) return std::nullopt;
      if (!found->is_zero()) unit.parts.emplace(i, std::move(*found));
    }
    return CValue(std::move(unit));
  };

  ring.probe_outside = [comp](long long bound) {
    SupportedElement out;
    out.parts.emplace(bound + 1, comp->generator(0));
    return CValue(std::move(out));
  };

  ring.bounded_candidates = [comp, left_ids, right_ids](
                                long long bound, std::mt19937_64& rng, int count) {
    std::vector<CValue> out;
    // The densest natural candidates: a one-sided identity at every index.
    for (const auto& ids : {left_ids, right_ids}) {
      if (ids.empty()) continue;
      SupportedElement cand;
      for (long long i = 0; i <= bound; ++i) cand.parts.emplace(i, ids.front());
      out.push_back(CValue(std::move(cand)));
    }
    for (int c = 0; c < count; ++c) {
      SupportedElement cand;
      for (long long i = 0; i <= bound; ++i)
        if (rng() % 2) cand.parts.emplace(i, random_nonzero(*comp, rng));
      out.push_back(CValue(std::move(cand)));
    }
    return out;
  };

  if (identity) {
    RingElement one = *identity;
    ring.complete_family_for = [comp, one](std::span<const CValue> vals) {
      std::vector<CValue> family;
      std::vector<long long> indices;
      for (const CValue& v : vals)
        for (const auto& [i, x] : as_sum(v).parts) indices.push_back(i);
      std::sort(indices.begin(), indices.end());
      indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
      if (indices.empty()) indices.push_back(0);
      for (long long i : indices) {
        SupportedElement e;
        e.parts.emplace(i, one);
        family.push_back(CValue(std::move(e)));
      }
      return family;
    };
  }

  if (comp_regular.holds()) {
    std::map<unsigned long long, RingElement> qi;
    for (const auto& [r, s] : comp_regular.quasi_inverse_table)
      qi.emplace(comp->group().index_of(r), s);
    ring.quasi_inverse = [comp, qi](const CValue& v) -> std::optional<CValue> {
      SupportedElement out;
      for (const auto& [i, x] : as_sum(v).parts) {
        const RingElement& s = qi.at(comp->group().index_of(x));
        if (!s.is_zero()) out.parts.emplace(i, s);
      }
      return CValue(std::move(out));
    };
  }

  // Facts: every elementwise class transfers both ways between the sum and
  // its component (restrict to index 0 for the converse).
  auto embed0 = [](const std::string& elem) { return "{0:" + elem + "}"; };
  auto inherit = [&](const char* key, const std::string& why_yes) {
    const Verdict& v = comp_class.at(key);
    if (v.is_yes()) {
      ring.facts[key] = Fact{true, why_yes + "; component " + comp->name() +
                                       " decided by exhaustion", "", ""};
    } else {
      ring.facts[key] =
          Fact{false,
               "restriction to index 0: component " + comp->name() + " fails (" +
                   v.reason + ")",
               "", v.counterexample.empty() ? "" : embed0(v.counterexample)};
    }
  };
  inherit(cls::idempotent_ring, "componentwise products span every coordinate");
  inherit(cls::left_s_unital, "coordinatewise left units");
  inherit(cls::right_s_unital, "coordinatewise right units");
  inherit(cls::s_unital, "coordinatewise two-sided units");
  inherit(cls::left_locally_unital, "coordinatewise idempotent left units");
  inherit(cls::right_locally_unital, "coordinatewise idempotent right units");
  inherit(cls::locally_unital, "coordinatewise idempotent two-sided units");
  inherit(cls::regular, "coordinatewise quasi-inverses");

  bool all_idempotent_commuting = true;
  for (RingElement a : comp->elements()) {
    if (comp->mul(a, a) != a) all_idempotent_commuting = false;
    for (RingElement b : comp->elements())
      if (comp->mul(a, b) != comp->mul(b, a)) all_idempotent_commuting = false;
  }

  if (comp_class.at(cls::has_local_unit_set).is_yes()) {
    std::string reason = all_idempotent_commuting
                             ? "every element is idempotent and elements commute; "
                               "E = R itself is a set of local units"
                             : "E = finite sums of per-index identities, closed "
                               "under the join";
    ring.facts[cls::has_local_unit_set] = Fact{true, reason, "", ""};
  } else {
    ring.facts[cls::has_local_unit_set] =
        Fact{false, "restriction to index 0 would give the component a set of local units",
             "", ""};
  }
  if (comp_class.at(cls::has_enough_idempotents).is_yes()) {
    ring.facts[cls::has_enough_idempotents] =
        Fact{true, "orthogonal family of per-index identities", "", ""};
  } else {
    ring.facts[cls::has_enough_idempotents] =
        Fact{false, "restriction to index 0 would give a complete family for the component",
             "", ""};
  }

  Fact not_unital{false,
                  "any candidate identity has bounded support; a probe beyond "
                  "that bound is not fixed",
                  "", ""};
  not_unital.probe_backed = true;
  ring.facts[cls::left_unital] = not_unital;
  ring.facts[cls::right_unital] = not_unital;

  return ring;
}

// ---------------------------------------------------------------------------
// Finite-rank matrices

namespace {

SparseMatrix diagonal_projection(const std::vector<long long>& indices,
                                 const RingElement& one) {
  SparseMatrix out;
  for (long long i : indices) out.entries.emplace(std::make_pair(i, i), one);
  return out;
}

std::vector<long long> support_indices(std::span<const CValue> vals) {
  std::vector<long long> out;
  for (const CValue& v : vals)
    for (const auto& [rc, x] : as_matrix(v).entries) {
      out.push_back(rc.first);
      out.push_back(rc.second);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_field(const FiniteRing& ring, const RingElement& one) {
  for (RingElement a : ring.elements()) {
    for (RingElement b : ring.elements())
      if (ring.mul(a, b) != ring.mul(b, a)) return false;
    if (a.is_zero()) continue;
    bool invertible = false;
    for (RingElement b : ring.elements())
      if (ring.mul(a, b) == one && ring.mul(b, a) == one) {
        invertible = true;
        break;
      }
    if (!invertible) return false;
  }
  return true;
}

}  // namespace

std::optional<SparseMatrix> sparse_generalized_inverse(const FiniteRing& base,
                                                       const SparseMatrix& m) {
  if (m.is_zero()) return SparseMatrix{};
  auto identity = find_identity(base);
  if (!identity) return std::nullopt;
  const RingElement one = *identity;
  if (!is_field(base, one)) return std::nullopt;

  std::map<unsigned long long, RingElement> inverse_table;
  for (RingElement a : base.elements()) {
    if (a.is_zero()) continue;
    for (RingElement b : base.elements())
      if (base.mul(a, b) == one) {
        inverse_table.emplace(base.group().index_of(a), std::move(b));
        break;
      }
  }

  std::vector<long long> rows, colsv;
  for (const auto& [rc, x] : m.entries) {
    rows.push_back(rc.first);
    colsv.push_back(rc.second);
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  std::sort(colsv.begin(), colsv.end());
  colsv.erase(std::unique(colsv.begin(), colsv.end()), colsv.end());
  std::size_t nr = rows.size(), nc = colsv.size();

  auto zero = base.zero();
  std::vector<std::vector<RingElement>> A(nr, std::vector<RingElement>(nc, zero));
  for (const auto& [rc, x] : m.entries) {
    std::size_t i = std::lower_bound(rows.begin(), rows.end(), rc.first) - rows.begin();
    std::size_t j =
        std::lower_bound(colsv.begin(), colsv.end(), rc.second) - colsv.begin();
    A[i][j] = x;
  }
  std::vector<std::vector<RingElement>> E(nr, std::vector<RingElement>(nr, zero));
  std::vector<std::vector<RingElement>> F(nc, std::vector<RingElement>(nc, zero));
  for (std::size_t i = 0; i < nr; ++i) E[i][i] = one;
  for (std::size_t j = 0; j < nc; ++j) F[j][j] = one;

  // Full-pivot reduction E * A_orig * F = D with D a 0/1 diagonal; then
  // g = F D^T E satisfies A g A = A.
  std::size_t rank = 0;
  while (rank < nr && rank < nc) {
    std::size_t pi = nr, pj = nc;
    for (std::size_t i = rank; i < nr && pi == nr; ++i)
      for (std::size_t j = rank; j < nc; ++j)
        if (!A[i][j].is_zero()) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == nr) break;
    std::swap(A[rank], A[pi]);
    std::swap(E[rank], E[pi]);
    for (std::size_t i = 0; i < nr; ++i) std::swap(A[i][rank], A[i][pj]);
    for (std::size_t i = 0; i < nc; ++i) std::swap(F[i][rank], F[i][pj]);

    const RingElement inv = inverse_table.at(base.group().index_of(A[rank][rank]));
    for (std::size_t j = 0; j < nc; ++j) A[rank][j] = base.mul(inv, A[rank][j]);
    for (std::size_t j = 0; j < nr; ++j) E[rank][j] = base.mul(inv, E[rank][j]);

    for (std::size_t i = 0; i < nr; ++i) {
      if (i == rank || A[i][rank].is_zero()) continue;
      RingElement factor = A[i][rank];
      for (std::size_t j = 0; j < nc; ++j)
        A[i][j] = A[i][j] - base.mul(factor, A[rank][j]);
      for (std::size_t j = 0; j < nr; ++j)
        E[i][j] = E[i][j] - base.mul(factor, E[rank][j]);
    }
    for (std::size_t j = 0; j < nc; ++j) {
      if (j == rank || A[rank][j].is_zero()) continue;
      RingElement factor = A[rank][j];
      for (std::size_t i = 0; i < nr; ++i)
        A[i][j] = A[i][j] - base.mul(A[i][rank], factor);
      for (std::size_t i = 0; i < nc; ++i)
        F[i][j] = F[i][j] - base.mul(F[i][rank], factor);
    }
    ++rank;
  }

  // g_dense[j][i] = sum_{t < rank} F[j][t] E[t][i].
  SparseMatrix g;
  for (std::size_t j = 0; j < nc; ++j)
    for (std::size_t i = 0; i < nr; ++i) {
      RingElement acc = zero;
      for (std::size_t t = 0; t < rank; ++t)
        acc = acc + base.mul(F[j][t], E[t][i]);
      if (!acc.is_zero()) g.entries.emplace(std::make_pair(colsv[j], rows[i]), acc);
    }
  return g;
}

ComputableRing finite_rank_matrix_ring(const FiniteRing& base) {
  auto identity = find_identity(base);
  if (!identity) throw BaseNotUnital(base.name());
  const RingElement one = *identity;
  auto b = std::make_shared<const FiniteRing>(base);
  bool field = is_field(base, one);
  RegularSearch base_regular = regular_search(base);

  ComputableRing ring;
  ring.name = "finrank(" + b->name() + ")";

  ring.zero = [] { return CValue(SparseMatrix{}); };
  ring.add = [](const CValue& a, const CValue& bb) {
    SparseMatrix out = as_matrix(a);
    for (const auto& [rc, x] : as_matrix(bb).entries) {
      auto it = out.entries.find(rc);
      if (it == out.entries.end()) {
        out.entries.emplace(rc, x);
      } else {
        RingElement s = it->second + x;
        if (s.is_zero())
          out.entries.erase(it);
        else
          it->second = std::move(s);
      }
    }
    return CValue(std::move(out));
  };
  ring.neg = [](const CValue& a) {
    SparseMatrix out;
    for (const auto& [rc, x] : as_matrix(a).entries) out.entries.emplace(rc, -x);
    return CValue(std::move(out));
  };
  ring.mul = [b](const CValue& x, const CValue& y) {
    SparseMatrix out;
    for (const auto& [rc1, v] : as_matrix(x).entries)
      for (const auto& [rc2, w] : as_matrix(y).entries) {
        if (rc1.second != rc2.first) continue;
        RingElement p = b->mul(v, w);
        if (p.is_zero()) continue;
        auto key = std::make_pair(rc1.first, rc2.second);
        auto it = out.entries.find(key);
        if (it == out.entries.end()) {
          out.entries.emplace(key, std::move(p));
        } else {
          RingElement s = it->second + p;
          if (s.is_zero())
            out.entries.erase(it);
          else
            it->second = std::move(s);
        }
      }
    return CValue(std::move(out));
  };
  ring.equal = [](const CValue& a, const CValue& bb) {
    return as_matrix(a) == as_matrix(bb);
  };
  ring.show = [one](const CValue& v) { return show_matrix(as_matrix(v), one); };
  ring.sample = [b](std::mt19937_64& rng) {
    SparseMatrix out;
    std::size_t n = rng() % 4;
    for (std::size_t j = 0; j < n; ++j)
      out.entries.insert_or_assign(
          std::make_pair<long long, long long>(rng() % 5, rng() % 5),
          random_nonzero(*b, rng));
    return CValue(std::move(out));
  };

  ring.idempotent_unit_for = [one](std::span<const CValue> vals) -> std::optional<CValue> {
    return CValue(diagonal_projection(support_indices(vals), one));
  };
  ring.s_unit_for = [one](std::span<const CValue> vals, Side) -> std::optional<CValue> {
    return CValue(diagonal_projection(support_indices(vals), one));
  };
  ring.probe_outside = [one](long long bound) {
    SparseMatrix out;
    out.entries.emplace(std::make_pair(bound + 1, bound + 1), one);
    return CValue(std::move(out));
  };
  ring.bounded_candidates = [b, one](long long bound, std::mt19937_64& rng, int count) {
    std::vector<CValue> out;
    std::vector<long long> all;
    for (long long i = 0; i <= bound; ++i) all.push_back(i);
    out.push_back(CValue(diagonal_projection(all, one)));
    auto span = static_cast<unsigned long long>(bound + 1);
    for (int c = 0; c < count; ++c) {
      SparseMatrix cand;
      std::size_t n = rng() % 4;
      for (std::size_t j = 0; j < n; ++j)
        cand.entries.insert_or_assign(
            std::make_pair<long long, long long>(rng() % span, rng() % span),
            random_nonzero(*b, rng));
      out.push_back(CValue(std::move(cand)));
    }
    return out;
  };
  ring.complete_family_for = [one](std::span<const CValue> vals) {
    std::vector<long long> indices = support_indices(vals);
    if (indices.empty()) indices.push_back(0);
    std::vector<CValue> family;
    for (long long i : indices)
      family.push_back(CValue(diagonal_projection({i}, one)));
    return family;
  };
  if (field) {
    ring.quasi_inverse = [b](const CValue& v) -> std::optional<CValue> {
      auto g = sparse_generalized_inverse(*b, as_matrix(v));
      if (!g) return std::nullopt;
      return CValue(std::move(*g));
    };
  }

  const std::string diag_reason =
      "the diagonal projection onto the support indices is an idempotent "
      "two-sided unit for any finite set";
  for (const char* key : {cls::left_s_unital, cls::right_s_unital, cls::s_unital,
                          cls::left_locally_unital, cls::right_locally_unital,
                          cls::locally_unital})
    ring.facts[key] = Fact{true, diag_reason, "", ""};
  ring.facts[cls::has_local_unit_set] =
      Fact{true,
           "E = diagonal projections with identity entries: commuting idempotents, "
           "join-closed, covering every element",
           "", ""};
  ring.facts[cls::has_enough_idempotents] =
      Fact{true, "family {E_ii} of diagonal matrix units decomposes every element",
           "", ""};

  Fact not_unital{false,
                  "any candidate identity has bounded support; a probe beyond "
                  "that bound is not fixed",
                  "", ""};
  not_unital.probe_backed = true;
  ring.facts[cls::left_unital] = not_unital;
  ring.facts[cls::right_unital] = not_unital;

  if (field) {
    ring.facts[cls::regular] =
        Fact{true, "generalized inverse over the field base", "", ""};
  } else if (!base_regular.holds()) {
    ring.facts[cls::regular] =
        Fact{false,
             "a base element without quasi-inverse embeds at E00: " +
                 base_regular.counterexample->str(),
             "", base_regular.counterexample->str() + "*E00"};
  }
  // base regular but not a field: no generalized-inverse routine; the class
  // is left undecided.

  return ring;
}

// ---------------------------------------------------------------------------
// Piecewise-polynomial function ring

namespace {

Rat grid_point(std::mt19937_64& rng, const Rat& lo, const Rat& hi, int slots) {
  unsigned long long j = 1 + rng() % (slots - 1);
  Rat frac(static_cast<long>(j), slots);
  frac.canonicalize();
  return lo + (hi - lo) * frac;
}

}  // namespace

PiecewisePolynomial random_compact_function(std::mt19937_64& rng, const Rat& lo,
                                            const Rat& hi) {
  if (!(lo < hi)) return PiecewisePolynomial();
  PiecewisePolynomial out;
  std::size_t parts = 1 + rng() % 2;
  for (std::size_t p = 0; p < parts; ++p) {
    Rat a = grid_point(rng, lo, hi, 16);
    Rat b = grid_point(rng, lo, hi, 16);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    long num = static_cast<long>(rng() % 19) - 9;
    long den = 1 + static_cast<long>(rng() % 4);
    Rat scale(num, den);
    scale.canonicalize();
    PiecewisePolynomial piece;
    if (rng() % 2) {
      // parabolic arc (x-a)(b-x) on [a,b]
      piece = PiecewisePolynomial::from_pieces(
          {a, b}, {Poly({-a * b, a + b, Rat(-1)})});
    } else {
      Rat m = (a + b) / 2;
      Rat r1 = 1 / (m - a), r2 = 1 / (b - m);
      piece = PiecewisePolynomial::from_pieces(
          {a, m, b},
          {Poly({-a * r1, r1}), Poly({b * r2, -r2})});
    }
    out = out + piece.scaled(scale);
  }
  return out;
}

ComputableRing piecewise_function_ring() {
  ComputableRing ring;
  ring.name = "pp-compact(Q)";

  ring.zero = [] { return CValue(PiecewisePolynomial()); };
  ring.add = [](const CValue& a, const CValue& b) { return CValue(as_pp(a) + as_pp(b)); };
  ring.neg = [](const CValue& a) { return CValue(-as_pp(a)); };
  ring.mul = [](const CValue& a, const CValue& b) { return CValue(as_pp(a) * as_pp(b)); };
  ring.equal = [](const CValue& a, const CValue& b) { return as_pp(a) == as_pp(b); };
  ring.show = [](const CValue& v) {
    std::string s = as_pp(v).str();
    for (auto pos = s.find('\n'); pos != std::string::npos; pos = s.find('\n'))
      s.replace(pos, 1, "; ");
    return s;
  };
  ring.sample = [](std::mt19937_64& rng) {
    long lo = -static_cast<long>(1 + rng() % 6);
    long hi = 1 + static_cast<long>(rng() % 6);
    return CValue(random_compact_function(rng, Rat(lo), Rat(hi)));
  };

  ring.s_unit_for = [](std::span<const CValue> vals, Side) -> std::optional<CValue> {
    std::vector<PiecewisePolynomial> fs;
    for (const CValue& v : vals) fs.push_back(as_pp(v));
    return CValue(s_unit_for(fs));
  };
  ring.probe_outside = [](long long bound) {
    auto n = static_cast<long>(bound);
    return CValue(bump(Rat(n + 1), Rat(n + 2)));
  };
  ring.bounded_candidates = [](long long bound, std::mt19937_64& rng, int count) {
    auto n = static_cast<long>(bound);
    std::vector<CValue> out;
    if (n >= 2) out.push_back(CValue(bump(Rat(-n + 1), Rat(n - 1))));
    for (int c = 0; c < count; ++c)
      out.push_back(CValue(random_compact_function(rng, Rat(-n), Rat(n))));
    return out;
  };

  const std::string s_reason =
      "the bump over the union of supports fixes any finite set exactly "
      "(the ring is commutative)";
  for (const char* key : {cls::left_s_unital, cls::right_s_unital, cls::s_unital})
    ring.facts[key] = Fact{true, s_reason, "", ""};

  const std::string idem_reason =
      "the only idempotent is 0: piecewise p^2 = p forces constant pieces 0 or 1, "
      "and continuity with value 0 at the support ends rules out 1";
  std::string nonzero = "bump(0,1)";
  for (const char* key :
       {cls::left_locally_unital, cls::right_locally_unital, cls::locally_unital})
    ring.facts[key] = Fact{false, idem_reason, "", nonzero};

  return ring;
}

}  // namespace ringlab
