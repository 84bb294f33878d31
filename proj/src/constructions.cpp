#include "ringlab/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

namespace ringlab {

namespace {

bool small_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string orders_label(const std::vector<long long>& orders) {
  std::ostringstream os;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) os << ',';
    os << orders[i];
  }
  return os.str();
}

std::vector<std::vector<std::vector<long long>>> zero_table(std::size_t k) {
  return std::vector<std::vector<std::vector<long long>>>(
      k, std::vector<std::vector<long long>>(k, std::vector<long long>(k, 0)));
}

}  // namespace

FiniteRing zero_ring(std::vector<long long> orders) {
  std::string name = "zero[" + orders_label(orders) + "]";
  std::size_t k = orders.size();
  return FiniteRing::make(std::move(orders), zero_table(k), std::move(name));
}

FiniteRing unital_cyclic(long long n) {
  return FiniteRing::make({n}, {{{1}}}, "Z" + std::to_string(n));
}

FiniteRing prime_field(long long p) {
  if (!small_prime(p)) throw UnsupportedParameter("p must be prime");
  return FiniteRing::make({p}, {{{1}}}, "F" + std::to_string(p));
}

FiniteRing pairs_left(long long p) {
  if (!small_prime(p) || p > 7) throw UnsupportedParameter("p must be a prime <= 7");
  // (a,b)(c,d) = (ac, ad)
  auto table = zero_table(2);
  table[0][0] = {1, 0};
  table[0][1] = {0, 1};
  return FiniteRing::make({p, p}, table, "pairs-left(F" + std::to_string(p) + ")");
}

FiniteRing pairs_right(long long p) {
  if (!small_prime(p) || p > 7) throw UnsupportedParameter("p must be a prime <= 7");
  // (a,b)(c,d) = (ac, bc)
  auto table = zero_table(2);
  table[0][0] = {1, 0};
  table[1][0] = {0, 1};
  return FiniteRing::make({p, p}, table, "pairs-right(F" + std::to_string(p) + ")");
}

FiniteRing twisted_semigroup_ring(long long p) {
  if (!small_prime(p) || p > 7) throw UnsupportedParameter("p must be a prime <= 7");
  // Coordinates (a,b,c,d) stand for (a,b) + (c,d)g.  The product
  //   (x1 + x2 g)(y1 + y2 g) = x1 y1 + (x1 y2 e2 + x2 y1 e1) g
  // with e1 = (1,0), e2 = (0,1) collapses to (aa', bb', ca', bd').
  auto prod = [p](const std::vector<long long>& x, const std::vector<long long>& y) {
    return std::vector<long long>{(x[0] * y[0]) % p, (x[1] * y[1]) % p,
                                  (x[2] * y[0]) % p, (x[1] * y[3]) % p};
  };
  auto table = zero_table(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      std::vector<long long> gi(4, 0), gj(4, 0);
      gi[i] = 1;
      gj[j] = 1;
      table[i][j] = prod(gi, gj);
    }
  return FiniteRing::make({p, p, p, p}, table, "twisted(F" + std::to_string(p) + ")");
}

FiniteRing direct_sum(const std::vector<FiniteRing>& components) {
  if (components.empty()) throw EmptyInput("direct_sum needs at least one component");
  if (components.size() > 4) throw TooLarge("at most 4 direct summands");
  unsigned long long total = 1;
  std::vector<long long> orders;
  std::vector<std::size_t> offsets;
  for (const FiniteRing& c : components) {
    if (total > 4096 / c.size()) throw TooLarge("direct sum exceeds 4096 elements");
    total *= c.size();
    offsets.push_back(orders.size());
    orders.insert(orders.end(), c.group().orders().begin(), c.group().orders().end());
  }
  std::size_t k = orders.size();
  auto table = zero_table(k);
  for (std::size_t u = 0; u < components.size(); ++u) {
    const FiniteRing& c = components[u];
    for (std::size_t i = 0; i < c.rank(); ++i)
      for (std::size_t j = 0; j < c.rank(); ++j) {
        const RingElement& cij = c.structure_constant(i, j);
        for (std::size_t t = 0; t < c.rank(); ++t)
          table[offsets[u] + i][offsets[u] + j][offsets[u] + t] = cij.coord(t);
      }
  }
  std::ostringstream name;
  name << "directsum(";
  for (std::size_t u = 0; u < components.size(); ++u) {
    if (u) name << ',';
    name << components[u].name();
  }
  name << ')';
  return FiniteRing::make(std::move(orders), table, name.str());
}

std::optional<RingElement> find_identity(const FiniteRing& ring) {
  for (RingElement e : ring.elements()) {
    bool ok = true;
    for (RingElement r : ring.elements())
      if (ring.mul(e, r) != r || ring.mul(r, e) != r) {
        ok = false;
        break;
      }
    if (ok) return e;
  }
  return std::nullopt;
}

FiniteRing matrix_ring(const FiniteRing& base, std::size_t n) {
  if (!find_identity(base)) throw BaseNotUnital(base.name());
  if (n == 0) throw UnsupportedParameter("matrix size must be >= 1");
  unsigned long long total = 1;
  for (std::size_t i = 0; i < n * n; ++i) {
    if (total > 4096 / base.size()) throw TooLarge("matrix ring exceeds 4096 elements");
    total *= base.size();
  }
  std::size_t kb = base.rank();
  std::size_t k = n * n * kb;
  std::vector<long long> orders;
  orders.reserve(k);
  for (std::size_t i = 0; i < n * n; ++i)
    orders.insert(orders.end(), base.group().orders().begin(),
                  base.group().orders().end());
  auto at = [&](std::size_t r, std::size_t c, std::size_t beta) {
    return (r * n + c) * kb + beta;
  };
  auto table = zero_table(k);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t beta = 0; beta < kb; ++beta)
        for (std::size_t r2 = 0; r2 < n; ++r2)
          for (std::size_t c2 = 0; c2 < n; ++c2)
            for (std::size_t beta2 = 0; beta2 < kb; ++beta2) {
              if (c != r2) continue;  // E_{rc} E_{r2c2} = 0 unless c == r2
              const RingElement& prod = base.structure_constant(beta, beta2);
              for (std::size_t t = 0; t < kb; ++t)
                table[at(r, c, beta)][at(r2, c2, beta2)][at(r, c2, t)] =
                    prod.coord(t);
            }
  return FiniteRing::make(std::move(orders), table,
                          "M" + std::to_string(n) + "(" + base.name() + ")");
}

Subgroup two_sided_ideal(const FiniteRing& ring, const RingElement& g) {
  std::vector<RingElement> generators{g};
  auto all = ring.element_list();
  while (true) {
    Subgroup span = ring.additive_closure(generators);
    bool grew = false;
    for (const RingElement& m : span.members()) {
      for (const RingElement& r : all) {
        for (RingElement p : {ring.mul(r, m), ring.mul(m, r)}) {
          if (!span.contains(p)) {
            generators.push_back(std::move(p));
            grew = true;
          }
        }
      }
      if (grew) break;
    }
    if (!grew) return span;
  }
}

namespace {

/// Greedy basis of a subgroup as an internal direct sum of cyclic pieces:
/// repeatedly adjoin an element of maximal additive order whose cyclic span
/// meets the current span trivially.  A depth-first fallback covers the rare
/// cases where the greedy choice strands; the caller re-verifies bijectivity.
std::vector<RingElement> subgroup_basis(const FiniteRing& ring, const Subgroup& sub) {
  if (sub.size() == 1) return {};

  auto trivially_meets = [&](const RingElement& h, const Subgroup& span) {
    long long ord = h.additive_order();
    RingElement acc = h;
    for (long long j = 1; j < ord; ++j) {
      if (span.contains(acc)) return false;
      acc = acc + h;
    }
    return true;
  };

  std::vector<RingElement> ordered = sub.members();
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const RingElement& a, const RingElement& b) {
                     return a.additive_order() > b.additive_order();
                   });

  std::vector<RingElement> basis;
  Subgroup span = ring.additive_closure(std::span<const RingElement>());
  while (span.size() < sub.size()) {
    bool advanced = false;
    for (const RingElement& h : ordered) {
      if (h.is_zero() || span.contains(h)) continue;
      if (!trivially_meets(h, span)) continue;
      basis.push_back(h);
      span = ring.additive_closure(basis);
      advanced = true;
      break;
    }
    if (!advanced) break;
  }
  if (span.size() == sub.size()) return basis;

  // Fallback: exhaustive depth-first search over direct-sum extensions.
  std::vector<RingElement> found;
  std::function<bool(std::vector<RingElement>&)> dfs = [&](std::vector<RingElement>& acc) {
    Subgroup s = ring.additive_closure(acc);
    if (s.size() == sub.size()) {
      found = acc;
      return true;
    }
    for (const RingElement& h : ordered) {
      if (h.is_zero() || s.contains(h)) continue;
      if (!trivially_meets(h, s)) continue;
      acc.push_back(h);
      if (dfs(acc)) return true;
      acc.pop_back();
    }
    return false;
  };
  std::vector<RingElement> acc;
  if (!dfs(acc))
    throw InternalCheckFailed("no cyclic basis found for ideal subgroup");
  return found;
}

}  // namespace

FiniteRing principal_ideal_subring(const FiniteRing& ring, const RingElement& g) {
  Subgroup ideal = two_sided_ideal(ring, g);
  std::vector<RingElement> basis = subgroup_basis(ring, ideal);
  std::size_t k = basis.size();

  std::vector<long long> orders;
  orders.reserve(k);
  for (const RingElement& h : basis) orders.push_back(h.additive_order());

  // Coordinate lookup: ambient element index -> basis coordinates.  Also the
  // bijectivity check for the extracted basis.
  FiniteAbelianGroup shape(orders);
  std::map<unsigned long long, std::vector<long long>> lookup;
  for (unsigned long long idx = 0; idx < shape.size(); ++idx) {
    RingElement tuple = shape.from_index(idx);
    RingElement value = ring.zero();
    for (std::size_t i = 0; i < k; ++i)
      value = value + basis[i].scaled(tuple.coord(i));
    if (!lookup.emplace(ring.group().index_of(value), tuple.coords()).second)
      throw InternalCheckFailed("ideal basis is not independent");
  }
  if (lookup.size() != ideal.size())
    throw InternalCheckFailed("ideal basis does not span the ideal");

  std::vector<std::vector<std::vector<long long>>> table(
      k, std::vector<std::vector<long long>>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      RingElement prod = ring.mul(basis[i], basis[j]);
      table[i][j] = lookup.at(ring.group().index_of(prod));
    }
  return FiniteRing::make(std::move(orders), table,
                          ring.name() + "-ideal" + g.str());
}

std::optional<MatrixLayout> matrix_layout_of(const std::string& ring_name) {
  static const std::regex pattern(R"(^M(\d+)\(F(\d+)\)$)");
  std::smatch m;
  if (!std::regex_match(ring_name, m, pattern)) return std::nullopt;
  return MatrixLayout{static_cast<std::size_t>(std::stoul(m[1])),
                      std::stoll(m[2])};
}

RingElement matrix_unit(const FiniteRing& ring, const MatrixLayout& layout,
                        std::size_t r, std::size_t c) {
  if (r >= layout.n || c >= layout.n)
    throw UnsupportedParameter("matrix unit index out of range");
  std::vector<long long> coords(ring.rank(), 0);
  coords[r * layout.n + c] = 1;
  return ring.element(std::move(coords));
}

}  // namespace ringlab
