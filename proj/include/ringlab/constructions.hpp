#pragma once

#include <optional>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// Zero multiplication on the given additive group: ab = 0 for all a, b.
FiniteRing zero_ring(std::vector<long long> orders);

/// Z_n with its usual multiplication (generator squares to itself).
FiniteRing unital_cyclic(long long n);

/// Z_p for prime p, labelled as a field; used as a matrix-ring base.
FiniteRing prime_field(long long p);

/// Pairs over F_p with (a,b)(c,d) = (ac, ad): every (1,x) is a left
/// identity, but (0,1) annihilates the whole ring from the left, so the
/// ring is not even right s-unital.
FiniteRing pairs_left(long long p);

/// Mirror image: (a,b)(c,d) = (ac, bc); right identities (1,x) only.
FiniteRing pairs_right(long long p);

/// The twisted semigroup ring over F_p x F_p: elements x1 + x2 g with
/// (x1 + x2 g)(y1 + y2 g) = x1 y1 + (x1 y2 e2 + x2 y1 e1) g, where
/// e1 = (1,0) and e2 = (0,1).  Coordinates are (x1, x2) flattened.
/// Idempotent as a ring, but neither left nor right s-unital.
FiniteRing twisted_semigroup_ring(long long p);

/// Componentwise operations on the product of the components' groups.
FiniteRing direct_sum(const std::vector<FiniteRing>& components);

/// Full n x n matrix ring over a unital base.
FiniteRing matrix_ring(const FiniteRing& base, std::size_t n);

/// The two-sided ideal generated by g, re-presented as a standalone ring on
/// a cyclic basis of its own additive group.
FiniteRing principal_ideal_subring(const FiniteRing& ring, const RingElement& g);

/// The ideal's member set inside the ambient ring (computation behind
/// principal_ideal_subring, exposed for inspection).
Subgroup two_sided_ideal(const FiniteRing& ring, const RingElement& g);

/// First two-sided identity of the ring in enumeration order, if any.
std::optional<RingElement> find_identity(const FiniteRing& ring);

/// Row-major coordinate layout of a matrix ring over a one-generator base:
/// entry (r,c) lives at coordinate r*n + c.
struct MatrixLayout {
  std::size_t n;
  long long p;  // base field size
};

/// Recovers the layout from names of the form "M<n>(F<p>)".
std::optional<MatrixLayout> matrix_layout_of(const std::string& ring_name);

/// Element with a single base unit at entry (r,c) of an n x n matrix ring
/// over F_p (value 1).
RingElement matrix_unit(const FiniteRing& ring, const MatrixLayout& layout,
                        std::size_t r, std::size_t c);

}  // namespace ringlab
