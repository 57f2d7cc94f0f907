#pragma once

// Decision procedures for the spectral and power-structure properties.
//
// Every pair scan visits ordered pairs (x, y) of element indices and reports
// the lexicographically least failing pair, independent of the number of
// workers. On failure pairs_checked counts the pairs up to and including the
// witness in row-major order; on success it is |G|^2.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "submul/group_engine.hpp"
#include "submul/monomial.hpp"
#include "submul/report.hpp"

namespace submul {

/// Least (x, y) in row-major order with fails(x, y), scanning rows across
/// workers. make_predicate is called once per worker so predicates may keep
/// private caches.
std::optional<std::pair<Index, Index>> scan_pairs(
    std::size_t n, unsigned workers, const std::function<std::function<bool(Index, Index)>()>& make_predicate);

/// Pairs counted under the row-major convention above.
std::uint64_t pairs_counted(std::size_t n, const std::optional<std::pair<Index, Index>>& hit);

/// sigma(AB) within sigma(A) sigma(B) for every ordered pair of the group.
PropertyReport has_property_s(const FiniteGroup& g, unsigned workers = 1);
PropertyReport has_property_s(const std::vector<MonomialMatrix>& gens, std::size_t cap = 4096, unsigned workers = 1);

/// A representation of an abstract group given by images of its generators.
using RepImages = std::vector<MonomialMatrix>;

/// Images of g's generators under the entrywise Galois actions omega ->
/// omega^s, s coprime to the exponent, duplicates removed. g must carry
/// matrices.
std::vector<RepImages> galois_catalog(const FiniteGroup& g);

/// Induced representations of B_p(c, e) from every character of A, as
/// images of (a, b).
std::vector<RepImages> induced_catalog(std::int64_t p, int c, int e);

/// Whether the distinct irreducible members of the catalog, together with
/// the |G : G'| linear characters, exhaust the irreducible characters of G.
bool catalog_is_complete(const FiniteGroup& g, const std::vector<RepImages>& catalog);

/// Property (S) on every catalog representation of G, which is necessary for
/// S-hat. The verdict is exhaustive only when the catalog is complete and
/// every two-generated subgroup is abelian or all of G; otherwise success
/// is reported as holds-capped.
PropertyReport has_property_s_hat(const FiniteGroup& g, const std::vector<RepImages>& catalog, unsigned workers = 1);

/// Property (S) on the irreducible catalog members only (irreducible reps of
/// G itself). Kept separate from S-hat.
PropertyReport has_property_s_tilde(const FiniteGroup& g, const std::vector<RepImages>& catalog, unsigned workers = 1);

PropertyReport has_wp2(const FiniteGroup& g);
PropertyReport has_p2(const FiniteGroup& g, std::size_t section_cap = 256);
PropertyReport has_p1(const FiniteGroup& g, std::size_t section_cap = 256);

/// For each pair, some z in <x,y>' with (xy)^p = x^p y^p z^p.
PropertyReport is_regular(const FiniteGroup& g, unsigned workers = 1);

/// Regularity of G, G^2, ..., G^m. Success is always holds-capped. Throws
/// CapExceeded if |G|^m exceeds cap.
PropertyReport is_v_regular_bounded(const FiniteGroup& g, int m, std::size_t cap = 4096, unsigned workers = 1);

PropertyReport is_p_abelian(const FiniteGroup& g, unsigned workers = 1);
PropertyReport is_engel(const FiniteGroup& g, int k, unsigned workers = 1);

/// |xy| divides max(|x|, |y|) for all pairs; vacuous if the group fails (S).
PropertyReport order_submultiplicativity(const FiniteGroup& g, unsigned workers = 1);

/// chi(G^(j)) within im(I - pi)^j for an irreducible exponent-p monomial
/// group of degree p, after a monomial similarity that puts P in the group.
/// Throws InvalidArgument when the preconditions fail.
PropertyReport chi_containment(const std::vector<MonomialMatrix>& gens, int j, std::size_t cap = 4096);

/// (1/|G|) sum |tr g|^2, in floating point.
double character_norm(const FiniteGroup& g);
bool is_irreducible(const FiniteGroup& g);
bool is_irreducible(const std::vector<MonomialMatrix>& gens, std::size_t cap = 4096);
PropertyReport irreducibility_report(const FiniteGroup& g);

/// Re-evaluates the condition cited by a failing report and returns true if
/// the failure reproduces exactly.
bool replay_witness(const FiniteGroup& g, const PropertyReport& report);

}  // namespace submul
