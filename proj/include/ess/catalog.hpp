#ifndef ESS_CATALOG_HPP
#define ESS_CATALOG_HPP

#include "ess/extrinsic.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace ess {

/// Facts a catalog entry is expected to satisfy; verified when the entry is
/// constructed, so a catalog entry in hand is already checked.
struct ExpectedFacts {
    std::size_t srk = 0;
    bool full = false;
    std::string reduction_target; // entry name the reduction is equivalent to
    std::optional<std::size_t> nilpotency_class; // of g, when g is nilpotent
};

struct CatalogEntry {
    std::string name;
    SymplecticSymmetricPair pair;
    std::optional<ExtrinsicMorphism> morphism;
    ExpectedFacts expected;
};

/// Abelian pair on Q^(2n) with the standard form; morphism Lambda = 0,
/// tau = Id. Full, srk 0.
CatalogEntry flat_affine(std::size_t n);

/// The non-affine embedding of the flat plane into Q^4: basis (a1,a2,b1,b2),
/// Omega(a1,a2) = Omega(b1,b2) = 1, tau(x_i) = a_i, Lambda(x1): a1 -> b1,
/// b2 -> -a2, Lambda(x2) = 0. Valid, not full, reduces to flat_affine(1).
CatalogEntry parabola_flat();

/// The pinned nonflat entry: the first closure success with nonzero curvature
/// in the deterministic enumeration (dims (2,2), (2,4), (4,2), (4,4) in that
/// order, entries {-1,0,1}). The winning alpha lives in dims (4,2); the two
/// smaller spaces contain only flat successes.
CatalogEntry nilpotent_primary();

/// Enumerate symmetric alpha tensors over standard blocks of the given
/// dimensions, entries drawn from entry_set in lexicographic order (first
/// slot most significant). Runs ferus_construct on each and keeps successes
/// until `limit` of them are found. Every returned entry carries recorded
/// srk, fullness and nilpotency class.
std::vector<CatalogEntry> nilpotent_search(std::size_t dim_p, std::size_t dim_w2,
                                           const std::vector<long>& entry_set,
                                           std::size_t limit);

/// Embed the base morphism into V (+) Q^(2 pad) acting trivially on the
/// padding, then conjugate by a seeded random symplectic map (a product of
/// four symplectic transvections drawn from the documented LCG). Never full
/// when pad > 0.
ExtrinsicMorphism random_morphism(std::uint64_t seed, const CatalogEntry& base,
                                  std::size_t pad);

/// Nilpotency class via the lower central series; nullopt if not nilpotent.
std::optional<std::size_t> nilpotency_class(const LieAlgebra& L);

/// Lookup by CLI name: flat_affine_<n>, parabola_flat, nilpotent_primary.
std::optional<CatalogEntry> catalog_entry(const std::string& name);

} // namespace ess

#endif
