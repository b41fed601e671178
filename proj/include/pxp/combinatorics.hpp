#pragma once

#include <optional>
#include <vector>

#include "pxp/bigint.hpp"
#include "pxp/sector.hpp"

// Closed-form counting of constrained configurations, symmetry-resolved
// state numbers, and chiral charges for each symmetry sector. Everything
// here is a pure function of (L, N) evaluated in exact arithmetic.
namespace pxp::combinatorics {

// Chiral charges of the inversion-symmetric (+) and antisymmetric (-) sectors.
struct ChargePair {
    BigInt plus;
    BigInt minus;
    BigInt total() const { return plus + minus; }
    BigInt split() const { return plus - minus; }  // the Fibonacci-valued difference
};

// --- open chain -----------------------------------------------------------

// Number of ways to place N excitations on an open L-site chain with no two
// adjacent: C(L-N, N) + C(L-N, N-1).
BigInt omega_obc(long sites, long excitations);

// Number of those configurations invariant under spatial inversion.
BigInt delta_obc(long sites, long excitations);

// Total chiral charge (even-N count minus odd-N count), evaluated by
// summation; equals +1, 0, -1 depending on L mod 6.
BigInt chiral_charge_obc_total(long sites);

// Charges resolved by inversion sector. |plus - minus| = F_{l+1} (L = 2l)
// or F_l (L = 2l+1).
ChargePair chiral_charges_obc(long sites);

// --- periodic chain, momentum 0 -------------------------------------------

// Configurations with the first site excited: C(L-N-1, N-1).
BigInt phi_first_excited(long sites, long excitations);

// Number of orthogonal zero-momentum states with N excitations, i.e. the
// number of translation orbits (necklaces).
BigInt omega_k0(long sites, long excitations);

// Orbit count resolved under inversion: symmetric minus antisymmetric.
BigInt delta_k0(long sites, long excitations);

// |plus - minus| = F_{l+1} - F_l for both L = 2l and L = 2l+1.
ChargePair chiral_charges_k0(long sites);

// --- periodic chain, momentum pi -------------------------------------------

// Number of orthogonal pi-momentum states with N excitations: translation
// orbits whose exact period is even. Requires even L >= 2; N = 0 gives 0.
BigInt omega_kpi(long sites, long excitations);

// Inversion-resolved difference for the pi sector (may be negative).
BigInt delta_kpi(long sites, long excitations);

// |plus - minus| = F_l - F_{l-1} for l >= 1; (0, 0) at L = 0.
ChargePair chiral_charges_kpi(long sites);

// --- diagnostics and helpers ------------------------------------------------

// The assembled pi-sector closed form evaluated verbatim, including the
// delta(Phi > 0)-gated correction term. At certain (L, N) — first at
// (6, 2) — this expression is not even integral; omega_kpi uses the orbit
// definition instead. Kept so mismatches can be reported, not reconciled.
BigRat omega_kpi_printed_form(long sites, long excitations);

struct KpiMismatch {
    long sites = 0;
    long excitations = 0;
    BigRat printed;
    BigInt orbit_count;
};

// All N in [1, L] where the printed form deviates from the orbit count.
std::vector<KpiMismatch> kpi_printed_form_mismatches(long sites);

// Ring configurations with N excitations (any momentum): C(L-N, N) + C(L-N-1, N-1).
BigInt omega_ring(long sites, long excitations);

// Chiral charge of a whole sector from the closed forms above; nullopt for
// sectors without one (periodic inversion sectors at unresolved momentum).
std::optional<BigInt> sector_charge(long sites, const SectorSpec& sector);

}  // namespace pxp::combinatorics
