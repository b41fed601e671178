#include "pxp/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

namespace pxp::combinatorics {

namespace {

void check_sites(long sites, long min_sites, const char* what) {
    if (sites < min_sites) throw std::invalid_argument(std::string(what) + ": site count out of range");
}

void check_excitations(long n) {
    if (n < 0) throw std::invalid_argument("negative excitation count");
}

std::vector<long> divisors_ascending(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Configurations with the first site excited that consist of exactly d
// repeating motifs, for every d | gcd(L, N). Inclusion-exclusion runs from
// the largest motif count down so all higher terms are available.
struct MotifCounts {
    std::vector<long> divisors;  // of gcd(L, N), ascending
    std::vector<BigInt> exact;   // aligned with divisors
};

MotifCounts exact_motif_counts(long sites, long excitations) {
    MotifCounts mc;
    mc.divisors = divisors_ascending(std::gcd(sites, excitations));
    mc.exact.resize(mc.divisors.size());
    for (int i = static_cast<int>(mc.divisors.size()) - 1; i >= 0; --i) {
        const long d = mc.divisors[i];
        BigInt v = binomial(sites / d - excitations / d - 1, excitations / d - 1);
        for (std::size_t j = i + 1; j < mc.divisors.size(); ++j)
            if (mc.divisors[j] % d == 0) v -= mc.exact[j];
        if (v < 0) throw std::logic_error("exact motif count went negative");
        mc.exact[i] = v;
    }
    return mc;
}

}  // namespace

BigInt omega_obc(long sites, long excitations) {
    check_sites(sites, 0, "omega_obc");
    check_excitations(excitations);
    return binomial(sites - excitations, excitations) + binomial(sites - excitations, excitations - 1);
}

BigInt delta_obc(long sites, long excitations) {
    check_sites(sites, 0, "delta_obc");
    check_excitations(excitations);
    const long l = sites / 2;
    const long n = excitations / 2;
    if (sites % 2 == 0)
        return excitations % 2 == 0 ? binomial(l - n, n) : BigInt(0);
    return excitations % 2 == 0 ? binomial(l - n, n) + binomial(l - n, n - 1) : binomial(l - n, n);
}

BigInt chiral_charge_obc_total(long sites) {
    check_sites(sites, 0, "chiral_charge_obc_total");
    BigInt q = 0;
    for (long n = 0; n <= sites; ++n) {
        const BigInt w = omega_obc(sites, n);
        if (n % 2 == 0) q += w; else q -= w;
    }
    return q;
}

ChargePair chiral_charges_obc(long sites) {
    check_sites(sites, 0, "chiral_charges_obc");
    BigInt acc_plus = 0, acc_minus = 0;
    for (long n = 0; n <= sites; ++n) {
        const BigInt w = omega_obc(sites, n);
        const BigInt d = delta_obc(sites, n);
        if (n % 2 == 0) { acc_plus += w + d; acc_minus += w - d; }
        else           { acc_plus -= w + d; acc_minus -= w - d; }
    }
    return {exact_half(acc_plus), exact_half(acc_minus)};
}

BigInt phi_first_excited(long sites, long excitations) {
    check_sites(sites, 1, "phi_first_excited");
    if (excitations < 1) throw std::invalid_argument("phi_first_excited: needs at least one excitation");
    return binomial(sites - excitations - 1, excitations - 1);
}

BigInt omega_k0(long sites, long excitations) {
    check_sites(sites, 1, "omega_k0");
    check_excitations(excitations);
    if (excitations == 0) return 1;  // the vacuum is translationally invariant
    const MotifCounts mc = exact_motif_counts(sites, excitations);
    BigInt total = 0;
    for (std::size_t i = 0; i < mc.divisors.size(); ++i) total += mc.divisors[i] * mc.exact[i];
    return exact_div(total, excitations);
}

BigInt delta_k0(long sites, long excitations) {
    check_sites(sites, 1, "delta_k0");
    check_excitations(excitations);
    const long l = sites / 2;
    const long n = excitations / 2;
    // Even N: an l-site configuration with the last site in the ground state;
    // odd N: the same on l-1 sites (same count for even and odd L).
    return excitations % 2 == 0 ? binomial(l - n, n) : binomial(l - n - 1, n);
}

ChargePair chiral_charges_k0(long sites) {
    check_sites(sites, 1, "chiral_charges_k0");
    BigInt acc_plus = 0, acc_minus = 0;
    for (long n = 0; n <= sites; ++n) {
        const BigInt w = omega_k0(sites, n);
        const BigInt d = delta_k0(sites, n);
        if (n % 2 == 0) { acc_plus += w + d; acc_minus += w - d; }
        else           { acc_plus -= w + d; acc_minus -= w - d; }
    }
    return {exact_half(acc_plus), exact_half(acc_minus)};
}

BigInt omega_kpi(long sites, long excitations) {
    if (sites < 2 || sites % 2 != 0)
        throw std::invalid_argument("omega_kpi: pi-momentum sector requires an even number of sites >= 2");
    check_excitations(excitations);
    if (excitations == 0) return 0;  // alternating sum annihilates the vacuum
    // Orbits with even exact period L/d support momentum pi; each contributes
    // exactly one state.
    const MotifCounts mc = exact_motif_counts(sites, excitations);
    BigInt total = 0;
    for (std::size_t i = 0; i < mc.divisors.size(); ++i)
        if ((sites / mc.divisors[i]) % 2 == 0) total += mc.divisors[i] * mc.exact[i];
    return exact_div(total, excitations);
}

BigInt delta_kpi(long sites, long excitations) {
    if (sites < 2 || sites % 2 != 0)
        throw std::invalid_argument("delta_kpi: pi-momentum sector requires an even number of sites >= 2");
    check_excitations(excitations);
    const long l = sites / 2;
    const long n = excitations / 2;
    if (excitations % 2 == 0) return binomial(l - n - 1, n) - binomial(l - n, n);
    return -binomial(l - n - 1, n);
}

ChargePair chiral_charges_kpi(long sites) {
    if (sites < 0 || sites % 2 != 0)
        throw std::invalid_argument("chiral_charges_kpi: requires an even number of sites");
    if (sites == 0) return {0, 0};
    BigInt acc_plus = 0, acc_minus = 0;
    for (long n = 1; n <= sites; ++n) {  // even-N sum starts at N = 2, odd at N = 1
        const BigInt w = omega_kpi(sites, n);
        const BigInt d = delta_kpi(sites, n);
        if (n % 2 == 0) { acc_plus += w + d; acc_minus += w - d; }
        else           { acc_plus -= w + d; acc_minus -= w - d; }
    }
    return {exact_half(acc_plus), exact_half(acc_minus)};
}

BigRat omega_kpi_printed_form(long sites, long excitations) {
    if (sites < 2 || sites % 2 != 0)
        throw std::invalid_argument("omega_kpi_printed_form: requires an even number of sites >= 2");
    check_excitations(excitations);
    if (excitations == 0) return BigRat(0);

    const auto divs = divisors_ascending(std::gcd(sites, excitations));
    const auto n = divs.size();
    std::vector<BigInt> phi(n), theta(n), phi_tilde(n), theta_tilde(n);
    for (std::size_t i = 0; i < n; ++i) {
        const long d = divs[i];
        const BigInt b = binomial(sites / d - excitations / d - 1, excitations / d - 1);
        if ((sites / d) % 2 == 0) phi[i] = b;                    // motif repeated an even number of... L/d even
        if ((sites / d) % 2 == 1 && d % 2 == 0) theta[i] = b;    // d even, L/d odd
    }
    for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
        BigInt p = phi[i], t = theta[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            if (divs[j] % divs[i] != 0) continue;
            p -= phi_tilde[j];
            t -= theta_tilde[j];
        }
        phi_tilde[i] = p;
        theta_tilde[i] = t;
    }
    BigInt total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt term = phi_tilde[i];
        if (phi[i] > 0) term -= theta[i] - theta_tilde[i];
        total += divs[i] * term;
    }
    BigRat r(total, excitations);
    r.canonicalize();
    return r;
}

std::vector<KpiMismatch> kpi_printed_form_mismatches(long sites) {
    std::vector<KpiMismatch> out;
    for (long n = 1; n <= sites; ++n) {
        const BigInt orbit = omega_kpi(sites, n);
        const BigRat printed = omega_kpi_printed_form(sites, n);
        if (printed != BigRat(orbit)) out.push_back({sites, n, printed, orbit});
    }
    return out;
}

BigInt omega_ring(long sites, long excitations) {
    check_sites(sites, 1, "omega_ring");
    check_excitations(excitations);
    if (excitations == 0) return 1;
    return binomial(sites - excitations, excitations) +
           binomial(sites - excitations - 1, excitations - 1);
}

std::optional<BigInt> sector_charge(long sites, const SectorSpec& sector) {
    sector.validate(sites);
    if (sector.boundary == Boundary::open) {
        if (sector.inversion == Inversion::none) return chiral_charge_obc_total(sites);
        const ChargePair q = chiral_charges_obc(sites);
        return sector.inversion == Inversion::plus ? q.plus : q.minus;
    }
    switch (sector.momentum) {
        case Momentum::zero: {
            const ChargePair q = chiral_charges_k0(sites);
            if (sector.inversion == Inversion::none) return q.total();
            return sector.inversion == Inversion::plus ? q.plus : q.minus;
        }
        case Momentum::pi: {
            const ChargePair q = chiral_charges_kpi(sites);
            if (sector.inversion == Inversion::none) return q.total();
            return sector.inversion == Inversion::plus ? q.plus : q.minus;
        }
        case Momentum::none: {
            if (sector.inversion != Inversion::none) return std::nullopt;
            BigInt q = 0;
            for (long n = 0; n <= sites; ++n) {
                const BigInt w = omega_ring(sites, n);
                if (n % 2 == 0) q += w; else q -= w;
            }
            return q;
        }
    }
    return std::nullopt;
}

}  // namespace pxp::combinatorics
