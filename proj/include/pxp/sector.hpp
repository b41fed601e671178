#pragma once

#include <string>

namespace pxp {

enum class Boundary { open, periodic };

// Only the momenta hosting real translation eigenvalues (+1, -1) are in
// scope; generic momenta enter dimension counting only.
enum class Momentum { none, zero, pi };

enum class Inversion { none, plus, minus };

// Names a symmetry sector: boundary condition, momentum selector and
// inversion selector.
struct SectorSpec {
    Boundary boundary = Boundary::open;
    Momentum momentum = Momentum::none;
    Inversion inversion = Inversion::none;

    // Throws std::invalid_argument on inconsistent combinations:
    // momentum selectors require periodic boundary, momentum pi requires
    // an even number of sites.
    void validate(long sites) const;

    // Short human-readable label, e.g. "obc", "pbc k=0 I=+".
    std::string label() const;

    bool operator==(const SectorSpec&) const = default;
};

std::string boundary_name(Boundary b);    // "obc" / "pbc"
std::string momentum_name(Momentum m);    // "none" / "0" / "pi"
std::string inversion_name(Inversion i);  // "none" / "plus" / "minus"

}  // namespace pxp
