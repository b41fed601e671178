#include "pxp/sector.hpp"

#include <stdexcept>

namespace pxp {

void SectorSpec::validate(long sites) const {
    if (sites < 0) throw std::invalid_argument("sector: negative site count");
    if (momentum != Momentum::none && boundary != Boundary::periodic)
        throw std::invalid_argument("sector: momentum sectors require periodic boundary");
    if (momentum == Momentum::pi && sites % 2 != 0)
        throw std::invalid_argument("sector: pi-momentum sector requires an even number of sites");
    if (boundary == Boundary::periodic && momentum != Momentum::none && sites < 1)
        throw std::invalid_argument("sector: momentum sectors require at least one site");
}

std::string boundary_name(Boundary b) { return b == Boundary::open ? "obc" : "pbc"; }

std::string momentum_name(Momentum m) {
    switch (m) {
        case Momentum::none: return "none";
        case Momentum::zero: return "0";
        case Momentum::pi: return "pi";
    }
    return "?";
}

std::string inversion_name(Inversion i) {
    switch (i) {
        case Inversion::none: return "none";
        case Inversion::plus: return "plus";
        case Inversion::minus: return "minus";
    }
    return "?";
}

std::string SectorSpec::label() const {
    std::string s = boundary_name(boundary);
    if (momentum != Momentum::none) s += " k=" + momentum_name(momentum);
    if (inversion != Inversion::none) s += " I=" + std::string(inversion == Inversion::plus ? "+" : "-");
    return s;
}

}  // namespace pxp
