#pragma once

#include <string>

#include "gwzeta/zeta.hpp"

namespace gwzeta {

// "59⟨1⟩ + 1⟨u⟩" with the disc part always reduced to 0 or 1 copies of ⟨u⟩.
std::string show_gw(const GwFq& x);

// "2⟨1⟩ + 2⟨-1⟩" in the free basis of GW(Z).
std::string show_gw_int(const GwInt& x);

// Poles of catalog closed forms in the familiar notation: "1", "q_eps^2",
// "-q_eps", "⟨u⟩q_eps"; anything else falls back to show_gw.
std::string show_pole(const GwFq& pole);

// Factor lists grouped by weight, in the "d/dt log 1/(...)" display style.
std::string show_factor_list(const FactorList<GwFq>& factors);

std::string show_series(const Series<GwFq>& s);
std::string show_int_series(const Series<Integer>& s);

}  // namespace gwzeta
