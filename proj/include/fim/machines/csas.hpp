#pragma once

#include <string>
#include <vector>

#include "fim/engines/csa.hpp"

// Checking stack automata modelling an element of FIM_1 as a stack
// [L^l O R^n] whose bottom cell is marked "-" and top cell "+" (a lone O is
// "O+-"). The pointer moves up on x and down on x̄.
namespace fim::machines {

using engines::CsaSpec;

/// One-tape acceptor of WP(FIM_1) on input u # v^inv $. Endpoint visits are
/// tracked as a seen-set {-, +} per side of '#'; the cell under the pointer
/// counts whenever a symbol is read there.
CsaSpec build_csa_wp();

/// The printed checking table with its printed endpoint sets
/// {O-, R-} / {O+, L+}, and nothing added.
CsaSpec build_csa_wp_verbatim();

/// Two-tape acceptor of ι(FIM_1) on (u $, v $). Setup also marks the cell
/// of μ; after tape 1 the pointer returns to O before tape 2 is read.
CsaSpec build_csa_iota();

/// The endpoint sets used by build_csa_wp (bottom, top).
std::vector<std::string> bottom_endpoint_cells();
std::vector<std::string> top_endpoint_cells();

}  // namespace fim::machines
