#pragma once

#include <string>

#include "fim/munn_tree.hpp"

namespace fim {

/// Graphviz rendering of a Munn tree. Vertices are labelled by their reduced
/// word ("1" for α); α is double-circled, ω is filled, edges carry x_i.
std::string to_dot(const MunnTree& tree);

}  // namespace fim
