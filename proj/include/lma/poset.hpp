#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace lma {

// Cover relations (transitive reduction) of a finite poset given by a leq
// callback over indices [0, n). O(n^3) scans; fine at desk scale.
std::vector<std::pair<std::size_t, std::size_t>> poset_covers(
    std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq);

// Indices with nothing strictly above them.
std::vector<std::size_t> poset_maxima(
    std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq);

// Graphviz digraph with edges drawn cover -> covered element (top down).
std::string dot_export(const std::string& graph_name,
                       const std::vector<std::string>& node_labels,
                       const std::vector<std::pair<std::size_t, std::size_t>>& covers);

}  // namespace lma
