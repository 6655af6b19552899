#include "lma/poset.hpp"

namespace lma {

std::vector<std::pair<std::size_t, std::size_t>> poset_covers(
    std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t u = 0; u < n; ++u) {
      if (u == w || !leq(u, w) || leq(w, u)) continue;
      bool covered = true;
      for (std::size_t v = 0; v < n; ++v) {
        if (v == u || v == w) continue;
        if (leq(u, v) && leq(v, w) && !(leq(v, u) || leq(w, v))) {
          covered = false;
          break;
        }
      }
      if (covered) out.emplace_back(u, w);
    }
  }
  return out;
}

std::vector<std::size_t> poset_maxima(
    std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq) {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < n; ++w) {
    bool maximal = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (v != w && leq(w, v) && !leq(v, w)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(w);
  }
  return out;
}

std::string dot_export(const std::string& graph_name,
                       const std::vector<std::string>& node_labels,
                       const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  std::string s = "digraph \"" + graph_name + "\" {\n";
  s += "  rankdir=BT;\n";
  for (std::size_t i = 0; i < node_labels.size(); ++i)
    s += "  n" + std::to_string(i) + " [label=\"" + node_labels[i] + "\"];\n";
  for (const auto& [u, w] : covers)
    s += "  n" + std::to_string(u) + " -> n" + std::to_string(w) + ";\n";
  s += "}\n";
  return s;
}

}  // namespace lma
