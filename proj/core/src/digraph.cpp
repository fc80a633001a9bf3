#include "vsdo/digraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace vsdo {

void Digraph::add_edge(VertexId u, VertexId v, Weight w) {
    if (u >= out_.size() || v >= out_.size())
        throw std::out_of_range("Digraph::add_edge: endpoint out of range");
    if (u == v) return;  // self-loops ignored
    out_[u].push_back({v, w});
    ++m_;
}

Weight Digraph::max_weight() const {
    Weight w = 0;
    for (const auto& adj : out_)
        for (const Edge& e : adj) w = std::max(w, e.w);
    return w;
}

void Digraph::dedup_parallel_min() {
    for (auto& adj : out_) {
        std::sort(adj.begin(), adj.end(), [](const Edge& a, const Edge& b) {
            return a.to != b.to ? a.to < b.to : a.w < b.w;
        });
        auto last = std::unique(adj.begin(), adj.end(), [](const Edge& a, const Edge& b) {
            return a.to == b.to;
        });
        m_ -= static_cast<std::size_t>(adj.end() - last);
        adj.erase(last, adj.end());
    }
}

}  // namespace vsdo
