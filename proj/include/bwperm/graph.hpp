#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bwperm {

// Undirected simple graph on vertices labelled 1..n. Neighbor lists are kept
// sorted so edge queries are a binary search.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : adj_(static_cast<size_t>(checked_size(n))) {}

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [u, v] : edges) {
            check_label(u);
            check_label(v);
            if (u == v) {
                throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
            }
            adj_[u - 1].push_back(v);
            adj_[v - 1].push_back(u);
        }
        for (auto& list : adj_) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
    }

    int size() const { return static_cast<int>(adj_.size()); }

    const std::vector<int>& neighbors(int v) const {
        check_label(v);
        return adj_[v - 1];
    }

    bool has_edge(int u, int v) const {
        check_label(v);
        const auto& list = neighbors(u);
        return std::binary_search(list.begin(), list.end(), v);
    }

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 1; u <= size(); ++u) {
            for (int v : adj_[u - 1]) {
                if (u < v) out.emplace_back(u, v);
            }
        }
        return out;
    }

    size_t edge_count() const {
        size_t twice = 0;
        for (const auto& list : adj_) twice += list.size();
        return twice / 2;
    }

    // Subgraph induced by the given labels, relabelled 1..k in the given order.
    Graph induced(const std::vector<int>& labels) const {
        std::vector<int> index(adj_.size() + 1, 0);
        for (size_t i = 0; i < labels.size(); ++i) {
            check_label(labels[i]);
            index[labels[i]] = static_cast<int>(i) + 1;
        }
        std::vector<std::pair<int, int>> sub;
        for (int u : labels) {
            for (int v : adj_[u - 1]) {
                if (index[v] != 0 && index[u] < index[v]) sub.emplace_back(index[u], index[v]);
            }
        }
        return Graph(static_cast<int>(labels.size()), sub);
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    static int checked_size(int n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        return n;
    }

    void check_label(int v) const {
        if (v < 1 || v > size()) {
            throw std::out_of_range("vertex label " + std::to_string(v) + " outside 1.." +
                                    std::to_string(size()));
        }
    }

    std::vector<std::vector<int>> adj_;
};

} // namespace bwperm
