#include "polya/graph.hpp"

#include "polya/rng.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace polya {

namespace {

// Returns the number of connected components (BFS from every unseen node).
int component_count(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<char> seen(n, 0);
    int components = 0;
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        ++components;
        std::queue<int> q;
        q.push(start);
        seen[start] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
            }
        }
    }
    return components;
}

}  // namespace

Graph::Graph(int node_count, const std::vector<std::pair<int, int>>& edges,
             std::vector<std::string> labels) {
    if (node_count <= 0) throw std::invalid_argument("graph: node count must be positive");
    adjacency_.assign(node_count, {});
    std::set<std::pair<int, int>> unique_edges;
    for (auto [a, b] : edges) {
        if (a < 0 || a >= node_count || b < 0 || b >= node_count)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (a == b) throw std::invalid_argument("graph: self-loop on node " + std::to_string(a));
        unique_edges.insert({std::min(a, b), std::max(a, b)});
    }
    for (auto [a, b] : unique_edges) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    edge_count_ = static_cast<int>(unique_edges.size());
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

    int components = component_count(adjacency_);
    if (components != 1)
        throw std::invalid_argument("graph: not connected (" + std::to_string(components) +
                                    " components)");

    closed_.resize(node_count);
    for (int i = 0; i < node_count; ++i) {
        closed_[i].reserve(adjacency_[i].size() + 1);
        closed_[i] = adjacency_[i];
        closed_[i].insert(std::lower_bound(closed_[i].begin(), closed_[i].end(), i), i);
    }

    if (labels.empty()) {
        labels_.reserve(node_count);
        for (int i = 0; i < node_count; ++i) labels_.push_back(std::to_string(i));
    } else {
        if (static_cast<int>(labels.size()) != node_count)
            throw std::invalid_argument("graph: label count does not match node count");
        labels_ = std::move(labels);
    }
}

int Graph::max_closed_neighborhood() const {
    int m = 0;
    for (const auto& c : closed_) m = std::max(m, static_cast<int>(c.size()));
    return m;
}

std::string Graph::canonical_edge_text() const {
    std::ostringstream out;
    for (int i = 0; i < node_count(); ++i)
        for (int j : adjacency_[i])
            if (i < j) out << i << ' ' << j << '\n';
    return out.str();
}

Graph load_edge_list(std::istream& in) {
    std::unordered_map<std::string, int> id_of;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    auto intern = [&](const std::string& label) {
        auto [it, inserted] = id_of.try_emplace(label, static_cast<int>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        std::string a, b, extra;
        if (!(tokens >> a)) continue;  // blank or comment-only line
        if (!(tokens >> b) || (tokens >> extra))
            throw std::invalid_argument("edge list: line " + std::to_string(line_no) +
                                        ": expected two node labels");
        if (a == b)
            throw std::invalid_argument("edge list: line " + std::to_string(line_no) +
                                        ": self-loop on '" + a + "'");
        edges.emplace_back(intern(a), intern(b));
    }
    if (labels.empty()) throw std::invalid_argument("edge list: no edges found");
    return Graph(static_cast<int>(labels.size()), edges, std::move(labels));
}

Graph generate_barabasi_albert(int n, int m, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("barabasi-albert: m must be >= 1");
    if (n < m + 1)
        throw std::invalid_argument("barabasi-albert: need n >= m+1 (got n=" + std::to_string(n) +
                                    ", m=" + std::to_string(m) + ")");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    // endpoints stores one entry per half-edge, so uniform sampling from it is
    // degree-proportional.
    std::vector<int> endpoints;
    for (int a = 0; a < m + 1; ++a)
        for (int b = a + 1; b < m + 1; ++b) {
            edges.emplace_back(a, b);
            endpoints.push_back(a);
            endpoints.push_back(b);
        }
    for (int v = m + 1; v < n; ++v) {
        std::set<int> targets;
        while (static_cast<int>(targets.size()) < m) {
            auto pick = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(endpoints.size()));
            targets.insert(endpoints[std::min(pick, endpoints.size() - 1)]);
        }
        for (int t : targets) {
            edges.emplace_back(v, t);
            endpoints.push_back(v);
            endpoints.push_back(t);
        }
    }
    return Graph(n, edges);
}

CentralityTable closeness_centrality(const Graph& g) {
    const int n = g.node_count();
    CentralityTable table;
    table.degree.resize(n);
    table.closeness.resize(n);
    std::vector<int> dist(n);
    for (int src = 0; src < n; ++src) {
        table.degree[src] = g.degree(src);
        std::fill(dist.begin(), dist.end(), -1);
        dist[src] = 0;
        std::queue<int> q;
        q.push(src);
        long long total = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            total += dist[v];
            for (int w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
            }
        }
        table.closeness[src] = 1.0 / static_cast<double>(total);
    }
    return table;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# nodes " << g.node_count() << " edges " << g.edge_count() << '\n';
    for (int i = 0; i < g.node_count(); ++i)
        for (int j : g.neighbors(i))
            if (i < j) out << g.label(i) << ' ' << g.label(j) << '\n';
}

}  // namespace polya
