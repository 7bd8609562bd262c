#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace polya {

/// Immutable undirected connected graph over dense node ids 0..N-1.
///
/// Construction validates: symmetry, no self-loops, connectivity (a
/// disconnected input is rejected, not reduced to its giant component).
/// `closed_neighborhood(i)` is {i} union neighbors, sorted — the index set the
/// contagion process samples over. Original input labels are kept in a sidecar
/// for output; all internal indexing is dense.
class Graph {
public:
    /// Builds from an edge set over dense ids. Throws std::invalid_argument on
    /// self-loops, out-of-range ids, or a disconnected result (the message
    /// reports the component count).
    Graph(int node_count, const std::vector<std::pair<int, int>>& edges,
          std::vector<std::string> labels = {});

    int node_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return edge_count_; }
    int degree(int i) const { return static_cast<int>(adjacency_[i].size()); }

    const std::vector<int>& neighbors(int i) const { return adjacency_[i]; }
    const std::vector<int>& closed_neighborhood(int i) const { return closed_[i]; }
    int max_closed_neighborhood() const;

    /// Original label of node i ("0","1",... when constructed without labels).
    const std::string& label(int i) const { return labels_[i]; }

    /// Canonical edge-list text over dense ids ("u v\n", u < v, sorted);
    /// input to the run manifest's content hash.
    std::string canonical_edge_text() const;

private:
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::vector<int>> closed_;
    std::vector<std::string> labels_;
    int edge_count_ = 0;
};

/// Static per-node topology quantities consumed by the centrality-weighted
/// curing allocation.
struct CentralityTable {
    Eigen::ArrayXi degree;
    Eigen::ArrayXd closeness;  // 1 / sum of hop distances to every node
};

/// Parses whitespace-separated "label label" lines; '#' starts a comment.
/// Labels are remapped to dense ids in first-appearance order; duplicate edges
/// collapse. Throws std::invalid_argument with a line number on malformed
/// lines and on self-loops, and rejects disconnected graphs.
Graph load_edge_list(std::istream& in);

/// Preferential attachment: seed clique of m+1 nodes, then each new node
/// attaches to m distinct existing nodes with probability proportional to
/// current degree. m=1 yields a tree with n-1 edges. Deterministic per seed.
/// Requires n >= m+1, m >= 1.
Graph generate_barabasi_albert(int n, int m, std::uint64_t seed);

/// Exact closeness via one BFS per node, O(N*|E|).
CentralityTable closeness_centrality(const Graph& g);

/// Writes "u v" lines (original labels) with a '#' header; the inverse of
/// load_edge_list up to label remapping.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace polya
