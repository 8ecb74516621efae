#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace netdopt {

/// Undirected simple graph with no isolated nodes. Immutable once built:
/// adjacency is symmetric with zero diagonal and every degree is >= 1.
class Network {
 public:
  // Builds from deduplicated undirected edges over nodes 0..n-1.
  // Throws std::invalid_argument on self-loops, out-of-range endpoints,
  // or isolated nodes.
  static Network from_edges(int n, std::vector<std::pair<int, int>> edges,
                            std::vector<std::string> labels = {});

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  int degree(int i) const { return degrees_[static_cast<size_t>(i)]; }
  const std::vector<int>& degrees() const { return degrees_; }

  // Edges as (i, j) pairs with i < j, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  std::span<const int> neighbors(int i) const {
    return {adj_.data() + offsets_[static_cast<size_t>(i)],
            adj_.data() + offsets_[static_cast<size_t>(i) + 1]};
  }

  bool has_edge(int i, int j) const;

  long long degree_sum() const { return sum_m_; }          // sum m_i = 2 * edges
  long long degree_square_sum() const { return sum_m2_; }  // sum m_i^2

  bool has_labels() const { return !labels_.empty(); }
  // External identifier for node i: its label if present, else its index.
  std::string label(int i) const;
  std::optional<int> index_of_label(std::string_view lab) const;

 private:
  Network() = default;

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> degrees_;
  std::vector<std::size_t> offsets_;  // CSR offsets into adj_
  std::vector<int> adj_;
  std::vector<std::string> labels_;
  long long sum_m_ = 0;
  long long sum_m2_ = 0;
};

/// Ordered, node-disjoint clusters with their offsets in the composed graph.
struct ClusterSet {
  std::vector<Network> clusters;
  std::vector<int> offsets;

  static ClusterSet of(std::vector<Network> clusters);
};

// Parses "u v" edge lines; '#' lines and blank lines are skipped. Labels are
// mapped to dense indices in first-appearance order.
Network load_edge_list(std::string_view text);
Network load_edge_list_file(const std::string& path);

std::string edge_list_text(const Network& net);
void save_edge_list_file(const Network& net, const std::string& path);

// Erdos-Renyi style draw: each unordered pair is an edge with probability p.
// Regenerates with derived sub-seeds until no node is isolated.
Network generate_random(int n, double p, std::uint64_t seed);

// Block-diagonal union of the clusters; no cross-cluster edges.
Network compose_clusters(const ClusterSet& clusters);

// JSON document with n, edges, degrees and (if present) labels.
std::string network_json(const Network& net);

}  // namespace netdopt
