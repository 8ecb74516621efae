#include "netdopt/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "netdopt/errors.hpp"
#include "netdopt/rng.hpp"

namespace netdopt {

Network Network::from_edges(int n, std::vector<std::pair<int, int>> edges,
                            std::vector<std::string> labels) {
  if (n < 2) throw std::invalid_argument("network needs at least 2 nodes");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw std::invalid_argument("label count does not match node count");

  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop on node " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Network net;
  net.n_ = n;
  net.edges_ = std::move(edges);
  net.labels_ = std::move(labels);

  net.degrees_.assign(static_cast<size_t>(n), 0);
  for (const auto& [u, v] : net.edges_) {
    ++net.degrees_[static_cast<size_t>(u)];
    ++net.degrees_[static_cast<size_t>(v)];
  }
  for (int i = 0; i < n; ++i) {
    if (net.degrees_[static_cast<size_t>(i)] == 0)
      throw std::invalid_argument("isolated node " + std::to_string(i));
  }

  net.offsets_.assign(static_cast<size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i)
    net.offsets_[static_cast<size_t>(i) + 1] =
        net.offsets_[static_cast<size_t>(i)] +
        static_cast<size_t>(net.degrees_[static_cast<size_t>(i)]);
  net.adj_.resize(net.offsets_.back());
  std::vector<std::size_t> cursor(net.offsets_.begin(), net.offsets_.end() - 1);
  for (const auto& [u, v] : net.edges_) {
    net.adj_[cursor[static_cast<size_t>(u)]++] = v;
    net.adj_[cursor[static_cast<size_t>(v)]++] = u;
  }
  for (int i = 0; i < n; ++i) {
    auto begin = net.adj_.begin() + static_cast<long>(net.offsets_[static_cast<size_t>(i)]);
    auto end = net.adj_.begin() + static_cast<long>(net.offsets_[static_cast<size_t>(i) + 1]);
    std::sort(begin, end);
  }

  net.sum_m_ = 0;
  net.sum_m2_ = 0;
  for (int d : net.degrees_) {
    net.sum_m_ += d;
    net.sum_m2_ += static_cast<long long>(d) * d;
  }
  return net;
}

bool Network::has_edge(int i, int j) const {
  auto nb = neighbors(i);
  return std::binary_search(nb.begin(), nb.end(), j);
}

std::string Network::label(int i) const {
  if (has_labels()) return labels_[static_cast<size_t>(i)];
  return std::to_string(i);
}

std::optional<int> Network::index_of_label(std::string_view lab) const {
  if (has_labels()) {
    for (int i = 0; i < n_; ++i)
      if (labels_[static_cast<size_t>(i)] == lab) return i;
    return std::nullopt;
  }
  try {
    int idx = std::stoi(std::string(lab));
    if (idx >= 0 && idx < n_) return idx;
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

ClusterSet ClusterSet::of(std::vector<Network> clusters) {
  ClusterSet cs;
  cs.offsets.reserve(clusters.size());
  int offset = 0;
  for (const auto& c : clusters) {
    cs.offsets.push_back(offset);
    offset += c.node_count();
  }
  cs.clusters = std::move(clusters);
  return cs;
}

Network load_edge_list(std::string_view text) {
  std::unordered_map<std::string, int> index;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;

  auto intern = [&](const std::string& token) {
    auto [it, inserted] = index.try_emplace(token, static_cast<int>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;          // blank
    if (a[0] == '#') continue;         // comment
    if (!(ls >> b)) throw parse_error("expected two node tokens", lineno);
    if (ls >> extra) throw parse_error("trailing token '" + extra + "'", lineno);
    if (a == b) throw parse_error("self-loop on node '" + a + "'", lineno);
    edges.emplace_back(intern(a), intern(b));
  }
  if (labels.empty()) throw parse_error("edge list is empty");

  return Network::from_edges(static_cast<int>(labels.size()), std::move(edges),
                             std::move(labels));
}

Network load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_edge_list(buf.str());
}

std::string edge_list_text(const Network& net) {
  std::ostringstream out;
  for (const auto& [u, v] : net.edges())
    out << net.label(u) << ' ' << net.label(v) << '\n';
  return out.str();
}

void save_edge_list_file(const Network& net, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write '" + path + "'");
  out << edge_list_text(net);
  if (!out) throw std::ios_base::failure("write failed for '" + path + "'");
}

Network generate_random(int n, double p, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("need 0 < p < 1");

  constexpr int kMaxAttempts = 256;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    std::vector<std::pair<int, int>> edges;
    std::vector<int> degree(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng.bernoulli(p)) {
          edges.emplace_back(i, j);
          ++degree[static_cast<size_t>(i)];
          ++degree[static_cast<size_t>(j)];
        }
      }
    }
    if (std::all_of(degree.begin(), degree.end(), [](int d) { return d > 0; }))
      return Network::from_edges(n, std::move(edges));
  }
  throw std::runtime_error(
      "failed to draw a network without isolated nodes; increase density p");
}

Network compose_clusters(const ClusterSet& cs) {
  if (cs.clusters.empty()) throw std::invalid_argument("no clusters given");

  int total = 0;
  bool labeled = false;
  for (const auto& c : cs.clusters) {
    total += c.node_count();
    labeled = labeled || c.has_labels();
  }

  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  if (labeled) labels.reserve(static_cast<size_t>(total));
  int offset = 0;
  for (size_t k = 0; k < cs.clusters.size(); ++k) {
    const Network& c = cs.clusters[k];
    for (const auto& [u, v] : c.edges())
      edges.emplace_back(u + offset, v + offset);
    if (labeled) {
      for (int i = 0; i < c.node_count(); ++i)
        labels.push_back("c" + std::to_string(k) + ":" + c.label(i));
    }
    offset += c.node_count();
  }
  return Network::from_edges(total, std::move(edges), std::move(labels));
}

std::string network_json(const Network& net) {
  nlohmann::json doc;
  doc["n"] = net.node_count();
  doc["degrees"] = net.degrees();
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : net.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  if (net.has_labels()) {
    auto labels = nlohmann::json::array();
    for (int i = 0; i < net.node_count(); ++i) labels.push_back(net.label(i));
    doc["labels"] = std::move(labels);
  }
  return doc.dump(2);
}

}  // namespace netdopt
