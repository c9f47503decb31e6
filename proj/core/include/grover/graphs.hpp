#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace grover {

using Vertex = std::size_t;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A finite, simple, connected, undirected graph on vertices 0..n-1.
///
/// Construction validates simplicity (no loops, no parallel edges, endpoints in
/// range) and connectivity; every graph that exists is therefore a valid input
/// to the walk machinery.
class Graph {
 public:
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t degree(Vertex v) const { return neighbors_.at(v).size(); }
  /// Sorted ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_.at(v); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Common degree when every vertex has the same degree.
  std::optional<std::size_t> regular_degree() const;
  bool is_bipartite() const;

  Eigen::MatrixXd adjacency_matrix() const;

  /// Original labels when the graph was ingested from a labelled file; empty
  /// otherwise.
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::string> labels_;
};

/// Ordered pair (origin, terminus) of an edge.
struct Arc {
  Vertex origin = 0;
  Vertex terminus = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// All symmetric arcs of a graph in lexicographic (origin, terminus) order.
class ArcSpace {
 public:
  explicit ArcSpace(const Graph& g);

  std::size_t size() const { return arcs_.size(); }
  const Arc& arc(std::size_t a) const { return arcs_.at(a); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  /// Index of the reversed arc.
  std::size_t inverse(std::size_t a) const { return inverse_.at(a); }
  std::optional<std::size_t> index_of(Vertex origin, Vertex terminus) const;
  /// Arcs whose terminus is v, in index order.
  const std::vector<std::size_t>& inbound(Vertex v) const { return inbound_.at(v); }
  /// Arcs whose origin is v, in index order.
  const std::vector<std::size_t>& outbound(Vertex v) const { return outbound_.at(v); }
  std::size_t vertex_count() const { return inbound_.size(); }

 private:
  std::vector<Arc> arcs_;
  std::vector<std::size_t> inverse_;
  std::vector<std::vector<std::size_t>> inbound_;
  std::vector<std::vector<std::size_t>> outbound_;
};

/// Circulant data: Z_n with a connection set of nonzero residues.
struct CirculantSpec {
  std::size_t n = 0;
  std::vector<std::size_t> connection_set;

  /// Sorted, deduplicated copy with residues reduced mod n.
  CirculantSpec normalized() const;
  /// Throws ValidationError if 0 is in the set, the set is not inverse-closed,
  /// or it does not generate Z_n.
  void validate() const;
};

Graph cayley(const CirculantSpec& spec);

/// Z_n with connection set the units mod n.
CirculantSpec unitary_connection_set(std::int64_t n);
Graph unitary_cayley(std::int64_t n);

enum class GraphFamily { cycle, complete, complete_bipartite, complete_tripartite, hamming, path };

/// Standard graph families. Parameters:
///   cycle [n >= 3], complete [n >= 2], path [n >= 2],
///   complete_bipartite [m] or [m1, m2], complete_tripartite [m] or [m1, m2, m3],
///   hamming [s >= 1, t >= 2].
Graph named_graph(GraphFamily family, std::span<const std::int64_t> params);

ArcSpace arc_space(const Graph& g);

/// Edge-list format: "n m" header, then m lines "u v". Labels that are not all
/// integers in [0, n) are relabelled densely in order of first appearance and
/// the originals are kept in Graph::labels().
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace grover
