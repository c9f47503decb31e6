#include "grover/graphs.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <string>

#include "grover/errors.hpp"
#include "grover/numtheory.hpp"

namespace grover {
namespace {

bool connected(std::size_t n, const std::vector<std::vector<Vertex>>& nbrs) {
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const Vertex x = frontier.front();
    frontier.pop();
    for (Vertex y : nbrs[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        frontier.push(y);
      }
    }
  }
  return reached == n;
}

std::string edge_str(Vertex u, Vertex v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

std::size_t checked_size(std::int64_t value, std::int64_t min, const char* what) {
  if (value < min) {
    throw DomainError(std::string(what) + " must be >= " + std::to_string(min) + ", got " +
                      std::to_string(value));
  }
  return static_cast<std::size_t>(value);
}

Graph complete_multipartite(std::span<const std::size_t> parts) {
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    part_of.insert(part_of.end(), parts[p], p);
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < part_of.size(); ++u) {
    for (Vertex v = u + 1; v < part_of.size(); ++v) {
      if (part_of[u] != part_of[v]) edges.push_back({u, v});
    }
  }
  return Graph(part_of.size(), std::move(edges));
}

}  // namespace

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), neighbors_(vertex_count) {
  if (n_ == 0) throw ValidationError("graph must have at least one vertex");
  for (Edge& e : edges) {
    if (e.u >= n_ || e.v >= n_) {
      throw ValidationError("edge " + edge_str(e.u, e.v) + " has an endpoint outside 0.." +
                            std::to_string(n_ - 1));
    }
    if (e.u == e.v) throw ValidationError("loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw ValidationError("parallel edge " + edge_str(dup->u, dup->v));
  }
  for (const Edge& e : edges) {
    neighbors_[e.u].push_back(e.v);
    neighbors_[e.v].push_back(e.u);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
  if (!connected(n_, neighbors_)) throw ValidationError("graph is disconnected");
  edges_ = std::move(edges);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = neighbors_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<std::size_t> Graph::regular_degree() const {
  const std::size_t k = degree(0);
  for (Vertex v = 1; v < n_; ++v) {
    if (degree(v) != k) return std::nullopt;
  }
  return k;
}

bool Graph::is_bipartite() const {
  std::vector<int> colour(n_, -1);
  std::queue<Vertex> frontier;
  colour[0] = 0;
  frontier.push(0);
  while (!frontier.empty()) {
    const Vertex x = frontier.front();
    frontier.pop();
    for (Vertex y : neighbors_[x]) {
      if (colour[y] < 0) {
        colour[y] = 1 - colour[x];
        frontier.push(y);
      } else if (colour[y] == colour[x]) {
        return false;
      }
    }
  }
  return true;
}

Eigen::MatrixXd Graph::adjacency_matrix() const {
  const auto n = static_cast<Eigen::Index>(n_);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : edges_) {
    a(static_cast<Eigen::Index>(e.u), static_cast<Eigen::Index>(e.v)) = 1.0;
    a(static_cast<Eigen::Index>(e.v), static_cast<Eigen::Index>(e.u)) = 1.0;
  }
  return a;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n_) {
    throw ValidationError("label map size " + std::to_string(labels.size()) +
                          " does not match vertex count " + std::to_string(n_));
  }
  labels_ = std::move(labels);
}

ArcSpace::ArcSpace(const Graph& g)
    : inbound_(g.vertex_count()), outbound_(g.vertex_count()) {
  if (g.edge_count() == 0) throw DomainError("arc space of a graph with no edges");
  arcs_.reserve(2 * g.edge_count());
  // Iterating origins ascending over sorted neighbour lists gives
  // lexicographic (origin, terminus) order directly.
  for (Vertex o = 0; o < g.vertex_count(); ++o) {
    for (Vertex t : g.neighbors(o)) arcs_.push_back({o, t});
  }
  inverse_.resize(arcs_.size());
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    const Arc& arc = arcs_[a];
    inverse_[a] = *index_of(arc.terminus, arc.origin);
    inbound_[arc.terminus].push_back(a);
    outbound_[arc.origin].push_back(a);
  }
}

std::optional<std::size_t> ArcSpace::index_of(Vertex origin, Vertex terminus) const {
  const Arc key{origin, terminus};
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), key);
  if (it == arcs_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - arcs_.begin());
}

CirculantSpec CirculantSpec::normalized() const {
  CirculantSpec out{n, {}};
  if (n == 0) return out;
  for (std::size_t s : connection_set) out.connection_set.push_back(s % n);
  std::sort(out.connection_set.begin(), out.connection_set.end());
  out.connection_set.erase(std::unique(out.connection_set.begin(), out.connection_set.end()),
                           out.connection_set.end());
  return out;
}

void CirculantSpec::validate() const {
  if (n < 2) throw ValidationError("circulant needs n >= 2, got " + std::to_string(n));
  if (connection_set.empty()) throw ValidationError("empty connection set");
  std::set<std::size_t> c;
  for (std::size_t s : connection_set) {
    if (s >= n) {
      throw ValidationError("connection residue " + std::to_string(s) + " not reduced mod " +
                            std::to_string(n));
    }
    if (s == 0) throw ValidationError("connection set contains 0");
    if (!c.insert(s).second) throw ValidationError("repeated residue " + std::to_string(s));
  }
  for (std::size_t s : c) {
    if (!c.contains(n - s)) {
      throw ValidationError("connection set not inverse-closed: " + std::to_string(s) +
                            " present but " + std::to_string(n - s) + " missing");
    }
  }
  std::size_t g = n;
  for (std::size_t s : c) g = std::gcd(g, s);
  if (g != 1) {
    throw ValidationError("connection set does not generate Z_" + std::to_string(n) +
                          " (gcd " + std::to_string(g) + "); graph is disconnected");
  }
}

Graph cayley(const CirculantSpec& spec) {
  spec.validate();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < spec.n; ++u) {
    for (std::size_t s : spec.connection_set) {
      const Vertex v = (u + s) % spec.n;
      if (u < v) edges.push_back({u, v});
    }
  }
  return Graph(spec.n, std::move(edges));
}

CirculantSpec unitary_connection_set(std::int64_t n) {
  if (n < 2) throw DomainError("unitary Cayley graph needs n >= 2, got " + std::to_string(n));
  CirculantSpec spec{static_cast<std::size_t>(n), {}};
  for (numtheory::Int a : numtheory::units(n)) spec.connection_set.push_back(static_cast<std::size_t>(a));
  return spec;
}

Graph unitary_cayley(std::int64_t n) { return cayley(unitary_connection_set(n)); }

Graph named_graph(GraphFamily family, std::span<const std::int64_t> params) {
  auto need = [&](std::size_t lo, std::size_t hi, const char* name) {
    if (params.size() < lo || params.size() > hi) {
      throw DomainError(std::string(name) + ": expected " + std::to_string(lo) +
                        (lo == hi ? "" : "-" + std::to_string(hi)) + " parameters, got " +
                        std::to_string(params.size()));
    }
  };
  switch (family) {
    case GraphFamily::cycle: {
      need(1, 1, "cycle");
      const std::size_t n = checked_size(params[0], 3, "cycle length");
      std::vector<Edge> edges;
      for (Vertex u = 0; u < n; ++u) edges.push_back({u, (u + 1) % n});
      return Graph(n, std::move(edges));
    }
    case GraphFamily::path: {
      need(1, 1, "path");
      const std::size_t n = checked_size(params[0], 2, "path length");
      std::vector<Edge> edges;
      for (Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
      return Graph(n, std::move(edges));
    }
    case GraphFamily::complete: {
      need(1, 1, "complete");
      const std::size_t n = checked_size(params[0], 2, "complete graph order");
      const std::vector<std::size_t> parts(n, 1);
      return complete_multipartite(parts);
    }
    case GraphFamily::complete_bipartite: {
      need(1, 2, "complete_bipartite");
      const std::size_t a = checked_size(params[0], 1, "part size");
      const std::size_t b = params.size() == 2 ? checked_size(params[1], 1, "part size") : a;
      const std::vector<std::size_t> parts{a, b};
      return complete_multipartite(parts);
    }
    case GraphFamily::complete_tripartite: {
      if (params.size() != 1 && params.size() != 3) {
        throw DomainError("complete_tripartite: expected 1 or 3 parameters");
      }
      std::vector<std::size_t> parts;
      for (std::size_t i = 0; i < 3; ++i) {
        parts.push_back(checked_size(params[params.size() == 1 ? 0 : i], 1, "part size"));
      }
      return complete_multipartite(parts);
    }
    case GraphFamily::hamming: {
      need(2, 2, "hamming");
      const std::size_t s = checked_size(params[0], 1, "hamming dimension s");
      const std::size_t t = checked_size(params[1], 2, "hamming alphabet t");
      std::size_t n = 1;
      for (std::size_t i = 0; i < s; ++i) {
        if (n > (std::size_t{1} << 20) / t) throw DomainError("hamming graph too large");
        n *= t;
      }
      // Vertex index is the base-t number formed by the tuple; neighbours
      // differ in exactly one digit.
      std::vector<Edge> edges;
      for (Vertex u = 0; u < n; ++u) {
        std::size_t place = 1;
        for (std::size_t coord = 0; coord < s; ++coord, place *= t) {
          const std::size_t digit = (u / place) % t;
          for (std::size_t other = digit + 1; other < t; ++other) {
            edges.push_back({u, u + (other - digit) * place});
          }
        }
      }
      return Graph(n, std::move(edges));
    }
  }
  throw DomainError("unknown graph family");
}

ArcSpace arc_space(const Graph& g) { return ArcSpace(g); }

Graph read_edge_list(std::istream& in) {
  std::int64_t n = -1;
  std::int64_t m = -1;
  if (!(in >> n >> m) || n < 1 || m < 0) {
    throw ValidationError("edge list: expected header \"n m\" with n >= 1, m >= 0");
  }
  std::vector<std::pair<std::string, std::string>> raw;
  raw.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    std::string a;
    std::string b;
    if (!(in >> a >> b)) {
      throw ValidationError("edge list: expected " + std::to_string(m) + " edges, found " +
                            std::to_string(i));
    }
    raw.emplace_back(std::move(a), std::move(b));
  }
  std::string extra;
  if (in >> extra) throw ValidationError("edge list: trailing data after " + std::to_string(m) + " edges");

  const auto nv = static_cast<std::size_t>(n);
  auto as_index = [nv](const std::string& s) -> std::optional<std::size_t> {
    std::size_t value = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc() || ptr != end || value >= nv) return std::nullopt;
    return value;
  };
  const bool dense = std::all_of(raw.begin(), raw.end(), [&](const auto& e) {
    return as_index(e.first) && as_index(e.second);
  });

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  if (dense) {
    for (const auto& [a, b] : raw) edges.push_back({*as_index(a), *as_index(b)});
    return Graph(nv, std::move(edges));
  }

  std::map<std::string, Vertex> ids;
  std::vector<std::string> labels;
  auto id_of = [&](const std::string& label) {
    auto [it, inserted] = ids.emplace(label, labels.size());
    if (inserted) labels.push_back(label);
    return it->second;
  };
  for (const auto& [a, b] : raw) edges.push_back({id_of(a), id_of(b)});
  if (labels.size() != nv) {
    throw ValidationError("edge list: header declares " + std::to_string(nv) + " vertices but " +
                          std::to_string(labels.size()) + " distinct labels appear");
  }
  Graph g(nv, std::move(edges));
  g.set_labels(std::move(labels));
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open edge list file: " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace grover
