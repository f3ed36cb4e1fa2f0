#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gsec {

/// Set of small integer indices packed into one machine word.
template <class Word, class Tag>
class BitMask {
 public:
  using word_type = Word;

  constexpr BitMask() = default;
  constexpr explicit BitMask(Word bits) : bits_(bits) {}

  static constexpr BitMask full(int count) {
    return BitMask(count >= static_cast<int>(sizeof(Word) * 8) ? ~Word{0}
                                                               : (Word{1} << count) - 1);
  }
  static constexpr BitMask single(int i) { return BitMask(Word{1} << i); }
  static BitMask of(std::initializer_list<int> items) {
    BitMask m;
    for (int i : items) m = m.with(i);
    return m;
  }

  constexpr Word bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ >> i) & Word{1}; }
  constexpr bool subset_of(BitMask o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr BitMask with(int i) const { return BitMask(bits_ | (Word{1} << i)); }
  constexpr BitMask without(int i) const { return BitMask(bits_ & ~(Word{1} << i)); }
  constexpr int first() const { return std::countr_zero(bits_); }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Word b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr BitMask operator|(BitMask a, BitMask b) { return BitMask(a.bits_ | b.bits_); }
  friend constexpr BitMask operator&(BitMask a, BitMask b) { return BitMask(a.bits_ & b.bits_); }
  friend constexpr BitMask operator-(BitMask a, BitMask b) { return BitMask(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(BitMask, BitMask) = default;
  friend constexpr auto operator<=>(BitMask, BitMask) = default;

 private:
  Word bits_ = 0;
};

using VertexSet = BitMask<std::uint32_t, struct VertexTag>;
using EdgeSet = BitMask<std::uint64_t, struct EdgeTag>;

inline constexpr int kMaxVertices = 32;
inline constexpr int kMaxEdges = 64;
inline constexpr int kDefaultEnumerationCap = 8;

/// Process-wide vertex cap for exhaustive enumeration.
int enumeration_cap();
void set_enumeration_cap(int cap);
/// Throws CapExceeded when n is above the current cap.
void require_within_cap(int n, const char* what);

struct Edge {
  int u = 0;
  int v = 0;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with edges stored in sorted (u < v) order so that
/// edge ids are canonical.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  static Graph complete(int n);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
  std::optional<int> edge_id(int u, int v) const;

  VertexSet all_vertices() const { return VertexSet::full(n_); }
  EdgeSet all_edges() const { return EdgeSet::full(num_edges()); }
  EdgeSet incident(int v) const { return incident_[static_cast<std::size_t>(v)]; }
  /// E(S): edges with both endpoints in s.
  EdgeSet edges_within(VertexSet s) const;
  VertexSet endpoints(EdgeSet es) const;

  bool is_acyclic(EdgeSet es) const;
  bool is_complete() const { return num_edges() == n_ * (n_ - 1) / 2; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<EdgeSet> incident_;
  std::vector<EdgeSet> within_;  // cached E(S) for small n
  std::vector<int> id_matrix_;
};

/// A forest of the host graph: explicit vertex set plus acyclic edge set.
/// Ordered canonically by vertex bits, then edge bits.
struct Forest {
  VertexSet verts;
  EdgeSet edges;

  /// Number of trees, |V(F)| - |E(F)|.
  int num_components() const { return verts.size() - edges.size(); }
  bool empty() const { return verts.empty(); }

  friend constexpr bool operator==(const Forest&, const Forest&) = default;
  friend constexpr auto operator<=>(const Forest&, const Forest&) = default;
};

/// True when a is a subgraph of b.
constexpr bool is_subgraph(const Forest& a, const Forest& b) {
  return a.verts.subset_of(b.verts) && a.edges.subset_of(b.edges);
}

/// Validates endpoints and acyclicity; throws InvalidGraph.
Forest make_forest(const Graph& g, VertexSet verts, EdgeSet edges);
bool is_forest(const Graph& g, VertexSet verts, EdgeSet edges);
Forest edgeless_forest(VertexSet verts);

/// Every forest of g in canonical order, including the empty graph.
std::vector<Forest> enumerate_forests(const Graph& g);
/// Every forest whose vertex set is exactly s, in canonical order.
std::vector<Forest> enumerate_forests_on(const Graph& g, VertexSet s);

Forest induced_subforest(const Graph& g, const Forest& f, VertexSet s);
std::vector<Forest> components(const Graph& g, const Forest& f);
/// Vertex sets of the components of f, ordered by smallest vertex.
std::vector<VertexSet> component_vertex_sets(const Graph& g, const Forest& f);
/// Largest vertex degree inside f.
int max_degree(const Graph& g, const Forest& f);

/// Subgraphs covered by f: delete one edge, or delete one isolated vertex.
std::vector<Forest> maximal_proper_subgraphs(const Graph& g, const Forest& f);
/// Every proper subgraph of f (exponential; used when covers are not enough).
std::vector<Forest> proper_subgraphs(const Graph& g, const Forest& f);

/// A simple path stored in canonical orientation (front <= back).
class PathSeq {
 public:
  PathSeq() = default;
  explicit PathSeq(std::vector<int> verts);

  std::span<const int> verts() const { return verts_; }
  int size() const { return static_cast<int>(verts_.size()); }
  bool empty() const { return verts_.empty(); }
  VertexSet vertex_set() const;

  friend bool operator==(const PathSeq&, const PathSeq&) = default;
  friend auto operator<=>(const PathSeq& a, const PathSeq& b) {
    if (a.verts_.size() != b.verts_.size()) return a.verts_.size() <=> b.verts_.size();
    return a.verts_ <=> b.verts_;
  }

 private:
  std::vector<int> verts_;
};

/// Throws InvalidGraph when consecutive vertices are not adjacent.
Forest path_to_forest(const Graph& g, const PathSeq& p);
/// The ordering of a forest whose single component is a path; nullopt otherwise.
std::optional<PathSeq> forest_to_path(const Graph& g, const Forest& f);

/// All simple paths (one per reversal class), including the empty path.
std::vector<PathSeq> enumerate_paths(const Graph& g);
/// All nonempty trees of g in canonical forest order.
std::vector<Forest> enumerate_trees(const Graph& g);

std::string describe(const Graph& g, const Forest& f);

}  // namespace gsec
