#pragma once

// Embedded graphs with a rotation system, graph maps on them, and the
// Bestvina-Handel checks: derivative, gates, efficiency, transition matrices.

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "brdyn/matrix.hpp"

namespace brdyn {

// P: puncture loops. PreP: edges whose images eventually fall into P. Real:
// everything else; only real edges enter the dilatation.
enum class EdgeClass { P, PreP, Real };
std::string to_string(EdgeClass c);
EdgeClass edge_class_from_string(const std::string& s);

// A directed edge: +(e+1) runs along edge e, -(e+1) against it.
using Dart = int;
inline int edge_of(Dart d) { return (d > 0 ? d : -d) - 1; }
inline Dart forward(int e) { return e + 1; }

struct Vertex {
  std::string label;
  bool marked = false;  // lies on a puncture loop
};

struct Edge {
  int from = 0, to = 0;
  EdgeClass cls = EdgeClass::Real;
  std::string name;
};

// A complementary corner of the plane embedding: the region swept
// counter-clockwise from `after` at `vertex`. Used to name the marked points
// and the point at infinity.
struct Sector {
  std::string label;
  int vertex = 0;
  Dart after = 0;
};

class EmbeddedGraph {
 public:
  int add_vertex(std::string label, bool marked = false);
  Dart add_edge(int from, int to, EdgeClass cls, std::string name);
  // Darts leaving v in counter-clockwise order.
  void set_rotation(int v, std::vector<Dart> darts);
  void add_sector(std::string label, int vertex, Dart after);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Vertex& vertex(int v) const { return vertices_.at(v); }
  const Edge& edge(int e) const { return edges_.at(e); }
  const std::vector<Sector>& sectors() const { return sectors_; }
  const std::vector<Dart>& rotation(int v) const { return rotation_.at(v); }

  int origin(Dart d) const;
  int terminus(Dart d) const;
  EdgeClass edge_class(Dart d) const { return edge(edge_of(d)).cls; }
  std::string dart_name(Dart d) const;  // "a1" or "a1~"
  int valence(int v) const;
  std::vector<Dart> darts() const;

  std::optional<int> find_vertex(const std::string& label) const;
  std::optional<int> find_edge(const std::string& name) const;
  std::vector<int> edges_of_class(EdgeClass c) const;

  // True when every vertex with incident edges has a rotation.
  bool has_rotation() const;
  // Throws InvalidGraph unless each rotation lists exactly the darts leaving
  // its vertex, every sector names a listed dart, and no non-marked vertex
  // has valence 1. Valence-2 vertices are tolerated.
  void validate() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<Sector> sectors_;
};

class GraphMap {
 public:
  // Validates the graph, continuity of every image path and that P maps
  // into P; throws InvalidGraph otherwise.
  GraphMap(EmbeddedGraph graph, std::vector<int> vertex_image, std::vector<std::vector<Dart>> edge_image);

  const EmbeddedGraph& graph() const { return g_; }
  int vertex_image(int v) const { return vimg_.at(v); }
  const std::vector<Dart>& edge_image(int e) const { return eimg_.at(e); }
  // Image of a dart, reversed for negative darts.
  std::vector<Dart> image(Dart d) const;

 private:
  EmbeddedGraph g_;
  std::vector<int> vimg_;
  std::vector<std::vector<Dart>> eimg_;
};

void to_json(nlohmann::json& j, const GraphMap& gm);
GraphMap graph_map_from_json(const nlohmann::json& j);

// First dart of image(d); EmptyImage if the image is trivial.
Dart derivative(const GraphMap& gm, Dart d);

// Unordered pair of darts at a common vertex. A turn {d, d} is degenerate.
struct Turn {
  Dart a, b;
  Turn(Dart x, Dart y) : a(x < y ? x : y), b(x < y ? y : x) {}
  bool degenerate() const { return a == b; }
  friend auto operator<=>(const Turn&, const Turn&) = default;
};

// Gates at v in rotation order of their first dart.
std::vector<std::vector<Dart>> gates(const GraphMap& gm, int v);
// All turns taken by some iterate of some edge image.
std::set<Turn> taken_turns(const GraphMap& gm);
bool is_efficient(const GraphMap& gm);

// A basis vector is an integer combination of edges.
struct BasisVector {
  std::string label;
  std::vector<std::pair<int, long long>> terms;  // (edge, coefficient)
};
using Basis = std::vector<BasisVector>;
Basis real_edge_basis(const EmbeddedGraph& g);

struct TransitionMatrix {
  IntMatrix entries;
  std::vector<std::string> labels;
};

// Column j counts the edge crossings of the image of basis vector j, then
// rewrites the count vector in the basis. On the real-edge basis every entry
// is a nonnegative crossing count. Throws BadBasis when the basis is not
// unimodular on its support, or an image crosses an edge outside the support
// whose class is not strictly below the class of the edge being mapped.
TransitionMatrix transition_matrix(const GraphMap& gm, const Basis& basis);
TransitionMatrix transition_matrix(const GraphMap& gm);

// Largest real root of char_poly(m), to within tol.
double spectral_radius(const IntMatrix& m, double tol = 1e-12);

enum class BHVerdict { PseudoAnosovCertified, Inconclusive };
std::string to_string(BHVerdict v);

struct BHReport {
  bool efficient = false;
  bool irreducible = false;
  double perron_root = 0;
  BHVerdict verdict = BHVerdict::Inconclusive;
};
BHReport check_bh(const GraphMap& gm, double tol = 1e-12);

// --- the built-in families ---
// Marked points are labelled x1..xs, the point at infinity "inf", the two
// interior vertices "p" and "q".
GraphMap rm_graph_map(int m);
GraphMap gmn_graph_map(int m, int n);
GraphMap gprime_graph_map(int m, int n);
GraphMap hmn_graph_map(int m, int n);  // n >= m + 2

// v_k = e(p,k) (k <= m), v_{m+1} = e(p,m+1) + e(m+1,m+n+1),
// v_{m+1+k} = e(m+k,m+k+1), v_{m+n+2} = e(p,m+1).
Basis gprime_basis(int m, int n);
IntMatrix tprime_matrix(int m, int n);
// tprime_matrix with entry (m+n+1, m+1) (1-based) negated: the transition
// matrix of g' followed by the folding map onto the graph of h.
IntMatrix sprime_matrix(int m, int n);
// Fixed vector of sprime_matrix spanning the kernel of the folding map.
std::vector<long long> projection_kernel_vector(int m, int n);
// Checks the fixed vector, the four image identities and
// char_poly(sprime) = (t-1) char_poly(transition_matrix(hmn)).
bool verify_projection(int m, int n);

}  // namespace brdyn
