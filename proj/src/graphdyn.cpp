#include "brdyn/graphdyn.hpp"

#include <algorithm>
#include <map>

namespace brdyn {

std::string to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::P: return "P";
    case EdgeClass::PreP: return "preP";
    case EdgeClass::Real: return "real";
  }
  return "?";
}

EdgeClass edge_class_from_string(const std::string& s) {
  if (s == "P") return EdgeClass::P;
  if (s == "preP") return EdgeClass::PreP;
  if (s == "real") return EdgeClass::Real;
  throw ParseError("unknown edge class '" + s + "'");
}

// ---------------------------------------------------------------------------
// EmbeddedGraph

int EmbeddedGraph::add_vertex(std::string label, bool marked) {
  vertices_.push_back({std::move(label), marked});
  rotation_.emplace_back();
  return vertex_count() - 1;
}

Dart EmbeddedGraph::add_edge(int from, int to, EdgeClass cls, std::string name) {
  if (from < 0 || from >= vertex_count() || to < 0 || to >= vertex_count())
    throw InvalidGraph("edge '" + name + "' has an endpoint outside the vertex set");
  edges_.push_back({from, to, cls, std::move(name)});
  return forward(edge_count() - 1);
}

void EmbeddedGraph::set_rotation(int v, std::vector<Dart> darts) { rotation_.at(v) = std::move(darts); }

void EmbeddedGraph::add_sector(std::string label, int vertex, Dart after) {
  sectors_.push_back({std::move(label), vertex, after});
}

int EmbeddedGraph::origin(Dart d) const {
  const Edge& e = edge(edge_of(d));
  return d > 0 ? e.from : e.to;
}

int EmbeddedGraph::terminus(Dart d) const {
  const Edge& e = edge(edge_of(d));
  return d > 0 ? e.to : e.from;
}

std::string EmbeddedGraph::dart_name(Dart d) const { return edge(edge_of(d)).name + (d > 0 ? "" : "~"); }

int EmbeddedGraph::valence(int v) const {
  int k = 0;
  for (const Edge& e : edges_) k += (e.from == v) + (e.to == v);
  return k;
}

std::vector<Dart> EmbeddedGraph::darts() const {
  std::vector<Dart> out;
  for (int e = 0; e < edge_count(); ++e) {
    out.push_back(forward(e));
    out.push_back(-forward(e));
  }
  return out;
}

std::optional<int> EmbeddedGraph::find_vertex(const std::string& label) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (vertices_[v].label == label) return v;
  return std::nullopt;
}

std::optional<int> EmbeddedGraph::find_edge(const std::string& name) const {
  for (int e = 0; e < edge_count(); ++e)
    if (edges_[e].name == name) return e;
  return std::nullopt;
}

std::vector<int> EmbeddedGraph::edges_of_class(EdgeClass c) const {
  std::vector<int> out;
  for (int e = 0; e < edge_count(); ++e)
    if (edges_[e].cls == c) out.push_back(e);
  return out;
}

bool EmbeddedGraph::has_rotation() const {
  for (int v = 0; v < vertex_count(); ++v)
    if (static_cast<int>(rotation_[v].size()) != valence(v)) return false;
  return true;
}

void EmbeddedGraph::validate() const {
  std::vector<int> seen(2 * edges_.size(), 0);
  auto slot = [](Dart d) { return 2 * edge_of(d) + (d < 0); };
  for (int v = 0; v < vertex_count(); ++v) {
    const auto& rot = rotation_[v];
    if (rot.empty()) continue;
    for (Dart d : rot) {
      if (d == 0 || edge_of(d) >= edge_count()) throw InvalidGraph("rotation at " + vertices_[v].label + " names a missing edge");
      if (origin(d) != v) throw InvalidGraph("dart " + dart_name(d) + " does not leave " + vertices_[v].label);
      if (seen[slot(d)]++) throw InvalidGraph("dart " + dart_name(d) + " listed twice");
    }
    if (static_cast<int>(rot.size()) != valence(v))
      throw InvalidGraph("rotation at " + vertices_[v].label + " is incomplete");
  }
  for (const Sector& s : sectors_) {
    if (s.vertex < 0 || s.vertex >= vertex_count()) throw InvalidGraph("sector " + s.label + " at a missing vertex");
    const auto& rot = rotation_[s.vertex];
    if (std::find(rot.begin(), rot.end(), s.after) == rot.end())
      throw InvalidGraph("sector " + s.label + " names a dart not in the rotation");
  }
  for (int v = 0; v < vertex_count(); ++v)
    if (!vertices_[v].marked && valence(v) == 1) throw InvalidGraph("vertex " + vertices_[v].label + " has valence 1");
}

// ---------------------------------------------------------------------------
// GraphMap

GraphMap::GraphMap(EmbeddedGraph graph, std::vector<int> vertex_image, std::vector<std::vector<Dart>> edge_image)
    : g_(std::move(graph)), vimg_(std::move(vertex_image)), eimg_(std::move(edge_image)) {
  g_.validate();
  if (static_cast<int>(vimg_.size()) != g_.vertex_count()) throw InvalidGraph("vertex image has the wrong size");
  if (static_cast<int>(eimg_.size()) != g_.edge_count()) throw InvalidGraph("edge image has the wrong size");
  for (int x : vimg_)
    if (x < 0 || x >= g_.vertex_count()) throw InvalidGraph("vertex image outside the graph");
  for (int e = 0; e < g_.edge_count(); ++e) {
    const Edge& ed = g_.edge(e);
    const auto& path = eimg_[e];
    for (Dart d : path)
      if (d == 0 || edge_of(d) >= g_.edge_count()) throw InvalidGraph("image of " + ed.name + " names a missing edge");
    int start = vimg_[ed.from], end = vimg_[ed.to];
    if (path.empty()) {
      if (start != end) throw InvalidGraph("empty image of " + ed.name + " joins distinct vertices");
      continue;
    }
    if (g_.origin(path.front()) != start || g_.terminus(path.back()) != end)
      throw InvalidGraph("image of " + ed.name + " has the wrong endpoints");
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (g_.terminus(path[i]) != g_.origin(path[i + 1]))
        throw InvalidGraph("image of " + ed.name + " is not a path");
    if (ed.cls == EdgeClass::P)
      for (Dart d : path)
        if (g_.edge_class(d) != EdgeClass::P) throw InvalidGraph("image of P edge " + ed.name + " leaves P");
  }
}

std::vector<Dart> GraphMap::image(Dart d) const {
  const auto& p = eimg_.at(edge_of(d));
  if (d > 0) return p;
  std::vector<Dart> r(p.rbegin(), p.rend());
  for (Dart& x : r) x = -x;
  return r;
}

void to_json(nlohmann::json& j, const GraphMap& gm) {
  const EmbeddedGraph& g = gm.graph();
  nlohmann::json verts = nlohmann::json::array(), edges = nlohmann::json::array(),
                 rot = nlohmann::json::array(), sectors = nlohmann::json::array(),
                 images = nlohmann::json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    verts.push_back({{"label", g.vertex(v).label}, {"marked", g.vertex(v).marked}});
    rot.push_back(g.rotation(v));
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    edges.push_back({{"name", ed.name}, {"from", ed.from}, {"to", ed.to}, {"class", to_string(ed.cls)}});
    images.push_back(gm.edge_image(e));
  }
  for (const Sector& s : g.sectors()) sectors.push_back({{"label", s.label}, {"vertex", s.vertex}, {"after", s.after}});
  std::vector<int> vimg;
  for (int v = 0; v < g.vertex_count(); ++v) vimg.push_back(gm.vertex_image(v));
  j = nlohmann::json{{"vertices", verts}, {"edges", edges},    {"rotation", rot},
                     {"sectors", sectors}, {"vertex_image", vimg}, {"images", images}};
}

GraphMap graph_map_from_json(const nlohmann::json& j) {
  try {
    EmbeddedGraph g;
    for (const auto& v : j.at("vertices")) g.add_vertex(v.at("label").get<std::string>(), v.value("marked", false));
    for (const auto& e : j.at("edges"))
      g.add_edge(e.at("from").get<int>(), e.at("to").get<int>(),
                 edge_class_from_string(e.value("class", std::string("real"))), e.at("name").get<std::string>());
    if (j.contains("rotation")) {
      const auto& rot = j.at("rotation");
      if (static_cast<int>(rot.size()) != g.vertex_count()) throw ParseError("one rotation per vertex expected");
      for (int v = 0; v < g.vertex_count(); ++v) g.set_rotation(v, rot[v].get<std::vector<Dart>>());
    }
    if (j.contains("sectors"))
      for (const auto& s : j.at("sectors"))
        g.add_sector(s.at("label").get<std::string>(), s.at("vertex").get<int>(), s.at("after").get<Dart>());
    return GraphMap(std::move(g), j.at("vertex_image").get<std::vector<int>>(),
                    j.at("images").get<std::vector<std::vector<Dart>>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph map json: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Derivative, gates, efficiency

Dart derivative(const GraphMap& gm, Dart d) {
  const auto& p = gm.edge_image(edge_of(d));
  if (p.empty()) throw EmptyImage("edge " + gm.graph().edge(edge_of(d)).name + " has trivial image");
  return d > 0 ? p.front() : -p.back();
}

namespace {

// D^N for N = |E_dir|. Two darts share a gate iff these agree: on a
// functional graph with N nodes, coincidence within N steps persists.
std::map<Dart, Dart> stable_derivative(const GraphMap& gm) {
  const auto ds = gm.graph().darts();
  std::map<Dart, Dart> d1;
  for (Dart d : ds) d1[d] = derivative(gm, d);
  std::map<Dart, Dart> out;
  for (Dart d : ds) {
    Dart x = d;
    for (std::size_t k = 0; k < ds.size(); ++k) x = d1[x];
    out[d] = x;
  }
  return out;
}

}  // namespace

std::vector<std::vector<Dart>> gates(const GraphMap& gm, int v) {
  const auto stable = stable_derivative(gm);
  const EmbeddedGraph& g = gm.graph();
  std::vector<Dart> order = g.rotation(v);
  if (order.empty())
    for (Dart d : g.darts())
      if (g.origin(d) == v) order.push_back(d);
  std::vector<std::vector<Dart>> classes;
  for (Dart d : order) {
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const auto& c) { return stable.at(c.front()) == stable.at(d); });
    if (it == classes.end())
      classes.push_back({d});
    else
      it->push_back(d);
  }
  return classes;
}

std::set<Turn> taken_turns(const GraphMap& gm) {
  std::set<Turn> seen;
  std::vector<Turn> frontier;
  auto add = [&](Turn t) {
    if (seen.insert(t).second) frontier.push_back(t);
  };
  for (int e = 0; e < gm.graph().edge_count(); ++e) {
    const auto& p = gm.edge_image(e);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) add(Turn(-p[i], p[i + 1]));
  }
  while (!frontier.empty()) {
    Turn t = frontier.back();
    frontier.pop_back();
    if (t.degenerate()) continue;
    add(Turn(derivative(gm, t.a), derivative(gm, t.b)));
  }
  return seen;
}

bool is_efficient(const GraphMap& gm) {
  const auto stable = stable_derivative(gm);
  for (const Turn& t : taken_turns(gm))
    if (t.degenerate() || stable.at(t.a) == stable.at(t.b)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Transition matrices

Basis real_edge_basis(const EmbeddedGraph& g) {
  Basis b;
  for (int e : g.edges_of_class(EdgeClass::Real)) b.push_back({g.edge(e).name, {{e, 1}}});
  return b;
}

TransitionMatrix transition_matrix(const GraphMap& gm, const Basis& basis) {
  const EmbeddedGraph& g = gm.graph();
  std::vector<int> support;
  for (const auto& bv : basis)
    for (auto [e, c] : bv.terms) {
      if (e < 0 || e >= g.edge_count()) throw BadBasis("basis vector " + bv.label + " names a missing edge");
      if (c != 0 && std::find(support.begin(), support.end(), e) == support.end()) support.push_back(e);
    }
  std::sort(support.begin(), support.end());
  const std::size_t k = basis.size();
  if (support.size() != k) throw BadBasis("basis size differs from the number of edges it spans");
  auto index = [&](int e) -> std::optional<std::size_t> {
    auto it = std::lower_bound(support.begin(), support.end(), e);
    if (it == support.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - support.begin());
  };

  IntMatrix b(k, k), counts(k, k);
  for (std::size_t j = 0; j < k; ++j)
    for (auto [e, c] : basis[j].terms) {
      b(*index(e), j) += c;
      const EdgeClass from = g.edge(e).cls;
      for (Dart d : gm.edge_image(e)) {
        int f = edge_of(d);
        if (auto i = index(f))
          counts(*i, j) += c;
        else if (g.edge(f).cls >= from)
          throw BadBasis("image of " + g.edge(e).name + " crosses " + g.edge(f).name + " outside the basis");
      }
    }
  TransitionMatrix t{unimodular_inverse(b) * counts, {}};
  for (const auto& bv : basis) t.labels.push_back(bv.label);
  return t;
}

TransitionMatrix transition_matrix(const GraphMap& gm) { return transition_matrix(gm, real_edge_basis(gm.graph())); }

double spectral_radius(const IntMatrix& m, double tol) {
  if (!m.square()) throw BadParameters("spectral_radius needs a square matrix");
  if (m.rows() == 0) throw NoRealRoot("empty matrix");
  return largest_real_root(char_poly(m), tol);
}

std::string to_string(BHVerdict v) {
  return v == BHVerdict::PseudoAnosovCertified ? "PseudoAnosovCertified" : "Inconclusive";
}

BHReport check_bh(const GraphMap& gm, double tol) {
  BHReport r;
  try {
    r.efficient = is_efficient(gm);
  } catch (const EmptyImage&) {
    r.efficient = false;
  }
  const IntMatrix m = transition_matrix(gm).entries;
  r.irreducible = m.rows() > 0 && is_irreducible(m);
  bool above_one = false;
  try {
    if (m.rows() > 0) {
      // The verdict uses the enclosure, so a root at exactly 1 never passes.
      RootEnclosure enc = largest_real_root_enclosure(char_poly(m), to_rational(tol));
      r.perron_root = enc.mid();
      above_one = enc.lo > 1;
    }
  } catch (const NoRealRoot&) {
    r.perron_root = 0;
  }
  if (r.efficient && r.irreducible && above_one) r.verdict = BHVerdict::PseudoAnosovCertified;
  return r;
}

}  // namespace brdyn
