#include "brdyn/foliation.hpp"

#include <algorithm>
#include <map>

namespace brdyn {

std::vector<Singularity> SingularityData::sorted() const {
  auto s = singularities;
  std::sort(s.begin(), s.end());
  return s;
}

void to_json(nlohmann::json& j, const SingularityData& sd) {
  nlohmann::json sing = nlohmann::json::array();
  for (const auto& s : sd.singularities) sing.push_back({{"at", s.at}, {"prongs", s.prongs}});
  j = nlohmann::json{
      {"surface", {{"genus", sd.surface.genus}, {"marked", sd.surface.marked}, {"boundary", sd.surface.boundary}}},
      {"singularities", sing}};
}

SingularityData singularity_data_from_json(const nlohmann::json& j) {
  try {
    SingularityData sd;
    const auto& s = j.at("surface");
    sd.surface.genus = s.at("genus").get<int>();
    sd.surface.marked = s.at("marked").get<std::vector<std::string>>();
    sd.surface.boundary = s.at("boundary").get<int>();
    for (const auto& x : j.at("singularities")) sd.singularities.push_back({x.at("at"), x.at("prongs")});
    return sd;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("singularity json: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Train track smoothing
//
// Each gate becomes a switch. A taken turn between two gates at a vertex
// becomes an infinitesimal edge between their switches. Around a switch the
// cyclic order is: the gate's darts in rotation order, then the chords to
// the other gates in rotation order. Complementary regions are traced as
// boundary walks; a corner between two entries of the same kind (two darts,
// or two chords) is a cusp.

namespace {

struct Entry {
  bool chord;
  Dart dart;     // when !chord
  int v, i, j;   // chord at v from gate i to gate j
  friend bool operator==(const Entry&, const Entry&) = default;
  friend auto operator<=>(const Entry&, const Entry&) = default;
};

using Node = std::pair<int, int>;  // (vertex, gate index)

}  // namespace

std::vector<TrackRegion> traintrack_regions(const GraphMap& gm) {
  const EmbeddedGraph& g = gm.graph();
  if (!g.has_rotation()) throw MissingRotation("every vertex needs a rotation");
  const std::set<Turn> turns = taken_turns(gm);

  std::map<Dart, Node> gate_of;
  std::vector<std::vector<std::vector<Dart>>> blocks(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& rot = g.rotation(v);
    if (rot.empty()) continue;
    const auto gs = gates(gm, v);
    std::map<Dart, int> gid;
    for (std::size_t c = 0; c < gs.size(); ++c)
      for (Dart d : gs[c]) gid[d] = static_cast<int>(c);
    const std::size_t k = rot.size();
    std::size_t start = 0;
    if (gs.size() > 1)
      while (gid[rot[start]] == gid[rot[(start + k - 1) % k]]) ++start;
    auto& out = blocks[v];
    for (std::size_t t = 0; t < k; ++t) {
      Dart d = rot[(start + t) % k];
      if (!out.empty() && gid[out.back().back()] == gid[d])
        out.back().push_back(d);
      else
        out.push_back({d});
    }
    if (out.size() != gs.size()) throw InvalidGraph("gates at " + g.vertex(v).label + " are not contiguous");
    for (std::size_t b = 0; b < out.size(); ++b)
      for (Dart d : out[b]) gate_of[d] = {v, static_cast<int>(b)};
  }

  std::vector<std::set<std::pair<int, int>>> chords(g.vertex_count());
  for (const Turn& t : turns) {
    Node a = gate_of.at(t.a), b = gate_of.at(t.b);
    if (a != b) chords[a.first].insert({std::min(a.second, b.second), std::max(a.second, b.second)});
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    for (auto [a, b] : chords[v])
      for (auto [c, d] : chords[v]) {
        if (a == c || a == d || b == c || b == d) continue;
        if ((a < c && c < b) != (a < d && d < b))
          throw InvalidGraph("infinitesimal edges cross at " + g.vertex(v).label);
      }

  std::map<Node, std::vector<Entry>> rot;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int ng = static_cast<int>(blocks[v].size());
    for (int i = 0; i < ng; ++i) {
      auto& ent = rot[{v, i}];
      for (Dart d : blocks[v][i]) ent.push_back({false, d, 0, 0, 0});
      for (int s = 1; s < ng; ++s) {
        int j = (i + s) % ng;
        if (chords[v].count({std::min(i, j), std::max(i, j)})) ent.push_back({true, 0, v, i, j});
      }
    }
  }

  auto other = [&](const Entry& e) -> std::pair<Node, Entry> {
    if (!e.chord) return {gate_of.at(-e.dart), Entry{false, -e.dart, 0, 0, 0}};
    return {{e.v, e.j}, Entry{true, 0, e.v, e.j, e.i}};
  };
  auto succ = [&](const Node& n, const Entry& e) {
    const auto& r = rot.at(n);
    auto it = std::find(r.begin(), r.end(), e);
    ++it;
    return it == r.end() ? r.front() : *it;
  };

  std::set<std::pair<Node, Entry>> seen;
  std::vector<TrackRegion> regions;
  for (const auto& [node, entries] : rot)
    for (const Entry& e0 : entries) {
      if (seen.count({node, e0})) continue;
      TrackRegion region;
      bool has_dart_corner = false;
      std::set<int> verts;
      std::pair<Node, Entry> cur{node, e0};
      while (!seen.count(cur)) {
        seen.insert(cur);
        auto [n2, arrive] = other(cur.second);
        Entry leave = succ(n2, arrive);
        if (arrive.chord == leave.chord) ++region.cusps;
        verts.insert(n2.first);
        if (!arrive.chord) {
          has_dart_corner = true;
          for (const Sector& s : g.sectors())
            if (s.vertex == n2.first && s.after == arrive.dart) region.labels.push_back(s.label);
        }
        cur = {n2, leave};
      }
      if (!has_dart_corner) {
        std::string lab;
        for (int v : verts) lab += (lab.empty() ? "" : "/") + g.vertex(v).label;
        region.labels.push_back(lab);
      }
      regions.push_back(std::move(region));
    }
  return regions;
}

SingularityData singularity_data_from_traintrack(const GraphMap& gm, bool include_regular) {
  if (!gm.graph().has_rotation()) throw MissingRotation("every vertex needs a rotation");
  const BHReport bh = check_bh(gm);
  if (bh.verdict != BHVerdict::PseudoAnosovCertified) throw UncertifiedMap("graph map is not certified");
  SingularityData sd;
  for (const Sector& s : gm.graph().sectors())
    if (s.label != "inf") sd.surface.marked.push_back(s.label);
  int unnamed = 0;
  for (const auto& r : traintrack_regions(gm)) {
    if (r.cusps == 2 && !include_regular) continue;
    std::string at;
    for (const auto& l : r.labels) at += (at.empty() ? "" : "+") + l;
    if (at.empty()) at = "region" + std::to_string(++unnamed);
    sd.singularities.push_back({at, r.cusps});
  }
  return sd;
}

int euler_poincare_residual(const SingularityData& sd) {
  int sum = 0;
  for (const auto& s : sd.singularities) sum += 2 - s.prongs;
  return sum - 2 * sd.surface.euler_characteristic();
}

SingularityData lift_double_cover(const SingularityData& sd, const std::set<std::string>& branch) {
  if (branch.size() % 2 != 0) throw OddBranchSet(std::to_string(branch.size()) + " branch points");
  SingularityData out;
  const int chi = 2 * sd.surface.euler_characteristic() - static_cast<int>(branch.size());
  out.surface.boundary = 2 * sd.surface.boundary;
  out.surface.genus = (2 - chi - out.surface.boundary) / 2;
  for (const auto& x : sd.surface.marked) {
    if (branch.count(x)) {
      out.surface.marked.push_back(x);
    } else {
      out.surface.marked.push_back(x + "[0]");
      out.surface.marked.push_back(x + "[1]");
    }
  }
  std::set<std::string> singular;
  for (const auto& s : sd.singularities) {
    singular.insert(s.at);
    if (branch.count(s.at)) {
      if (2 * s.prongs != 2) out.singularities.push_back({s.at, 2 * s.prongs});
    } else {
      out.singularities.push_back({s.at + "[0]", s.prongs});
      out.singularities.push_back({s.at + "[1]", s.prongs});
    }
  }
  // A branch point that was regular downstairs becomes 4-pronged.
  for (const auto& b : branch)
    if (!singular.count(b)) out.singularities.push_back({b, 4});
  return out;
}

bool orientability_parity(const SingularityData& sd) {
  return std::all_of(sd.singularities.begin(), sd.singularities.end(),
                     [](const Singularity& s) { return s.prongs % 2 == 0; });
}

namespace {

SingularityData sphere_with_points(int s) {
  SingularityData sd;
  for (int k = 1; k <= s; ++k) {
    sd.surface.marked.push_back("x" + std::to_string(k));
    sd.singularities.push_back({"x" + std::to_string(k), 1});
  }
  return sd;
}

void push_unless_regular(SingularityData& sd, const std::string& at, int prongs) {
  if (prongs != 2) sd.singularities.push_back({at, prongs});
}

}  // namespace

SingularityData expected_beta_singularities(int m, int n) {
  if (m < 1 || n < 1) throw BadParameters("needs m, n >= 1");
  SingularityData sd = sphere_with_points(m + n + 1);
  sd.singularities.push_back({"inf", 1});
  push_unless_regular(sd, "p", m + 1);
  push_unless_regular(sd, "q", n + 1);
  return sd;
}

SingularityData expected_sigma_singularities(int m, int n) {
  if (m < 1 || n < m + 2) throw BadParameters("needs m >= 1, n >= m + 2");
  SingularityData sd = sphere_with_points(m + n + 1);
  push_unless_regular(sd, "inf", n);
  push_unless_regular(sd, "p", m + 1);
  return sd;
}

std::set<std::string> beta_branch_set(int m, int n) {
  std::set<std::string> b{"inf"};
  for (int k = 1; k <= m + n + 1; ++k) b.insert("x" + std::to_string(k));
  return b;
}

std::set<std::string> sigma_branch_set(int m, int n) {
  std::set<std::string> b;
  for (int k = 1; k <= m + n + 1; ++k) b.insert("x" + std::to_string(k));
  b.insert(n % 2 ? "inf" : "p");
  return b;
}

}  // namespace brdyn
