#include <doctest.h>

#include <map>

#include "brdyn/families.hpp"
#include "brdyn/foliation.hpp"

using namespace brdyn;

namespace {

std::map<std::string, int> prong_map(const SingularityData& sd) {
  std::map<std::string, int> out;
  for (const auto& s : sd.singularities) out[s.at] = s.prongs;
  return out;
}

// Cusps counted straight from the gates and the infinitesimal edges: around
// a switch with k darts and r chords there are k - 1 dart-dart corners, and
// r - 1 chord-chord corners, or one wrap-around corner when r = 0.
int total_cusps_oracle(const GraphMap& gm) {
  const auto turns = taken_turns(gm);
  int total = 0;
  for (int v = 0; v < gm.graph().vertex_count(); ++v) {
    const auto gs = gates(gm, v);
    std::map<Dart, int> gid;
    for (std::size_t c = 0; c < gs.size(); ++c)
      for (Dart d : gs[c]) gid[d] = static_cast<int>(c);
    std::set<std::pair<int, int>> chords;
    for (const Turn& t : turns)
      if (gid.count(t.a) && gid.count(t.b) && gid[t.a] != gid[t.b])
        chords.insert({std::min(gid[t.a], gid[t.b]), std::max(gid[t.a], gid[t.b])});
    for (std::size_t c = 0; c < gs.size(); ++c) {
      int r = 0;
      for (auto [a, b] : chords) r += (a == static_cast<int>(c) || b == static_cast<int>(c));
      total += static_cast<int>(gs[c].size()) - 1 + (r == 0 ? 1 : r - 1);
    }
  }
  return total;
}

GraphMap identity_of(const GraphMap& base) {
  std::vector<int> v(base.graph().vertex_count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
  std::vector<std::vector<Dart>> img;
  for (int e = 0; e < base.graph().edge_count(); ++e) img.push_back({forward(e)});
  return GraphMap(base.graph(), v, img);
}

}  // namespace

TEST_CASE("singularities of g_{2,3}") {
  SingularityData sd = singularity_data_from_traintrack(gmn_graph_map(2, 3));
  auto p = prong_map(sd);
  CHECK(p.size() == 9);
  for (int k = 1; k <= 6; ++k) CHECK(p["x" + std::to_string(k)] == 1);
  CHECK(p["inf"] == 1);
  CHECK(p["p"] == 3);
  CHECK(p["q"] == 4);
  CHECK(sd.surface.marked.size() == 6);
  CHECK(euler_poincare_residual(sd) == 0);
}

TEST_CASE("singularities of h_{1,3} and h_{2,4}") {
  auto p13 = prong_map(singularity_data_from_traintrack(hmn_graph_map(1, 3)));
  CHECK(p13.size() == 6);
  CHECK(p13["inf"] == 3);
  CHECK(p13.count("p") == 0);
  for (int k = 1; k <= 5; ++k) CHECK(p13["x" + std::to_string(k)] == 1);
  // p has valence 2 and two gates: the track runs smoothly through it and no
  // complementary region sits there.
  auto with_regular = prong_map(singularity_data_from_traintrack(hmn_graph_map(1, 3), true));
  CHECK(with_regular == p13);

  auto p24 = prong_map(singularity_data_from_traintrack(hmn_graph_map(2, 4)));
  CHECK(p24.size() == 9);
  CHECK(p24["inf"] == 4);
  CHECK(p24["p"] == 3);
  for (int k = 1; k <= 7; ++k) CHECK(p24["x" + std::to_string(k)] == 1);
}

TEST_CASE("train track data matches the expected families") {
  for (int s = 2; s <= 12; ++s)
    for (int m = 1; m < s; ++m) {
      const int n = s - m;
      CAPTURE(m);
      CAPTURE(n);
      SingularityData b = singularity_data_from_traintrack(gmn_graph_map(m, n));
      CHECK(b.sorted() == expected_beta_singularities(m, n).sorted());
      CHECK(euler_poincare_residual(b) == 0);
      if (n >= m + 2) {
        SingularityData h = singularity_data_from_traintrack(hmn_graph_map(m, n));
        CHECK(h.sorted() == expected_sigma_singularities(m, n).sorted());
        CHECK(euler_poincare_residual(h) == 0);
      }
    }
}

TEST_CASE("region cusps agree with the gate count") {
  for (GraphMap gm : {gmn_graph_map(1, 1), gmn_graph_map(3, 4), gprime_graph_map(2, 3), hmn_graph_map(1, 5),
                      hmn_graph_map(3, 6), rm_graph_map(3)}) {
    int sum = 0, chi_sum = 0;
    for (const auto& r : traintrack_regions(gm)) {
      sum += r.cusps;
      chi_sum += 2 - r.cusps;
    }
    CHECK(sum == total_cusps_oracle(gm));
    CHECK(chi_sum == 4);  // the regions tile the sphere
  }
}

TEST_CASE("smoothing errors") {
  CHECK_THROWS_AS(singularity_data_from_traintrack(identity_of(gmn_graph_map(1, 2))), UncertifiedMap);
  EmbeddedGraph g;
  int u = g.add_vertex("u", true);
  Dart l = g.add_edge(u, u, EdgeClass::P, "l");
  GraphMap bare(g, {u}, {{l}});
  CHECK_THROWS_AS(singularity_data_from_traintrack(bare), MissingRotation);
  CHECK_THROWS_AS(traintrack_regions(bare), MissingRotation);
}

TEST_CASE("euler_poincare_residual") {
  SingularityData sd;
  sd.surface.marked = {"a", "b", "c", "d"};
  for (auto x : {"a", "b", "c", "d"}) sd.singularities.push_back({x, 1});
  CHECK(euler_poincare_residual(sd) == 0);
  sd.singularities.pop_back();
  CHECK(euler_poincare_residual(sd) == -1);
  SingularityData torus;
  torus.surface.genus = 1;
  CHECK(euler_poincare_residual(torus) == 0);
}

TEST_CASE("double cover lifts") {
  SingularityData b = expected_beta_singularities(1, 3);
  SingularityData up = lift_double_cover(b, beta_branch_set(1, 3));
  CHECK(up.surface.genus == 2);
  CHECK(up.surface.euler_characteristic() == -2);
  auto p = prong_map(up);
  CHECK(p.size() == 2);
  CHECK(p["q[0]"] == 4);
  CHECK(p["q[1]"] == 4);
  CHECK(euler_poincare_residual(up) == 0);

  // A regular point in the branch locus becomes a 4-prong.
  SingularityData s = expected_sigma_singularities(2, 4);
  auto sp = prong_map(lift_double_cover(s, sigma_branch_set(2, 4)));
  CHECK(sp["p"] == 6);
  CHECK(sp["inf[0]"] == 4);
  CHECK(sp["inf[1]"] == 4);
  SingularityData four = expected_beta_singularities(1, 1);
  auto fp = prong_map(lift_double_cover(four, {"x1", "q"}));
  CHECK(fp["q"] == 4);
  CHECK(fp.count("x1") == 0);

  SingularityData marked;
  marked.surface.marked = {"x1", "x2", "x3"};
  auto lifted = lift_double_cover(marked, {"x1", "x2"}).surface.marked;
  CHECK(lifted == std::vector<std::string>{"x1", "x2", "x3[0]", "x3[1]"});
  CHECK_THROWS_AS(lift_double_cover(b, {"x1", "x2", "x3"}), OddBranchSet);
}

TEST_CASE("lifts keep the Euler-Poincare balance and orientability") {
  for (int s = 2; s <= 12; ++s)
    for (int m = 1; m < s; ++m) {
      const int n = s - m;
      CAPTURE(m);
      CAPTURE(n);
      SingularityData b = singularity_data_from_traintrack(gmn_graph_map(m, n));
      if (s % 2 == 0) {
        SingularityData up = lift_double_cover(b, beta_branch_set(m, n));
        CHECK(up.surface.genus == s / 2);
        CHECK(euler_poincare_residual(up) == 0);
        CHECK(orientability_parity(up) == (m % 2 == 1 && n % 2 == 1));
      }
      if (n >= m + 2 && s % 2 == 0) {
        SingularityData h = singularity_data_from_traintrack(hmn_graph_map(m, n));
        SingularityData up = lift_double_cover(h, sigma_branch_set(m, n));
        CHECK(up.surface.genus == s / 2);
        CHECK(euler_poincare_residual(up) == 0);
        CHECK(orientability_parity(up));
      }
    }
  CHECK_FALSE(orientability_parity(lift_double_cover(expected_beta_singularities(2, 2), beta_branch_set(2, 2))));
}

TEST_CASE("singularity data json round trip") {
  SingularityData sd = singularity_data_from_traintrack(hmn_graph_map(2, 5));
  nlohmann::json j = sd;
  SingularityData back = singularity_data_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.surface == sd.surface);
  CHECK(back.sorted() == sd.sorted());
  CHECK_THROWS_AS(singularity_data_from_json(nlohmann::json::parse(R"({"surface":{}})")), ParseError);
}
