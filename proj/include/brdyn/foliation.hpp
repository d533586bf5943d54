#pragma once

// Prong data of invariant foliations, read off the smoothed train track of
// an efficient graph map, and the arithmetic of branched double covers.

#include <json.hpp>

#include <set>
#include <string>
#include <vector>

#include "brdyn/graphdyn.hpp"

namespace brdyn {

struct SurfaceDescriptor {
  int genus = 0;
  std::vector<std::string> marked;
  int boundary = 0;
  int euler_characteristic() const { return 2 - 2 * genus - boundary; }
  friend bool operator==(const SurfaceDescriptor&, const SurfaceDescriptor&) = default;
};

struct Singularity {
  std::string at;
  int prongs = 0;
  friend auto operator<=>(const Singularity&, const Singularity&) = default;
};

// Regular (2-pronged) points are left out unless a caller asks for them.
struct SingularityData {
  SurfaceDescriptor surface;
  std::vector<Singularity> singularities;
  // Singularities sorted by label, for comparisons.
  std::vector<Singularity> sorted() const;
};

void to_json(nlohmann::json& j, const SingularityData& sd);
SingularityData singularity_data_from_json(const nlohmann::json& j);

// Every complementary region of the train track: the marked points (one
// cusp each when things are right), the point at infinity, and the interior
// polygons at the vertices, labelled by the vertex.
struct TrackRegion {
  std::vector<std::string> labels;
  int cusps = 0;
};
std::vector<TrackRegion> traintrack_regions(const GraphMap& gm);

// Throws MissingRotation or UncertifiedMap before smoothing.
SingularityData singularity_data_from_traintrack(const GraphMap& gm, bool include_regular = false);

// Sum over singularities of (2 - p), minus 2 chi.
int euler_poincare_residual(const SingularityData& sd);

// Double cover branched over `branch`. Throws OddBranchSet.
SingularityData lift_double_cover(const SingularityData& sd, const std::set<std::string>& branch);

bool orientability_parity(const SingularityData& sd);

// Expected data for the two families on the sphere (capped at infinity).
SingularityData expected_beta_singularities(int m, int n);
SingularityData expected_sigma_singularities(int m, int n);

// Branch loci used for the genus-g lifts: all marked points plus infinity
// for beta, plus infinity (n odd) or p (n even) for sigma.
std::set<std::string> beta_branch_set(int m, int n);
std::set<std::string> sigma_branch_set(int m, int n);

}  // namespace brdyn
