#pragma once

// Stratum identification: reading the boundary face of a compactification off
// the limit pattern of a degenerating path, and building such paths from face
// labels with degeneration rates e, e^2, ...

#include <random>

#include "polyfaces/charts.hpp"
#include "polyfaces/laurent.hpp"
#include "polyfaces/trees.hpp"

namespace polyfaces {

enum class StratumSpace { assoc, cycl, perm };

StratumSpace parse_stratum_space(const std::string& name);

// The unique face label whose face-inclusion image closure contains the
// path's limit: leaves are clustered by the vanishing orders of their gaps;
// for the leveled space, levels compare the vanishing orders of cluster
// diameters.
PlanarTree identify_stratum_assoc(const EpsilonPath& p);
Fan identify_stratum_cycl(const EpsilonPath& p);
LeveledPlanarTree identify_stratum_perm(const EpsilonPath& p);
AnyTree identify_stratum(const EpsilonPath& p, StratumSpace space);

// Degenerating paths realizing a face: every internal vertex places its
// children at random interior local positions, scaled by one degeneration
// rate per tree depth (per level for the leveled space, relative to the
// marked point for fans). identify_stratum inverts these constructions.
EpsilonPath face_path(const PlanarTree& t, std::mt19937_64& rng);
EpsilonPath face_path(const Fan& t, std::mt19937_64& rng);
EpsilonPath face_path(const LeveledPlanarTree& t, std::mt19937_64& rng);

}  // namespace polyfaces
