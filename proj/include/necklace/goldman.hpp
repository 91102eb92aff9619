#pragma once

#include <vector>

#include "necklace/cyclic.hpp"
#include "necklace/surface.hpp"

namespace necklace {

/// Graded Goldman (necklace) bracket on |A|, computed by direct splicing:
/// an x_i in a paired with a y_i in b (and vice versa, with sign) splices
/// the opened words; a z_j in a paired with a z_j in b splices with one
/// z_j reinserted on either side of the junction, with opposite signs.
CyclicSeries goldman_bracket(const SurfaceAlgebra& S, const CyclicSeries& a,
                             const CyclicSeries& b);

struct CenterReport {
  std::vector<CyclicSeries> basis;
  int dim = 0;
  bool matches_prediction = false;  //!< equals span{|ω^m|, |z_j^m|} of the weight
};

/// Basis of the weight-k cyclic classes whose bracket with every basis
/// class of each test weight vanishes (the bracket is weight-homogeneous,
/// so each test weight is exact).
CenterReport center_component(const SurfaceAlgebra& S, int k,
                              const std::vector<int>& test_weights);

/// True iff all brackets with basis classes of the test weights vanish.
bool is_central(const SurfaceAlgebra& S, const CyclicSeries& c,
                const std::vector<int>& test_weights);

}  // namespace necklace
