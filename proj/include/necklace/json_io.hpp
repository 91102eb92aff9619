#pragma once

#include <json.hpp>

#include "necklace/cyclic.hpp"
#include "necklace/kv.hpp"
#include "necklace/tensor_series.hpp"

namespace necklace {

using Json = nlohmann::ordered_json;

/// {"cutoff": N, "terms": [{"word": ["x1","y1"], "coeff": "p/q"}, ...]},
/// terms ordered by (weight, lexicographic word) for bit-exact output.
Json to_json(const TensorSeries& s);
TensorSeries tensor_series_from_json(const Json& j, AlphabetPtr alphabet);

/// Same layout with "cyclic": true and canonical words.
Json to_json(const CyclicSeries& s);
CyclicSeries cyclic_series_from_json(const Json& j, AlphabetPtr alphabet);

Json to_json(const Framing& f);
Framing framing_from_json(const Json& j, const SurfaceAlgebra& S);

/// A tangential automorphism by its logarithm: the images of x_i, y_i and
/// the z-generators u_j.
Json to_json(const TangentialAutomorphism& F);
TangentialAutomorphism taut_from_json(const Json& j, const SurfaceAlgebra& S);

}  // namespace necklace
