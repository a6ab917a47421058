#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "maghyper/functor.hpp"
#include "maghyper/homology.hpp"
#include "maghyper/hypergraph.hpp"
#include "maghyper/metric.hpp"
#include "maghyper/poly.hpp"
#include "maghyper/product.hpp"

namespace maghyper {

/// Half-unit count rendered in whole units: "0", "1/2", "1", "3/2", ...
std::string half_label(std::int64_t half_units);

/// Bigrading key "(k,l)" with l in whole units, e.g. "(1,1/2)".
std::string grading_key(int k, std::int64_t length2);

/// Serialization with sorted keys and a trailing newline; pretty = 2-space
/// indentation.
std::string dump_json(const nlohmann::json& j, bool pretty);

nlohmann::json distance_json(const Hypergraph& h, const DistanceMatrix& m);
nlohmann::json series_json(const HalfSeries& s);
nlohmann::json rational_json(const RationalFn& r);
nlohmann::json homology_json(const HomologyTable& t);
nlohmann::json euler_json(const EulerReport& r);
nlohmann::json morphism_json(const MorphismReport& r);
nlohmann::json induced_json(const MorphismReport& validation,
                            const InducedHomology& maps);
nlohmann::json kunneth_json(const KunnethReport& r);

}  // namespace maghyper
