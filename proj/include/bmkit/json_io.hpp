#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "bmkit/bmcycles.hpp"
#include "bmkit/moduli.hpp"
#include "bmkit/quasibanal.hpp"
#include "bmkit/symrep.hpp"

namespace bmkit {

/// Insertion order is preserved so identical inputs always serialize to
/// identical bytes. Values that can outgrow 2^53 (coefficients, counts,
/// moduli, orbit representatives) are decimal strings; small structural
/// numbers (degrees, sizes, dimensions, parts) stay JSON numbers.
using Json = nlohmann::ordered_json;

std::string big(const Int& v);

Json to_json(const Partition& p);
Json to_json(const PartitionMatrix& m);
Json to_json(const InertialType& t);
Json to_json(const VirtualRep& v);
Json to_json(const Cycle& c);
Json to_json(const TypeSequence& t);
Json to_json(const VerifyRecord& r);
Json to_json(const IharaReport& r);
Json to_json(const FrobeniusOrbit& o);
Json to_json(const MarginMatrix& m);

Json mackey_json(const Partition& p, const Partition& q,
                 const std::map<std::vector<Partition>, Int>& decomposition);
Json components_json(unsigned n, unsigned long q, const Int& modulus,
                     const std::vector<ComponentDatum>& components);
Json orbits_json(unsigned long q, const Int& modulus,
                 const std::vector<FrobeniusOrbit>& orbits);

}  // namespace bmkit
