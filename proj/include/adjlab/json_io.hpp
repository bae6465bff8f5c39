#pragma once

#include "adjlab/genus.hpp"
#include "adjlab/nicety.hpp"
#include "adjlab/obstruction.hpp"
#include "adjlab/swfamilies.hpp"

#include <json.hpp>

namespace adjlab {

/// Fixed key order everywhere so reports are byte-stable across runs.
using Json = nlohmann::ordered_json;

/// Integers serialize as JSON numbers while they fit in 64 bits and as
/// decimal strings beyond that; parsing accepts either form.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json lattice_to_json(const Lattice& l);   // {"rank":..,"torsion":[..],"form":[[..]]}
Lattice lattice_from_json(const Json& j);

Json class_to_json(const HClass& v);      // {"coords":[..],"torsion":[..]}
HClass class_from_json(const Json& j, const Lattice& lattice);

Json genus_model_to_json(const GenusModel& m);
GenusModel genus_model_from_json(const Json& j);

Json manifold_to_json(const ManifoldModel& m);
ManifoldModel manifold_from_json(const Json& j);

Json descriptor_to_json(const FamilyDescriptor& d);
FamilyDescriptor descriptor_from_json(const Json& j);

Json family_to_json(const Family& f);     // {"descriptor":..,"members":[..]}
Family family_from_json(const Json& j);

Json certificate_to_json(const NicetyCertificate& c);
NicetyCertificate certificate_from_json(const Json& j, const Lattice& lattice);
/// Certificates whose member lattices differ (one lattice per member).
NicetyCertificate certificate_from_json(const Json& j, const std::vector<Lattice>& lattices);

Json obstruction_report_to_json(const ObstructionReport& r);

} // namespace adjlab
