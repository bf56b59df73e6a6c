#pragma once

#include "json.hpp"

#include "permlat/lattice.hpp"
#include "permlat/reduction.hpp"
#include "permlat/taulat.hpp"

namespace permlat {

using Json = nlohmann::json;

Json int_to_json(const Int& x);  // int64 when it fits, decimal string otherwise
Int json_to_int(const Json& j);
Json int_vector_to_json(const std::vector<Int>& v);
std::vector<Int> json_to_int_vector(const Json& j);

// { "ambient_dim": n, "basis_columns": [[...], ...] }, basis always canonical
Json lattice_to_json(const Lattice& lattice);
Lattice lattice_from_json(const Json& j);

// rational entries as "p/q" strings
Json subspace_to_json(const Subspace& space);

Json minima_to_json(const MinimaProfile& profile);
Json minimal_vectors_to_json(const MinimalVectorSet& set);

}  // namespace permlat
