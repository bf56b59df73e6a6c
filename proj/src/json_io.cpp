#include "permlat/json_io.hpp"

#include <limits>

namespace permlat {

Json int_to_json(const Int& x) {
    if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
    return x.get_str();
}

Int json_to_int(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

Json int_vector_to_json(const std::vector<Int>& v) {
    Json arr = Json::array();
    for (const Int& x : v) arr.push_back(int_to_json(x));
    return arr;
}

std::vector<Int> json_to_int_vector(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of integers");
    std::vector<Int> out;
    for (const Json& e : j) out.push_back(json_to_int(e));
    return out;
}

Json lattice_to_json(const Lattice& lattice) {
    Json cols = Json::array();
    for (int j = 0; j < lattice.rank(); ++j)
        cols.push_back(int_vector_to_json(lattice.basis_column(j)));
    return Json{{"ambient_dim", lattice.ambient_dim()}, {"basis_columns", cols}};
}

Lattice lattice_from_json(const Json& j) {
    if (!j.contains("ambient_dim") || !j.contains("basis_columns"))
        throw std::invalid_argument("lattice JSON needs ambient_dim and basis_columns");
    const int n = j.at("ambient_dim").get<int>();
    std::vector<std::vector<Int>> cols;
    for (const Json& c : j.at("basis_columns")) cols.push_back(json_to_int_vector(c));
    return Lattice::from_generators(cols, n);
}

namespace {

std::string rat_to_string(const Rat& q) {
    return q.get_str();  // "p/q" or "p"
}

}  // namespace

Json subspace_to_json(const Subspace& space) {
    Json cols = Json::array();
    for (int j = 0; j < space.dim(); ++j) {
        Json col = Json::array();
        for (int i = 0; i < space.ambient_dim(); ++i)
            col.push_back(rat_to_string(space.basis().at(i, j)));
        cols.push_back(col);
    }
    return Json{{"ambient_dim", space.ambient_dim()}, {"dim", space.dim()}, {"basis_columns", cols}};
}

Json minima_to_json(const MinimaProfile& profile) {
    Json att = Json::array();
    for (const auto& v : profile.attaining) att.push_back(int_vector_to_json(v));
    return Json{{"minima_sq", int_vector_to_json(profile.minima_sq)}, {"attaining", att}};
}

Json minimal_vectors_to_json(const MinimalVectorSet& set) {
    Json vecs = Json::array();
    for (const auto& v : set.vectors) vecs.push_back(int_vector_to_json(v));
    return Json{{"norm_sq", int_to_json(set.norm_sq)}, {"vectors", vecs}};
}

}  // namespace permlat
