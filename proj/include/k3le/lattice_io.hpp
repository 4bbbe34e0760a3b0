#pragma once

#include <string>

#include <json.hpp>

#include "k3le/lattice.hpp"

namespace k3le {

// {"rank": n, "gram": [[...], ...]}
nlohmann::json lattice_to_json(const GramLattice& lattice);
GramLattice lattice_from_json(const nlohmann::json& j);

GramLattice read_lattice_file(const std::string& path);
void write_lattice_file(const std::string& path, const GramLattice& lattice);

nlohmann::json matrix_to_json(const IntMatrix& m);

}  // namespace k3le
