#include "k3le/lattice_io.hpp"

#include <fstream>

namespace k3le {

nlohmann::json matrix_to_json(const IntMatrix& m) { return m.to_rows(); }

nlohmann::json lattice_to_json(const GramLattice& lattice) {
  return {{"rank", lattice.rank()}, {"gram", matrix_to_json(lattice.gram())}};
}

GramLattice lattice_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("gram")) throw InvalidArgument("lattice JSON needs a \"gram\" field");
  const auto rows = j.at("gram").get<std::vector<std::vector<Int>>>();
  if (j.contains("rank") && j.at("rank").get<std::size_t>() != rows.size()) {
    throw DimensionMismatch("lattice JSON rank does not match the Gram matrix");
  }
  return GramLattice(IntMatrix::from_rows(rows));
}

GramLattice read_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return lattice_from_json(j);
}

void write_lattice_file(const std::string& path, const GramLattice& lattice) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << lattice_to_json(lattice).dump() << '\n';
}

}  // namespace k3le
