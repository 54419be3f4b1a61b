#ifndef FJD_JSON_IO_HPP
#define FJD_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "fjd/fj_transform.hpp"
#include "fjd/lattice.hpp"

namespace fjd {

// {"n": <int>, "gram": [[<int>, ...], ...]}; rejects non-square or
// non-integer entries (std::invalid_argument; the CLI maps that to exit 2).
EvenLattice lattice_from_json(const nlohmann::json& j);
nlohmann::json lattice_to_json(const EvenLattice& lat);
EvenLattice lattice_from_file(const std::string& path);

// {"lattice": {...}, "index": N, "weight": k,
//  "entries": [{"D": int, "r": [int, ...], "value": "p/q"}, ...]}
FJCoefficientTable table_from_json(const nlohmann::json& j);
nlohmann::json table_to_json(const FJCoefficientTable& table);
FJCoefficientTable table_from_file(const std::string& path);

} // namespace fjd

#endif
