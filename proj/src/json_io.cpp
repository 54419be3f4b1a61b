#include "fjd/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace fjd {

using nlohmann::json;

namespace {

Int int_from_json(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string(what) + ": entry is not an integer");
    return Int(j.get<long>());
}

} // namespace

EvenLattice lattice_from_json(const json& j) {
    if (!j.is_object() || !j.contains("gram"))
        throw std::invalid_argument("lattice: expected an object with a \"gram\" field");
    const json& g = j.at("gram");
    if (!g.is_array() || g.empty())
        throw std::invalid_argument("lattice: \"gram\" must be a nonempty array of rows");
    const size_t n = g.size();
    IntMat m(static_cast<int>(n), static_cast<int>(n));
    for (size_t i = 0; i < n; ++i) {
        const json& row = g.at(i);
        if (!row.is_array() || row.size() != n)
            throw std::invalid_argument("lattice: \"gram\" is not square");
        for (size_t c = 0; c < n; ++c)
            m(static_cast<int>(i), static_cast<int>(c)) = int_from_json(row.at(c), "lattice gram");
    }
    if (j.contains("n")) {
        const json& jn = j.at("n");
        if (!jn.is_number_integer() || jn.get<long>() != static_cast<long>(n))
            throw std::invalid_argument("lattice: \"n\" does not match the gram size");
    }
    return EvenLattice(m);
}

json lattice_to_json(const EvenLattice& lat) {
    json rows = json::array();
    for (int i = 0; i < lat.rank(); ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < lat.rank(); ++j2) {
            const Int& v = lat.gram()(i, j2);
            if (!fits_ll(v)) throw std::overflow_error("lattice_to_json: entry too large");
            row.push_back(to_ll(v));
        }
        rows.push_back(std::move(row));
    }
    return json{{"n", lat.rank()}, {"gram", rows}};
}

EvenLattice lattice_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open lattice file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("lattice file " + path + ": " + e.what());
    }
    return lattice_from_json(j);
}

FJCoefficientTable table_from_json(const json& j) {
    if (!j.is_object() || !j.contains("lattice") || !j.contains("index") || !j.contains("weight"))
        throw std::invalid_argument("table: expected lattice, index, weight fields");
    EvenLattice lat = lattice_from_json(j.at("lattice"));
    if (!j.at("index").is_number_integer() || !j.at("weight").is_number_integer())
        throw std::invalid_argument("table: index and weight must be integers");
    FJCoefficientTable table(lat, j.at("index").get<long>(), j.at("weight").get<long>());
    if (j.contains("entries")) {
        if (!j.at("entries").is_array())
            throw std::invalid_argument("table: entries must be an array");
        for (const json& e : j.at("entries")) {
            if (!e.is_object() || !e.contains("D") || !e.contains("r") || !e.contains("value"))
                throw std::invalid_argument("table: entry needs D, r, value");
            Int d_val = int_from_json(e.at("D"), "table entry D");
            const json& jr = e.at("r");
            if (!jr.is_array() || static_cast<int>(jr.size()) != lat.rank())
                throw std::invalid_argument("table: entry r has wrong length");
            std::vector<Int> r;
            r.reserve(jr.size());
            for (const json& c : jr) r.push_back(int_from_json(c, "table entry r"));
            if (!e.at("value").is_string())
                throw std::invalid_argument("table: value must be a rational string");
            table.set(d_val, r, rat_from_string(e.at("value").get<std::string>()));
        }
    }
    return table;
}

json table_to_json(const FJCoefficientTable& table) {
    json entries = json::array();
    for (const auto& [key, value] : table.entries()) {
        json r = json::array();
        for (long c : key.r_canon) r.push_back(c);
        // r_canon is in Smith coordinates u = P r; emit the vector back in
        // standard coordinates so files round-trip through table_from_json.
        std::vector<Int> u(key.r_canon.begin(), key.r_canon.end());
        std::vector<Int> rv = table.lattice().p_inverse() * u;
        json rj = json::array();
        for (const Int& c : rv) {
            if (!fits_ll(c)) throw std::overflow_error("table_to_json: entry too large");
            rj.push_back(to_ll(c));
        }
        entries.push_back(json{{"D", key.d_val}, {"r", rj}, {"value", rat_to_string(value)}});
    }
    return json{{"lattice", lattice_to_json(table.lattice())},
                {"index", table.index()},
                {"weight", table.weight()},
                {"entries", entries}};
}

FJCoefficientTable table_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open table file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("table file " + path + ": " + e.what());
    }
    return table_from_json(j);
}

} // namespace fjd
