// Command-line front end: exact lattice invariants, congruence counts, the
// Euler-product verification suites, the rank-1 class-number criterion, and
// the coefficient-table transforms, with JSON-lines or CSV reports.
//
// Exit codes: 0 all checks pass, 1 verification mismatch, 2 input/usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fjd/classnumber.hpp"
#include "fjd/congruence.hpp"
#include "fjd/errors.hpp"
#include "fjd/fj_transform.hpp"
#include "fjd/json_io.hpp"
#include "fjd/series.hpp"

using json = nlohmann::json;
using namespace fjd;

namespace {

enum class Format { Json, Csv };

struct Emitter {
    Format fmt = Format::Json;
    bool csv_header_done = false;

    // Rows are (key, value) pairs in a fixed column order.
    void row(const std::vector<std::pair<std::string, json>>& cells) {
        if (fmt == Format::Json) {
            json obj = json::object();
            for (const auto& [k, v] : cells) obj[k] = v;
            std::cout << obj.dump() << "\n";
            return;
        }
        if (!csv_header_done) {
            for (size_t i = 0; i < cells.size(); ++i)
                std::cout << cells[i].first << (i + 1 < cells.size() ? "," : "\n");
            csv_header_done = true;
        }
        for (size_t i = 0; i < cells.size(); ++i) {
            const json& v = cells[i].second;
            if (v.is_string())
                std::cout << v.get<std::string>();
            else
                std::cout << v.dump();
            std::cout << (i + 1 < cells.size() ? "," : "\n");
        }
    }
};

json int_to_json(const Int& v) {
    // exact when small, decimal string otherwise
    if (fits_ll(v) && abs(v) < Int(1) << 53) return to_ll(v);
    return v.get_str();
}

std::set<long> parse_bad_list(const std::string& csv) {
    std::set<long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t pos = 0;
        long p = std::stol(item, &pos);
        if (pos != item.size() || p < 2) throw std::invalid_argument("bad prime list entry: " + item);
        out.insert(p);
    }
    return out;
}

std::vector<long> parse_long_list(const std::string& csv) {
    std::vector<long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stol(item));
    }
    return out;
}

CountMethod parse_method(const std::string& m) {
    if (m == "auto") return CountMethod::Auto;
    if (m == "enumerate") return CountMethod::Enumerate;
    if (m == "factorized") return CountMethod::Factorized;
    throw std::invalid_argument("unknown method: " + m);
}

CoefficientProvider seeded_provider(unsigned long seed, long bound) {
    std::mt19937_64 rng(seed);
    std::map<long, Rat> values;
    for (long m = 1; m <= bound; ++m)
        values[m] = Rat(static_cast<long>(rng() % 19) - 9);
    return CoefficientProvider::from_map(std::move(values));
}

void emit_report(Emitter& em, const IdentityReport& rep, const json& header_extra) {
    if (em.fmt == Format::Json) {
        json mm = json::array();
        for (const Mismatch& m : rep.mismatches)
            mm.push_back(json{{"where", m.where}, {"lhs", m.lhs}, {"rhs", m.rhs}});
        json out{{"identity", rep.identity}, {"checked", rep.checked}, {"mismatches", mm}};
        for (auto it = header_extra.begin(); it != header_extra.end(); ++it) out[it.key()] = it.value();
        std::cout << out.dump() << "\n";
    } else {
        em.row({{"identity", rep.identity},
                {"checked", rep.checked},
                {"mismatch_count", static_cast<long>(rep.mismatches.size())}});
        Emitter rows{Format::Csv};
        for (const Mismatch& m : rep.mismatches)
            rows.row({{"where", m.where}, {"lhs", m.lhs}, {"rhs", m.rhs}});
    }
    std::cerr << rep.identity << ": " << rep.checked << " checks, " << rep.mismatches.size()
              << " mismatches\n";
}

std::map<long, LocalFactor> opaque_factors_from_file(const std::string& path, long n_max,
                                                     const std::set<long>& bad) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open L-factor file: " + path);
    json j;
    in >> j;
    if (!j.is_object()) throw std::invalid_argument("L-factor file: expected an object keyed by prime");
    std::map<long, LocalFactor> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        long p = std::stol(it.key());
        Poly num, den;
        for (const json& c : it.value().at("num")) num.push_back(rat_from_string(c.get<std::string>()));
        for (const json& c : it.value().at("den")) den.push_back(rat_from_string(c.get<std::string>()));
        out[p] = make_local_factor(p, num, den);
    }
    // default the rest to 1
    for (long p : primes_up_to(n_max))
        if (!bad.count(p) && !out.count(p)) out[p] = lf_one(p);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Fourier-Jacobi Dirichlet series toolkit"};
    app.require_subcommand(1);

    std::string format_flag;
    const char* env_fmt = std::getenv("FJD_FORMAT");
    std::string default_fmt = env_fmt ? env_fmt : "json";
    app.add_option("--format", format_flag, "output format: json (lines) or csv")
        ->default_val(default_fmt)
        ->check(CLI::IsMember({"json", "csv"}));

    std::string lattice_path, table_path, lfactor_path, bad_csv, primes_csv, method_str = "auto";
    long d_target = 0, modulus = 1, t_param = 1, n_max = 100, p_max = 50, t_max = 200, weight = 10;
    long prime = 0;
    int k_max = 3;
    unsigned threads = 0;
    unsigned long seed = 42;
    std::string a_xi_str = "1";

    auto* c_level = app.add_subcommand("level", "level q of an even lattice");
    c_level->add_option("--lattice", lattice_path)->required();

    auto* c_maximal = app.add_subcommand("maximal", "Z-maximality of an even lattice");
    c_maximal->add_option("--lattice", lattice_path)->required();

    auto* c_count = app.add_subcommand("count", "congruence solution count n(xi; d)");
    c_count->add_option("--lattice", lattice_path)->required();
    c_count->add_option("-D", d_target, "target D < 0")->required();
    c_count->add_option("-d", modulus, "modulus d >= 1")->required();
    c_count->add_option("--method", method_str)->check(CLI::IsMember({"auto", "enumerate", "factorized"}));
    c_count->add_option("--threads", threads);

    auto* c_factor = app.add_subcommand("euler-factor", "closed-form local factor of zeta_xi");
    c_factor->add_option("--lattice", lattice_path)->required();
    c_factor->add_option("-p", prime, "prime")->required();
    c_factor->add_option("--kmax", k_max);

    auto* c_veuler = app.add_subcommand("verify-euler", "brute counts against the closed form per (p, k)");
    c_veuler->add_option("--lattice", lattice_path)->required();
    c_veuler->add_option("--pmax", p_max);
    c_veuler->add_option("--kmax", k_max);
    c_veuler->add_option("--bad", bad_csv, "comma-separated bad primes");
    c_veuler->add_option("--method", method_str)->check(CLI::IsMember({"auto", "enumerate", "factorized"}));
    c_veuler->add_option("--threads", threads);

    auto* c_vrank1 = app.add_subcommand("verify-rank1", "rank-1 Euler identity for S = (2t)");
    c_vrank1->add_option("-t", t_param)->required();
    c_vrank1->add_option("--nmax", n_max);
    c_vrank1->add_option("--bad", bad_csv);

    auto* c_veven = app.add_subcommand("verify-evenrank", "even-rank local factors per prime");
    c_veven->add_option("--lattice", lattice_path)->required();
    c_veven->add_option("--primes", primes_csv, "comma-separated primes")->required();
    c_veven->add_option("--kmax", k_max);

    auto* c_rank1 = app.add_subcommand("rank1", "class-number-one criterion over squarefree t");
    c_rank1->add_option("--tmax", t_max);

    auto* c_adjoint = app.add_subcommand("adjoint", "apply the index-lowering adjoint to a table");
    c_adjoint->add_option("--table", table_path)->required();

    auto* c_conv = app.add_subcommand("check-convolution", "convolution identity with a seeded provider");
    c_conv->add_option("--lattice", lattice_path)->required();
    c_conv->add_option("--weight", weight);
    c_conv->add_option("--nmax", n_max);
    c_conv->add_option("--seed", seed);
    c_conv->add_option("--bad", bad_csv);

    auto* c_asm = app.add_subcommand("assemble", "assemble the h = 1 series with opaque L-factors");
    c_asm->add_option("--lattice", lattice_path)->required();
    c_asm->add_option("--weight", weight);
    c_asm->add_option("--nmax", n_max);
    c_asm->add_option("--bad", bad_csv);
    c_asm->add_option("--axi", a_xi_str, "A(xi) as a rational string");
    c_asm->add_option("--lfactors", lfactor_path, "JSON file of opaque local factors");

    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Emitter em;
    em.fmt = (format_flag == "csv") ? Format::Csv : Format::Json;

    try {
        if (*c_level) {
            EvenLattice lat = lattice_from_file(lattice_path);
            em.row({{"q", int_to_json(lat.level())}});
            std::cerr << "level " << lat.level() << "\n";
            return 0;
        }
        if (*c_maximal) {
            EvenLattice lat = lattice_from_file(lattice_path);
            bool mx = lat.is_maximal();
            em.row({{"maximal", mx}});
            std::cerr << (mx ? "maximal" : "not maximal") << "\n";
            return 0;
        }
        if (*c_count) {
            EvenLattice lat = lattice_from_file(lattice_path);
            CountResult res =
                count_congruence(lat, Int(d_target), Int(modulus), parse_method(method_str), threads);
            em.row({{"D", d_target},
                    {"d", modulus},
                    {"count", int_to_json(res.count)},
                    {"enumerated", int_to_json(res.enumerated)}});
            std::cerr << "n(xi; " << modulus << ") = " << res.count << "\n";
            return 0;
        }
        if (*c_factor) {
            EvenLattice lat = lattice_from_file(lattice_path);
            LocalFactor f;
            std::string family;
            if (lat.rank() == 1) {
                long t = to_ll(lat.gram()(0, 0)) / 2;
                f = make_local_factor(prime, {Rat(1), Rat(1)}, {Rat(1), Rat(-chi_t(t, prime))});
                family = "rank1";
            } else {
                if (!is_evenrank_reference(lat))
                    throw UnsupportedFamily("euler-factor: lattice outside the reference families");
                int n = lat.rank();
                f = make_local_factor(prime,
                                      {Rat(1), -Rat(chi_S(lat, prime)) * rat_pow(Int(prime), n / 2 - 1)},
                                      {Rat(1), -rat_pow(Int(prime), n - 1)});
                family = "evenrank";
            }
            auto poly_json = [](const Poly& p) {
                json arr = json::array();
                for (const Rat& c : p) arr.push_back(rat_to_string(c));
                return arr;
            };
            json expansion = json::array();
            for (const Rat& c : expand_local(f, k_max)) expansion.push_back(rat_to_string(c));
            em.row({{"p", prime},
                    {"family", family},
                    {"num", poly_json(f.num)},
                    {"den", poly_json(f.den)},
                    {"expansion", expansion}});
            return 0;
        }
        if (*c_veuler) {
            EvenLattice lat = lattice_from_file(lattice_path);
            std::set<long> bad =
                bad_csv.empty() ? default_bad_primes(lat, -lat.level()) : parse_bad_list(bad_csv);
            CountMethod method = parse_method(method_str);
            long mismatches = 0, checked = 0;
            for (long p : primes_up_to(p_max)) {
                if (bad.count(p)) continue;
                Int pk(1);
                for (int k = 1; k <= k_max; ++k) {
                    pk *= p;
                    Int brute = count_congruence(lat, -lat.level(), pk, method, threads).count;
                    Int closed = closed_form_count(lat, p, k);
                    bool match = brute == closed;
                    if (!match) ++mismatches;
                    ++checked;
                    em.row({{"p", p},
                            {"k", k},
                            {"brute", int_to_json(brute)},
                            {"closed", int_to_json(closed)},
                            {"match", match}});
                }
            }
            std::cerr << "verify-euler: " << checked << " checks, " << mismatches << " mismatches\n";
            return mismatches == 0 ? 0 : 1;
        }
        if (*c_vrank1) {
            std::set<long> bad;
            if (bad_csv.empty()) {
                bad.insert(2);
                for (auto [p, e] : factorize_ll(t_param)) bad.insert(p);
            } else {
                bad = parse_bad_list(bad_csv);
            }
            IdentityReport rep = verify_rank1_identity(t_param, n_max, bad);
            emit_report(em, rep, json{{"t", t_param}, {"nmax", n_max}});
            return rep.ok() ? 0 : 1;
        }
        if (*c_veven) {
            EvenLattice lat = lattice_from_file(lattice_path);
            IdentityReport rep = verify_evenrank_identity(lat, parse_long_list(primes_csv), k_max);
            emit_report(em, rep, json{{"kmax", k_max}});
            return rep.ok() ? 0 : 1;
        }
        if (*c_rank1) {
            for (long t = 1; t <= t_max; ++t) {
                if (!is_squarefree_ll(t)) continue;
                ImagQuadField k = imag_quad_field(t);
                Rat idx = rank1_index(t);
                em.row({{"t", t},
                        {"cK", k.class_number},
                        {"k", k.omega_t},
                        {"index_num", int_to_json(idx.get_num())},
                        {"index_den", int_to_json(idx.get_den())},
                        {"admissible", is_admissible_rank1(t)}});
            }
            std::cerr << "rank1: listed squarefree t <= " << t_max << "\n";
            return 0;
        }
        if (*c_adjoint) {
            FJCoefficientTable table = table_from_file(table_path);
            std::cout << table_to_json(vn_adjoint(table)).dump() << "\n";
            std::cerr << "adjoint: index " << table.index() << " -> 1\n";
            return 0;
        }
        if (*c_conv) {
            EvenLattice lat = lattice_from_file(lattice_path);
            std::set<long> bad =
                bad_csv.empty() ? default_bad_primes(lat, -lat.level()) : parse_bad_list(bad_csv);
            CoefficientProvider prov = seeded_provider(seed, n_max);
            IdentityReport rep =
                convolution_check(prov, lat, -lat.level(), weight, n_max, bad);
            emit_report(em, rep, json{{"seed", seed}, {"weight", weight}, {"nmax", n_max}});
            return rep.ok() ? 0 : 1;
        }
        if (*c_asm) {
            EvenLattice lat = lattice_from_file(lattice_path);
            std::set<long> bad =
                bad_csv.empty() ? default_bad_primes(lat, -lat.level()) : parse_bad_list(bad_csv);
            std::map<long, LocalFactor> opaque =
                lfactor_path.empty() ? constant_opaque_factors(n_max, bad)
                                     : opaque_factors_from_file(lfactor_path, n_max, bad);
            FormalDirichletSeries s =
                assemble_main_theorem(lat, opaque, rat_from_string(a_xi_str), weight, n_max, bad);
            for (long n = 1; n <= n_max; ++n) {
                if (!s.is_good(n)) continue;
                em.row({{"n", n}, {"a", rat_to_string(s.at(n))}});
            }
            std::cerr << "assemble: " << n_max << " coefficients\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
