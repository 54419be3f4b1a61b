#include "fjd/fj_transform.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "fjd/errors.hpp"

namespace fjd {

namespace {

void require_reduced_configuration(const EvenLattice& lat, const Int& d_val, const char* who) {
    if (d_val != -lat.level()) {
        std::ostringstream os;
        os << who << ": the reduced formula needs D = -q (got D = " << d_val << ", q = " << lat.level()
           << ")";
        throw UnsupportedXi(os.str());
    }
}

// Sweep every class s of Z^n / d S Z^n in Smith coordinates and hand the
// callback s together with v = 2 det q * (1/2) q S^{-1}[s] / q = s^t (q adj S) s,
// so that the support congruence mod q d reads v = 2 det D (mod 2 det q d).
// int64 throughout; callers stay within its range (guarded).
template <typename F>
void sweep_classes(const EvenLattice& lat, long d, F&& fn) {
    const int n = lat.rank();
    std::vector<long> ranges(static_cast<size_t>(n));
    std::vector<long> p_inv(static_cast<size_t>(n) * n), b(static_cast<size_t>(n) * n);
    Int bound_v(0);
    {
        std::vector<Int> smax(static_cast<size_t>(n), Int(0));
        for (int i = 0; i < n; ++i) {
            ranges[static_cast<size_t>(i)] = to_ll(Int(d) * lat.snf().diag[static_cast<size_t>(i)]);
            for (int j = 0; j < n; ++j) {
                p_inv[static_cast<size_t>(i) * n + j] = to_ll(lat.p_inverse()(i, j));
                Int bij = lat.level() * lat.adjugate()(i, j);
                if (!fits_ll(bij)) throw std::overflow_error("sweep_classes: entries too large");
                b[static_cast<size_t>(i) * n + j] = to_ll(bij);
            }
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                smax[static_cast<size_t>(i)] +=
                    abs(lat.p_inverse()(i, j)) * Int(ranges[static_cast<size_t>(j)] - 1);
        for (int i = 0; i < n; ++i) {
            Int row(0);
            for (int j = 0; j < n; ++j)
                row += abs(lat.level() * lat.adjugate()(i, j)) * smax[static_cast<size_t>(j)];
            bound_v += smax[static_cast<size_t>(i)] * row;
        }
        if (bound_v >= (Int(1) << 62)) throw std::overflow_error("sweep_classes: quotient too large");
    }

    // Step deltas: advancing digit i (with digits < i wrapping to 0) moves s by
    // col_i - sum_{j<i} (range_j - 1) col_j of P^{-1}; bs moves by B times that.
    std::vector<std::vector<long>> s_delta(static_cast<size_t>(n)), bs_delta(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<long> delta(static_cast<size_t>(n), 0);
        for (int r = 0; r < n; ++r) {
            long v = p_inv[static_cast<size_t>(r) * n + i];
            for (int j = 0; j < i; ++j)
                v -= (ranges[static_cast<size_t>(j)] - 1) * p_inv[static_cast<size_t>(r) * n + j];
            delta[static_cast<size_t>(r)] = v;
        }
        std::vector<long> bd(static_cast<size_t>(n), 0);
        for (int r = 0; r < n; ++r) {
            long v = 0;
            for (int j = 0; j < n; ++j)
                v += b[static_cast<size_t>(r) * n + j] * delta[static_cast<size_t>(j)];
            bd[static_cast<size_t>(r)] = v;
        }
        s_delta[static_cast<size_t>(i)] = std::move(delta);
        bs_delta[static_cast<size_t>(i)] = std::move(bd);
    }

    std::vector<long> t(static_cast<size_t>(n), 0), s(static_cast<size_t>(n), 0),
        bs(static_cast<size_t>(n), 0);
    while (true) {
        long v = 0;
        for (int i = 0; i < n; ++i) v += s[static_cast<size_t>(i)] * bs[static_cast<size_t>(i)];
        fn(s, v);
        int i = 0;
        while (i < n) {
            t[static_cast<size_t>(i)] += 1;
            if (t[static_cast<size_t>(i)] < ranges[static_cast<size_t>(i)]) break;
            t[static_cast<size_t>(i)] = 0;
            ++i;
        }
        if (i == n) break;
        for (int r = 0; r < n; ++r) {
            s[static_cast<size_t>(r)] += s_delta[static_cast<size_t>(i)][static_cast<size_t>(r)];
            bs[static_cast<size_t>(r)] += bs_delta[static_cast<size_t>(i)][static_cast<size_t>(r)];
        }
    }
}

} // namespace

std::vector<std::vector<Int>> congruent_class_representatives(const EvenLattice& lat, const Int& d_val,
                                                              const Int& d) {
    if (!fits_ll(d) || !fits_ll(d_val))
        throw std::overflow_error("congruent_class_representatives: arguments too large");
    const Int modulus = 2 * lat.det() * lat.level() * d;
    const Int target = mod_floor(2 * lat.det() * d_val, modulus);
    if (!fits_ll(modulus)) throw std::overflow_error("congruent_class_representatives: modulus too large");
    const long m = to_ll(modulus);
    const long tgt = to_ll(target);

    std::vector<std::vector<Int>> out;
    sweep_classes(lat, to_ll(d), [&](const std::vector<long>& s, long v) {
        if (((v % m) + m) % m == tgt) out.emplace_back(s.begin(), s.end());
    });
    return out;
}

FJCoefficientTable::FJCoefficientTable(EvenLattice lat, long index_n, long weight_k)
    : lat_(std::move(lat)), index_n_(index_n), weight_k_(weight_k) {
    if (index_n < 1) throw std::invalid_argument("FJCoefficientTable: index must be positive");
    if (weight_k < 1) throw std::invalid_argument("FJCoefficientTable: weight must be positive");
}

FJKey FJCoefficientTable::canonical_key(const Int& d_val, const std::vector<Int>& r) const {
    if (static_cast<int>(r.size()) != lat_.rank())
        throw DimensionMismatch("FJCoefficientTable: r has wrong length");
    if (!fits_ll(d_val)) throw std::overflow_error("FJCoefficientTable: D too large");
    std::vector<Int> u = lat_.snf().p_mat * r;
    FJKey key;
    key.d_val = to_ll(d_val);
    key.r_canon.reserve(r.size());
    const std::vector<Int>& a = lat_.snf().diag;
    for (int i = 0; i < lat_.rank(); ++i) {
        Int m = mod_floor(u[static_cast<size_t>(i)], Int(index_n_) * a[static_cast<size_t>(i)]);
        key.r_canon.push_back(to_ll(m));
    }
    return key;
}

void FJCoefficientTable::set(const Int& d_val, const std::vector<Int>& r, const Rat& value) {
    if (d_val >= 0) throw KeyOutsideSupport("FJCoefficientTable::set: D must be negative");
    if (!divides(lat_.level() * index_n_, lat_.half_q_dual_norm(r) - d_val)) {
        std::ostringstream os;
        os << "FJCoefficientTable::set: (D, r) violates D = (1/2) q S^{-1}[r] (mod q N), D = " << d_val;
        throw KeyOutsideSupport(os.str());
    }
    FJKey key = canonical_key(d_val, r);
    if (value == 0)
        entries_.erase(key);
    else
        entries_[key] = value;
}

Rat FJCoefficientTable::at(const Int& d_val, const std::vector<Int>& r) const {
    auto it = entries_.find(canonical_key(d_val, r));
    return it == entries_.end() ? Rat(0) : it->second;
}

FJCoefficientTable vn_adjoint(const FJCoefficientTable& table) {
    const EvenLattice& lat = table.lattice();
    const int n = lat.rank();
    const long big_n = table.index();
    const long k = table.weight();
    FJCoefficientTable out(lat, 1, k);

    // Output D values: D with (N/d)^2 D in the input support for some d | N.
    std::set<long> candidates;
    for (const auto& [key, value] : table.entries()) {
        for (long d : divisors_of(big_n)) {
            long m = big_n / d;
            if (key.d_val % (m * m) == 0) candidates.insert(key.d_val / (m * m));
        }
    }
    if (candidates.empty()) return out;

    // One sweep of Z^n / d S Z^n per divisor: bucket the candidates by the
    // residue 2 det D mod 2 det q d and accumulate the matching table entries.
    std::map<long, Rat> totals;  // D -> sum over d of d^{k-n-1} * inner sum
    const Int two_det = 2 * lat.det();
    for (long d : divisors_of(big_n)) {
        const long m = big_n / d;
        const Rat weight = rat_pow(Int(d), k - (n + 1));
        const Int modulus = two_det * lat.level() * d;
        if (!fits_ll(modulus)) throw std::overflow_error("vn_adjoint: modulus too large");
        const long mod_l = to_ll(modulus);
        std::map<long, std::vector<long>> by_residue;
        for (long d_out : candidates)
            by_residue[to_ll(mod_floor(two_det * d_out, modulus))].push_back(d_out);

        sweep_classes(lat, d, [&](const std::vector<long>& s, long v) {
            auto it = by_residue.find(((v % mod_l) + mod_l) % mod_l);
            if (it == by_residue.end()) return;
            std::vector<Int> ms(s.begin(), s.end());
            for (Int& c : ms) c *= m;
            for (long d_out : it->second) {
                Rat entry = table.at(Int(m) * Int(m) * d_out, ms);
                if (entry != 0) totals[d_out] += weight * entry;
            }
        });
    }

    for (const auto& [d_out, value] : totals) {
        if (value == 0) continue;
        const Int d_val(d_out);
        // One entry per admissible class r mod S Z^n; the value is the same for all.
        for (const std::vector<Int>& r : congruent_class_representatives(lat, d_val, Int(1)))
            out.set(d_val, r, value);
    }
    return out;
}

Rat poincare_pairing(const FJCoefficientTable& table, const Int& d_val, const std::vector<Int>& r) {
    if (table.index() != 1)
        throw std::invalid_argument("poincare_pairing: table must have index 1");
    if (!table.lattice().support_contains(d_val, r)) {
        std::ostringstream os;
        os << "poincare_pairing: (D = " << d_val << ", r) outside the support";
        throw KeyOutsideSupport(os.str());
    }
    return table.at(d_val, r);
}

CoefficientProvider CoefficientProvider::from_function(std::function<Rat(long)> fn, long bound) {
    CoefficientProvider p;
    p.fn_ = std::move(fn);
    p.bound_ = bound;
    p.use_map_ = false;
    p.empty_ = false;
    return p;
}

CoefficientProvider CoefficientProvider::from_map(std::map<long, Rat> values) {
    CoefficientProvider p;
    p.map_ = std::move(values);
    p.use_map_ = true;
    p.empty_ = false;
    return p;
}

bool CoefficientProvider::defined(long m) const {
    if (empty_ || m < 1) return false;
    if (use_map_) return map_.count(m) != 0;
    return m <= bound_;
}

Rat CoefficientProvider::at(long m) const {
    if (!defined(m)) {
        std::ostringstream os;
        os << "CoefficientProvider: undefined at m = " << m;
        throw ProviderUndefined(os.str());
    }
    return use_map_ ? map_.at(m) : fn_(m);
}

FormalDirichletSeries inner_product_series(const CoefficientProvider& provider, const EvenLattice& lat,
                                           const Int& d_val, long weight_k, long n_max,
                                           std::set<long> bad, CountMethod method) {
    require_reduced_configuration(lat, d_val, "inner_product_series");
    const int n = lat.rank();
    FormalDirichletSeries s = zero_series(n_max, std::move(bad));
    for (long big_n = 1; big_n <= n_max; ++big_n) {
        if (!s.is_good(big_n)) continue;
        Rat acc(0);
        for (long d : divisors_of(big_n)) {
            Int cnt = count_congruence(lat, d_val, Int(d), method).count;
            if (cnt == 0) continue;
            acc += rat_pow(Int(d), weight_k - (n + 1)) * Rat(cnt) * provider.at(big_n / d);
        }
        s.coeff[static_cast<size_t>(big_n)] = acc;
    }
    return s;
}

IdentityReport convolution_check(const CoefficientProvider& provider, const EvenLattice& lat,
                                 const Int& d_val, long weight_k, long n_max,
                                 std::set<long> bad, CountMethod method) {
    require_reduced_configuration(lat, d_val, "convolution_check");
    const int n = lat.rank();
    IdentityReport rep;
    rep.identity = "convolution";
    rep.checked = n_max;

    FormalDirichletSeries direct = inner_product_series(provider, lat, d_val, weight_k, n_max, bad, method);

    FormalDirichletSeries zeta_shifted = zero_series(n_max, bad);
    FormalDirichletSeries provider_series = zero_series(n_max, bad);
    for (long m = 1; m <= n_max; ++m) {
        if (!zeta_shifted.is_good(m)) continue;
        Int cnt = count_congruence(lat, d_val, Int(m), method).count;
        zeta_shifted.coeff[static_cast<size_t>(m)] = rat_pow(Int(m), weight_k - (n + 1)) * Rat(cnt);
        provider_series.coeff[static_cast<size_t>(m)] = provider.at(m);
    }
    FormalDirichletSeries product = dirichlet_mul(zeta_shifted, provider_series);
    rep.mismatches = compare_series(direct, product);
    return rep;
}

FJCoefficientTable table_from_provider(const CoefficientProvider& provider, const EvenLattice& lat,
                                       long index_n, long weight_k) {
    if (!provider.defined(1))
        throw ProviderUndefined("table_from_provider: provider undefined at m = 1");
    const Int d_val = -lat.level();
    FJCoefficientTable out(lat, index_n, weight_k);
    for (long d : divisors_of(index_n)) {
        const long m = index_n / d;
        const Rat value = provider.at(m);
        for (const std::vector<Int>& s : congruent_class_representatives(lat, d_val, Int(d))) {
            std::vector<Int> ms(s);
            for (Int& c : ms) c *= m;
            if (value != 0) out.set(Int(m) * Int(m) * d_val, ms, value);
        }
    }
    return out;
}

} // namespace fjd
