#ifndef FJD_FJ_TRANSFORM_HPP
#define FJD_FJ_TRANSFORM_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "fjd/lattice.hpp"
#include "fjd/series.hpp"

namespace fjd {

// Canonical key of a coefficient entry: the target D together with the class
// of r in Z^n / (index * S * Z^n), stored in Smith coordinates (P r mod
// index * a_i), so congruent vectors share one entry.
struct FJKey {
    long d_val;
    std::vector<long> r_canon;
    bool operator<(const FJKey& o) const {
        if (d_val != o.d_val) return d_val < o.d_val;
        return r_canon < o.r_canon;
    }
    bool operator==(const FJKey& o) const { return d_val == o.d_val && r_canon == o.r_canon; }
};

// Finitely supported coefficient table of an index-N weight-k form: map
// (D, class of r) -> rational, every stored pair satisfying
// D = (1/2) q S^{-1}[r] (mod q N).
class FJCoefficientTable {
public:
    FJCoefficientTable(EvenLattice lat, long index_n, long weight_k);

    const EvenLattice& lattice() const { return lat_; }
    long index() const { return index_n_; }
    long weight() const { return weight_k_; }
    const std::map<FJKey, Rat>& entries() const { return entries_; }

    FJKey canonical_key(const Int& d_val, const std::vector<Int>& r) const;

    // Insert (replacing) at the canonical key; zero values erase the entry.
    void set(const Int& d_val, const std::vector<Int>& r, const Rat& value);
    // Coefficient at (D, r); 0 when the key carries no entry.
    Rat at(const Int& d_val, const std::vector<Int>& r) const;

private:
    EvenLattice lat_;
    long index_n_;
    long weight_k_;
    std::map<FJKey, Rat> entries_;
};

// The adjoint index-lowering action on coefficient tables: the output
// (D, r)-coefficient is
//   sum_{d | N} d^{k-(n+1)} sum_{s mod dSZ^n, D = (1/2) q S^{-1}[s] (mod q d)}
//        c((N/d)^2 D, (N/d) s),
// supported on D = (1/2) q S^{-1}[r] (mod q); it does not depend on r.
FJCoefficientTable vn_adjoint(const FJCoefficientTable& table);

// Normalized Poincare extraction from an index-1 table: the (D, r) coefficient
// itself. Throws KeyOutsideSupport when (D, r) violates the support congruence.
Rat poincare_pairing(const FJCoefficientTable& table, const Int& d_val, const std::vector<Int>& r);

// h = 1 coefficient source: m -> A(m xi), exact rationals, defined up to a
// working bound.
class CoefficientProvider {
public:
    CoefficientProvider() = default;
    static CoefficientProvider from_function(std::function<Rat(long)> fn, long bound);
    static CoefficientProvider from_map(std::map<long, Rat> values);

    bool defined(long m) const;
    Rat at(long m) const;  // throws ProviderUndefined

private:
    std::function<Rat(long)> fn_;
    long bound_ = 0;
    std::map<long, Rat> map_;
    bool use_map_ = false;
    bool empty_ = true;
};

// a_N = sum_{d | N} d^{k-(n+1)} n(xi; d) A((N/d) xi) for good N; requires the
// reduced configuration D = -q, xi = (1, 0, ..., 0, 1).
FormalDirichletSeries inner_product_series(const CoefficientProvider& provider, const EvenLattice& lat,
                                           const Int& d_val, long weight_k, long n_max,
                                           std::set<long> bad,
                                           CountMethod method = CountMethod::Auto);

// Coefficientwise comparison of inner_product_series against the Dirichlet
// product of the d^{k-n-1} n(xi; d) series with the provider series.
IdentityReport convolution_check(const CoefficientProvider& provider, const EvenLattice& lat,
                                 const Int& d_val, long weight_k, long n_max,
                                 std::set<long> bad, CountMethod method = CountMethod::Auto);

// Index-N table with c((N/d)^2 D, (N/d) s) = A(N/d) over the admissible
// (d, s), D = -q; composing vn_adjoint with poincare_pairing on it reproduces
// inner_product_series term by term.
FJCoefficientTable table_from_provider(const CoefficientProvider& provider, const EvenLattice& lat,
                                       long index_n, long weight_k);

// Representatives of {s mod d S Z^n : D = (1/2) q S^{-1}[s] (mod q d)}.
std::vector<std::vector<Int>> congruent_class_representatives(const EvenLattice& lat, const Int& d_val,
                                                              const Int& d);

} // namespace fjd

#endif
