#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gmtkit/chow_ring.hpp"
#include "gmtkit/correlators.hpp"
#include "gmtkit/partitions.hpp"
#include "gmtkit/quasimap.hpp"

namespace gmtkit {

// A required multi-point correlator could not be resolved by the built-in
// rules, the computed tables, or the user table. The message names the key.
struct NeedsCorrelator : std::runtime_error {
    CorrelatorKey key;
    explicit NeedsCorrelator(CorrelatorKey key_)
        : std::runtime_error("needs correlator " + key_.str()), key(std::move(key_)) {}
};

// Which layer resolved a correlator.
enum class CorrelatorRule { ZeroClass, DegreeZero, String, Divisor, Computed, User };

const char* correlator_rule_name(CorrelatorRule rule);

struct ResolvedCorrelator {
    Rational value;
    CorrelatorRule rule = CorrelatorRule::ZeroClass;
};

// One term of the correction sum of the mirror transformation at degree d:
//   S(sigma) * <O_{h^a} O_{h^b} prod_i O_{h^{1+(k-N)g_i}}>_{0,d-g}
//            * prod_i w(O_{h^{N-3+(N-k)g_i}} O_1)_{0,g_i} / k.
struct CorrectionTerm {
    int g = 0;
    Partition sigma;
    Rational symmetry;             // S(sigma)
    ResolvedCorrelator correlator;
    std::vector<Rational> w_factors;  // one w(...)/k per part
    Rational value;                // full product
};

// true iff h^c vanishes on the hypersurface: c < 0 or c > N-2.
bool zero_class(int c, int N);

// <O_{h^a} O_{h^b} prod O_{h^{c_i}}>_{0,0}: k for a single extra insertion
// matching the classical grading a + b + c = N - 2, else 0.
Rational degree_zero_correlator(int a, int b, const std::vector<int>& extras, int N, int k);

// Divisor reduction <O_{h^a} O_{h^b} (O_h)^l>_{0,m} = m^l <O_{h^a} O_{h^b}>_{0,m}.
// Returns the factor m^l; throws std::invalid_argument when not applicable
// (m = 0 or an extra insertion differs from h^1).
Rational divisor_reduction_factor(int m, const std::vector<int>& extras);

// Callback giving two-point values <O_{h^a} O_{h^b}>_{0,m}; std::nullopt when
// the table has no entry.
using TwoPointLookup = std::function<std::optional<Rational>(int m, int a, int b)>;

// Everything the mirror transformation says about one (a, b) cell at degree d:
//   w_ab - w_sub = gw + sum of corrections.
struct TransformationTerms {
    Rational w_ab;
    Rational w_sub;  // w(O_{h^{N-3+(N-k)d}} O_1)_{0,d}
    std::vector<CorrectionTerm> corrections;
    Rational correction_total;
};

// Computes genus-0 two-point Gromov-Witten invariants of the degree-k
// hypersurface in CP^{N-1} from two-point quasimap intersection numbers via
// the generalized mirror transformation, bootstrapping degree by degree.
class GmtEngine {
public:
    GmtEngine(int N, int k, CorrelatorTable user_table = {},
              RingCache& cache = global_ring_cache());

    int N() const { return N_; }
    int k() const { return k_; }
    // a + b on the only possibly-nonzero sector at degree d.
    int selection_sum(int d) const { return N_ - 3 + (N_ - k_) * d; }

    // All <O_{h^a} O_{h^b}>_{0,d} with a + b on the selection line and both
    // exponents in 0..N-2. Computes lower degrees first as needed.
    const std::map<std::pair<int, int>, Rational>& two_point(int d);

    // Single value; 0 for exponents outside 0..N-2 or off the line.
    Rational gw(int d, int a, int b);

    // Term-by-term view of the correction sum for one cell (g = 1..d-1).
    std::vector<CorrectionTerm> correction_terms(int d, int a, int b);
    // Correction terms of a single g; g = d is allowed (the degree-zero
    // bookkeeping sector).
    std::vector<CorrectionTerm> correction_terms_at_g(int d, int a, int b, int g);

    TransformationTerms transformation_terms(int d, int a, int b);

    // w(O_{h^{N-3+(N-k)g}} O_1)_{0,g} / k, cached per g.
    const Rational& w_factor(int g);

    // Layered resolution used for every multi-point correlator:
    //   zero class -> degree zero -> string class -> divisor reduction ->
    //   computed two-point table -> user table -> NeedsCorrelator.
    ResolvedCorrelator resolve_correlator(int m, int a, int b, const std::vector<int>& extras,
                                          const TwoPointLookup& lookup) const;

    // One correction term for the partition sigma, correlators taken from
    // the given lookup.
    CorrectionTerm build_term(int d, int a, int b, const Partition& sigma,
                              const TwoPointLookup& lookup);

    const CorrelatorTable& user_table() const { return user_; }

private:
    Rational two_point_value(int m, int a, int b, const TwoPointLookup& lookup,
                             const std::vector<int>& extras_for_key) const;
    TransformationTerms transformation_terms_with(int d, int a, int b, const TwoPointLookup& lookup);
    TwoPointLookup own_lookup();
    void compute_through(int d);

    int N_, k_;
    RingCache& cache_;
    CorrelatorTable user_;
    std::map<int, std::map<std::pair<int, int>, Rational>> gw_;
    std::map<int, Rational> w_factors_;
};

// d = 1 general-type cross-check: k (L~_n^{N,k,1} - L~_{1+k-N}^{N,k,1}).
Rational general_type_d1(int N, int k, int n, RingCache& cache = global_ring_cache());

// Residual report of the mirror transformation against a supplied table of
// two-point Gromov-Witten invariants (degree -> (a, b) -> value). Residuals
// are exactly 0 when the table came from GmtEngine.
struct GmtResidualReport {
    struct Row {
        int a = 0, b = 0;
        Rational residual;
        bool ok = false;
    };
    int N = 0, k = 0, d = 0;
    std::vector<Row> rows;
    bool all_ok = true;
};

using GwTable = std::map<int, std::map<std::pair<int, int>, Rational>>;

GmtResidualReport verify_gmt_identity(int N, int k, int d, const GwTable& gw_table,
                                      const CorrelatorTable& user_table = {},
                                      RingCache& cache = global_ring_cache());

// Instanton numbers of the quintic (N = k = 5) from the multiple-cover
// relation d <O_h O_h>_{0,d} = sum_{e | d} e^3 n_e.
std::map<int, Rational> instanton_numbers(int d_max, GmtEngine& quintic_engine);
std::map<int, Rational> instanton_numbers(int d_max, RingCache& cache = global_ring_cache());

}  // namespace gmtkit
