#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "gmtkit/macaulay.hpp"
#include "gmtkit/multipoly.hpp"

namespace gmtkit {

// Ideal-membership certificate H_i^power = sum_j cofactors[j] * f_j.
struct ResidueCertificate {
    int var = 0;
    int power = 0;
    std::vector<MultiPoly> cofactors;
};

// Artinian graded quotient Q[H_0..H_d] / (f_0, ..., f_d) presenting the Chow
// ring of the degree-d quasimap space of CP^{N-1}, with
//   f_0 = H_0^N,  f_i = H_i^N (2H_i - H_{i-1} - H_{i+1}),  f_d = H_d^N,
// together with its integration functional (Grothendieck residue with unit
// normalization). Immutable after construction; the lazy per-degree caches
// are synchronized, so a built ring may be shared across threads.
class QuasimapRing {
public:
    QuasimapRing(int N, int d);

    int N() const { return N_; }
    int d() const { return d_; }
    int nvars() const { return d_ + 1; }
    int socle_degree() const { return socle_degree_; }
    const std::vector<MultiPoly>& relations() const { return relations_; }

    // Dimension of the degree-m piece of the quotient.
    int graded_dim(int m) const;

    // Certificate for variable index i, minimal power found by searching
    // M = N, N+1, ... (ends are immediate: H_0^N = f_0, H_d^N = f_d).
    const ResidueCertificate& certificate(int i) const;

    // Grothendieck residue of p with respect to (f_0..f_d), unit-normalized:
    // the coefficient of prod_i H_i^{M_i - 1} in p * det(cofactor matrix).
    // Only the degree-socle component of p contributes; linear; vanishes on
    // the ideal.
    Rational integrate(const MultiPoly& p) const;

    // Same value through Macaulay reduction of p to the one-dimensional socle
    // followed by residue evaluation of the socle basis monomial.
    Rational integrate_via_reduction(const MultiPoly& p) const;

    // The unique monomial of socle degree outside the ideal's row space.
    const Monomial& socle_monomial() const;

private:
    struct DegreeData {
        detail::DegreeBasis basis;
        detail::Echelon echelon;
    };
    struct ResidueData {
        std::vector<ResidueCertificate> certs;
        MultiPoly det_cofactor;
        Monomial target;  // prod_i H_i^{M_i - 1}
        ResidueData() : det_cofactor(1), target(1) {}
    };
    struct SocleData {
        Monomial monomial;
        Rational value;  // integrate of that monomial via the residue law
        SocleData() : monomial(1) {}
    };

    const DegreeData& degree_data(int D) const;
    const ResidueData& residue_data() const;
    const SocleData& socle_data() const;
    // Generator rows of the degree-D Macaulay matrix in insertion order.
    std::vector<std::pair<int, Monomial>> generators_at(int D) const;
    detail::SparseRow product_row(const detail::DegreeBasis& basis, int rel,
                                  const Monomial& mult) const;
    bool pure_power_in_ideal(int var, int power) const;
    ResidueCertificate solve_certificate(int var, int power) const;

    int N_, d_, socle_degree_;
    std::vector<MultiPoly> relations_;
    std::vector<int> relation_order_;  // row insertion order: monomial relations first

    mutable std::mutex mu_;
    mutable std::map<int, DegreeData> degrees_;
    mutable std::optional<ResidueData> residue_;
    mutable std::optional<SocleData> socle_;
};

// Per-(N, d) ring cache; relations do not depend on k, so rings are shared
// across k, a, b.
class RingCache {
public:
    std::shared_ptr<const QuasimapRing> get(int N, int d);

private:
    std::mutex mu_;
    std::map<std::pair<int, int>, std::shared_ptr<const QuasimapRing>> rings_;
};

RingCache& global_ring_cache();

}  // namespace gmtkit
