#pragma once

#include "adjlab/alexander.hpp"
#include "adjlab/genus.hpp"

#include <span>
#include <variant>
#include <vector>

namespace adjlab {

/// Simply connected elliptic surface with multiplicity p,q logarithmic
/// transforms: rank 12k-2 lattice (hyperbolic-sum stand-in form) carrying
/// the distinguished basic classes +-(kpq - p - q) f for a primitive fiber
/// dual f. When kpq - p - q = 0 the class is zero and the model is flagged
/// degenerate instead of rejected.
ManifoldModel elliptic_model(int k, int p, int q);

/// Knot surgery on the given self-intersection-0 torus duals, one knot per
/// family member applied across all tori. The class set transforms as the
/// formal sum of base classes multiplied per torus by the knot polynomial
/// with t^j acting as a shift by 2j*T; terms cancel only under exact
/// integer arithmetic.
std::vector<ManifoldModel> knot_surgery_family(const ManifoldModel& base,
                                               std::span<const HClass> tori,
                                               std::span<const AlexanderPolynomial> knots);

/// Compact Stein domain with b2 = 2 and class set {+-rK}, K primitive,
/// r = p(m1 - 1) + m0 - 2.
ManifoldModel stein_model(int m0, int m1, int m2, long long p);

/// Boundary connected sum: block-sum lattice, class set of all sign
/// combinations of the summands' distinguished classes. Every summand must
/// have boundary and a single sign-orbit class set.
ManifoldModel boundary_connected_sum(std::span<const ManifoldModel> members);

/// Number of disjoint cusp-nucleus copies available in the k-th elliptic
/// surface: 2(k-1). Bounds how many tori a knot-surgery family may use.
long long nuclei_capacity(int k);

struct EllipticParams {
    int k = 2;
    std::vector<std::pair<int, int>> pq_list;
};

struct KnotSurgeryParams {
    int k = 2;                      ///< elliptic base E(k)
    int tori = 1;                   ///< number of surgery tori
    std::vector<std::string> knots; ///< Alexander polynomials, one per member
};

struct SteinParams {
    int m0 = 2, m1 = 2, m2 = 1;
    std::vector<long long> p_list;
};

struct SteinBcsParams {
    int m0 = 2, m1 = 2, m2 = 1;
    int n = 1; ///< number of boundary-connected summands
    std::vector<long long> p_list;
};

struct FamilyDescriptor {
    enum class Kind { elliptic, knot_surgery, stein, stein_bcs };
    std::variant<EllipticParams, KnotSurgeryParams, SteinParams, SteinBcsParams> params;
    std::vector<int> index_range; ///< 1-based member indices

    Kind kind() const { return static_cast<Kind>(params.index()); }
};

struct Family {
    FamilyDescriptor descriptor;
    std::vector<ManifoldModel> members;
};

/// Instantiate every member a descriptor names; validates the descriptor's
/// parameter bounds (and the nucleus capacity for knot surgery families).
Family build_family(FamilyDescriptor descriptor);

} // namespace adjlab
