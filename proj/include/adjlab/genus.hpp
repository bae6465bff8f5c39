#pragma once

#include "adjlab/lattice.hpp"
#include "adjlab/nicety.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace adjlab {

/// Fallback genus assignment for classes outside the explicit table:
/// genus(v) = slope * divisibility(v) + offset for nonzero v.
struct DefaultGenusRule {
    enum class Kind { divisibility_linear };
    Kind kind = Kind::divisibility_linear;
    Int slope = 1;
    Int offset = 0;
};

/// Synthetic stand-in for a minimal genus function: an explicit finite table
/// over canonical class representatives plus a closed-form default. Total,
/// symmetric under negation, zero at zero.
class GenusModel {
public:
    GenusModel(Lattice lattice, std::vector<std::pair<HClass, Int>> table,
               DefaultGenusRule default_rule);

    const Lattice& lattice() const { return lattice_; }
    const std::vector<std::pair<HClass, Int>>& table() const { return table_; }
    const DefaultGenusRule& default_rule() const { return default_rule_; }

    /// The modeled minimal genus of v.
    Int genus(const HClass& v) const;

private:
    Lattice lattice_;
    std::vector<std::pair<HClass, Int>> table_; // canonical reps, sorted
    DefaultGenusRule default_rule_;
};

enum class ClassSetKind { sw_basic, stein_c1 };

struct ManifoldModelData {
    Lattice lattice{0};
    bool b2_plus_gt_1 = false;
    bool simple_type = false;
    bool closed = true;
    long long b1_boundary = 0;
    ClassSetKind class_set_kind = ClassSetKind::sw_basic;
    std::vector<HClass> class_set;
    std::string label;
    bool degenerate = false;
};

/// A 4-manifold as the genus machinery sees it: its second-homology lattice,
/// the topological flags the adjunction bounds need, and a finite class set
/// (Seiberg-Witten basic classes, or +-first Chern classes of Stein
/// structures) closed under negation.
class ManifoldModel {
public:
    explicit ManifoldModel(ManifoldModelData data);

    const Lattice& lattice() const { return data_.lattice; }
    bool b2_plus_gt_1() const { return data_.b2_plus_gt_1; }
    bool simple_type() const { return data_.simple_type; }
    bool closed() const { return data_.closed; }
    long long b1_boundary() const { return data_.b1_boundary; }
    ClassSetKind class_set_kind() const { return data_.class_set_kind; }
    const std::vector<HClass>& class_set() const { return data_.class_set; }
    const std::string& label() const { return data_.label; }
    bool degenerate() const { return data_.degenerate; }

private:
    ManifoldModelData data_;
};

/// 2 * genus(v) - v.v, the quantity the adjunction inequalities bound.
Int adjunction_genus(const GenusModel& model, const HClass& v);

/// n-th largest adjunction genus over a rational basis, with multiplicity;
/// 0 when n exceeds the lattice rank. Throws if the basis is not rational.
Int nth_largest_adjunction(const GenusModel& model, std::span<const HClass> basis, int n);

constexpr std::uint64_t kDefaultWorkLimit = 100'000'000;

/// Raised when an exhaustive search would exceed its work limit. Carries the
/// statistics gathered so far instead of returning a silent partial answer.
class WorkLimitError : public std::runtime_error {
public:
    WorkLimitError(std::string what, std::uint64_t examined)
        : std::runtime_error(std::move(what)), work_examined(examined) {}
    std::uint64_t work_examined = 0;
};

struct BoundedGenusResult {
    Int value;
    std::vector<HClass> witness;       ///< minimizing basis, lex-least among minima
    std::uint64_t work_examined = 0;   ///< enumeration steps consumed
    std::uint64_t bases_checked = 0;
};

/// Minimum of the n-th largest adjunction genus over all rational bases with
/// coordinates in [-coeff_bound, coeff_bound]. This is an UPPER bound for
/// the true adjunction n-genus (the minimizing basis need not have bounded
/// coordinates), nonincreasing in coeff_bound. Enumeration fixes the sign of
/// each vector's first nonzero coordinate, keeps basis tuples in strictly
/// increasing lex order, and abandons rank-deficient partial tuples.
BoundedGenusResult bounded_n_genus(const GenusModel& model, int n, int coeff_bound,
                                   std::uint64_t work_limit = kDefaultWorkLimit);

/// Largest lower bound on the adjunction genus of alpha implied by the
/// adjunction inequality against the model's class set. Requires alpha != 0;
/// an empty class set gives 0. For negative self-intersection the bound is
/// only available under simple type (otherwise 0).
Int sw_adjunction_lower_bound(const ManifoldModel& model, const HClass& alpha);

/// Per-member lower bounds min{a_1,...,a_n} for the adjunction n-genus,
/// extracted from a certificate that must verify against the family's class
/// sets. The output is strictly increasing along the family.
std::vector<Int> family_divergence_bound(const std::vector<ManifoldModel>& family,
                                         const NicetyCertificate& cert, int n);

struct DivisibilityCheck {
    bool distinct = false;
    std::vector<Int> divisibilities;
};

/// Pairwise-distinct test on the members' first-Chern-class divisibilities
/// (the max over each Stein class set). Distinct divisibilities give the
/// order-1 inequivalence hypothesis via singleton decompositions.
DivisibilityCheck divisibility_distinct_check(const std::vector<ManifoldModel>& family);

} // namespace adjlab
