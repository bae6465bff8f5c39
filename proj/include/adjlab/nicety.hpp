#pragma once

#include "adjlab/lattice.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace adjlab {

/// One member's sign-expansion data: classes K_1..K_m with non-negative
/// coefficients a_1..a_m. The member's class set should equal
/// { +-a_1 K_1 +- ... +- a_m K_m } with duplicates collapsed.
struct Decomposition {
    std::vector<HClass> classes;
    std::vector<Int> coefficients;

    std::size_t summands() const { return classes.size(); }
};

/// Witness that a family of class sets is pairwise n-nicely inequivalent:
/// per-member decompositions whose first n classes are primitive and
/// independent and whose first n coefficient columns strictly increase
/// along the family.
struct NicetyCertificate {
    int n = 0;
    std::vector<Decomposition> per_member;
    bool verified = false;
    std::string failure_reason;
};

struct VerifyDiagnostics {
    bool ok = false;
    int failing_bullet = 0;  ///< 1 = set equality, 2 = primitive/independent, 3 = increase
    int failing_member = -1; ///< 0-based index, -1 when ok
    std::string message;
};

/// All 2^m sign choices of the decomposition, duplicates collapsed, sorted.
/// Classes must be torsion-free (coordinates only).
std::vector<HClass> expand_decomposition(const Decomposition& d);

/// Re-check a certificate against the family's class sets. Shape errors
/// (length mismatch, fewer than n summands) throw; property failures come
/// back as diagnostics naming the first failing condition and member.
VerifyDiagnostics verify_certificate(const std::vector<std::vector<HClass>>& family_sets,
                                     const NicetyCertificate& cert);

struct InferOptions {
    int n = 1;
    /// Caps both search nodes and collected decompositions per member.
    std::uint64_t search_limit = 10000;
};

/// Best-effort certificate search. Each set is peeled into candidate
/// summands a*K recovered from half-differences against the lex-maximal
/// element; a deterministic cross-member selection then enforces the
/// strictly increasing columns. A failed search is reported in
/// failure_reason and is NOT evidence that no certificate exists.
/// Throws if a set is not closed under negation.
NicetyCertificate infer_certificate(const std::vector<std::vector<HClass>>& family_sets,
                                    const InferOptions& options);

} // namespace adjlab
