#pragma once

#include "adjlab/ints.hpp"

#include <optional>
#include <string>

namespace adjlab {

/// The Betti-number bookkeeping of a cut X = (X - int W) u W against a
/// family with b2 = m and established divergence order n.
struct CutData {
    long long b2_X = 0;
    long long b2_W = 0;
    long long b1_dW = 0;
    std::optional<long long> b2_complement; ///< b2(X - int W) when known
    long long m = 0;
    long long n = 1;

    /// Rank bound from the cut's exact sequence; only checkable when the
    /// complement rank is known.
    bool mv_consistent() const
    {
        return !b2_complement || b2_W + *b2_complement >= b2_X - b1_dW;
    }
};

enum class ObstructionKind { twist, surgery, embedding_varied };

struct ObstructionReport {
    ObstructionKind kind = ObstructionKind::twist;
    bool applies = false;
    long long threshold_value = 0;
    CutData inputs;
    std::string narrative;
};

/// A family with divergent adjunction n-genera cannot be generated by
/// twisting a fixed W when b1(dW) < n.
ObstructionReport twist_applies(long long n, long long b1_dW);

/// Least n for which twisting W yields only finitely many adjunction
/// n-genus values: b1(dW) + 1.
long long twist_finiteness_threshold(long long b1_dW);

/// Surgery obstruction: applies when m - b2(X) + b2(W) + 3 b1(dW) < n.
ObstructionReport surgery_applies(long long m, long long b2_X, long long b2_W,
                                  long long b1_dW, long long n);

struct SurgeryFiniteness {
    long long least_n;          ///< m - b2(complement) + 2 b1(dW) + 1
    long long glued_rank_bound; ///< b2 of any glued-in piece is at most this
};

/// Finiteness threshold for surgeries in terms of the complement's rank.
SurgeryFiniteness surgery_finiteness_threshold(long long m, long long b2_complement,
                                               long long b1_dW);

/// Varying-embedding twist obstruction: applies when m - n < b2(W) - 4 b1(dW).
ObstructionReport embedding_applies(long long m, long long n, long long b2_W,
                                    long long b1_dW);

struct MvCheck {
    bool consistent = false;
    long long slack_upper = 0; ///< b2_A + b2_B + b1_dW - b2_glued
    long long slack_lower = 0; ///< b2_glued - (b2_A + b2_B - b1_dW)
};

/// Both rank inequalities a gluing along a 3-manifold with first Betti
/// number b1_dW must satisfy: |b2_glued - (b2_A + b2_B)| <= b1_dW.
MvCheck mv_rank_check(long long b2_A, long long b2_B, long long b1_dW, long long b2_glued);

/// Orientation choices for regluing a piece with the given number of
/// connected components: 2^components.
Int component_orientation_count(int components);

} // namespace adjlab
