#include "adjlab/obstruction.hpp"

#include <stdexcept>

namespace adjlab {

namespace {

std::string num(long long v) { return std::to_string(v); }

} // namespace

ObstructionReport twist_applies(long long n, long long b1_dW)
{
    if (n < 1) throw std::invalid_argument("twist_applies needs n >= 1");
    ObstructionReport r;
    r.kind = ObstructionKind::twist;
    r.applies = b1_dW < n;
    r.threshold_value = n;
    r.inputs.n = n;
    r.inputs.b1_dW = b1_dW;
    r.narrative = "twist obstruction: b1(dW) = " + num(b1_dW) +
                  (r.applies ? " < " : " >= ") + num(n) +
                  (r.applies ? "; a family with divergent adjunction " + num(n) +
                                   "-genera cannot be generated by twisting W"
                             : "; no conclusion (the condition is strict)");
    return r;
}

long long twist_finiteness_threshold(long long b1_dW) { return b1_dW + 1; }

ObstructionReport surgery_applies(long long m, long long b2_X, long long b2_W,
                                  long long b1_dW, long long n)
{
    if (n < 1) throw std::invalid_argument("surgery_applies needs n >= 1");
    ObstructionReport r;
    r.kind = ObstructionKind::surgery;
    r.threshold_value = m - b2_X + b2_W + 3 * b1_dW;
    r.applies = r.threshold_value < n;
    r.inputs = CutData{b2_X, b2_W, b1_dW, std::nullopt, m, n};
    r.narrative = "surgery obstruction: m - b2(X) + b2(W) + 3 b1(dW) = " +
                  num(r.threshold_value) + (r.applies ? " < " : " >= ") + num(n) +
                  (r.applies ? "; a family with divergent adjunction " + num(n) +
                                   "-genera cannot be generated by surgeries on W"
                             : "; no conclusion (the condition is strict)");
    return r;
}

SurgeryFiniteness surgery_finiteness_threshold(long long m, long long b2_complement,
                                               long long b1_dW)
{
    SurgeryFiniteness out;
    out.glued_rank_bound = m - b2_complement + b1_dW;
    out.least_n = m - b2_complement + 2 * b1_dW + 1;
    return out;
}

ObstructionReport embedding_applies(long long m, long long n, long long b2_W,
                                    long long b1_dW)
{
    if (n < 1) throw std::invalid_argument("embedding_applies needs n >= 1");
    ObstructionReport r;
    r.kind = ObstructionKind::embedding_varied;
    r.threshold_value = m - n;
    r.applies = r.threshold_value < b2_W - 4 * b1_dW;
    r.inputs = CutData{0, b2_W, b1_dW, std::nullopt, m, n};
    r.narrative = "varied-embedding twist obstruction: b2(W) - 4 b1(dW) = " +
                  num(b2_W - 4 * b1_dW) + (r.applies ? " > " : " <= ") + num(m - n) +
                  " = m - n" +
                  (r.applies ? "; a family with divergent adjunction " + num(n) +
                                   "-genera cannot be generated by twisting any "
                                   "embedded copy of W"
                             : "; no conclusion (the condition is strict)");
    return r;
}

MvCheck mv_rank_check(long long b2_A, long long b2_B, long long b1_dW, long long b2_glued)
{
    if (b2_A < 0 || b2_B < 0 || b1_dW < 0 || b2_glued < 0)
        throw std::invalid_argument("mv_rank_check needs non-negative Betti numbers");
    MvCheck out;
    out.slack_upper = b2_A + b2_B + b1_dW - b2_glued;
    out.slack_lower = b2_glued - (b2_A + b2_B - b1_dW);
    out.consistent = out.slack_upper >= 0 && out.slack_lower >= 0;
    return out;
}

Int component_orientation_count(int components)
{
    if (components < 1)
        throw std::invalid_argument("component_orientation_count needs components >= 1");
    return Int(1) << components;
}

} // namespace adjlab
