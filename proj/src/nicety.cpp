#include "adjlab/nicety.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace adjlab {

namespace {

void require_torsion_free(const HClass& v, const char* who)
{
    for (const auto& t : v.torsion)
        if (t != 0)
            throw std::invalid_argument(std::string(who) +
                                        ": torsion-bearing classes are not supported here");
}

std::vector<Int> negated(const std::vector<Int>& v)
{
    std::vector<Int> out = v;
    for (auto& c : out) c = -c;
    return out;
}

std::vector<Int> plus(const std::vector<Int>& a, const std::vector<Int>& b)
{
    std::vector<Int> out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

std::vector<Int> minus(const std::vector<Int>& a, const std::vector<Int>& b)
{
    std::vector<Int> out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

using VecSet = std::vector<std::vector<Int>>; // sorted, unique coordinate vectors

VecSet to_vecset(const std::vector<HClass>& classes, const char* who)
{
    VecSet out;
    out.reserve(classes.size());
    for (const auto& v : classes) {
        require_torsion_free(v, who);
        out.push_back(v.coords);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool contains_vec(const VecSet& s, const std::vector<Int>& v)
{
    return std::binary_search(s.begin(), s.end(), v);
}

} // namespace

std::vector<HClass> expand_decomposition(const Decomposition& d)
{
    if (d.classes.size() != d.coefficients.size())
        throw std::invalid_argument("decomposition classes/coefficients length mismatch");
    if (d.classes.empty())
        throw std::invalid_argument("decomposition must have at least one summand");
    if (d.classes.size() > 24)
        throw std::invalid_argument("decomposition too large to expand");
    const std::size_t len = d.classes[0].coords.size();
    const std::size_t tlen = d.classes[0].torsion.size();
    for (const auto& k : d.classes) {
        require_torsion_free(k, "expand_decomposition");
        if (k.coords.size() != len || k.torsion.size() != tlen)
            throw std::invalid_argument("decomposition classes from different lattices");
        if (k.is_zero())
            throw std::invalid_argument("decomposition classes must be non-zero");
    }
    for (const auto& a : d.coefficients)
        if (a < 0) throw std::invalid_argument("decomposition coefficients must be non-negative");

    std::set<std::vector<Int>> seen;
    const std::size_t m = d.classes.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
        std::vector<Int> sum(len);
        for (std::size_t j = 0; j < m; ++j) {
            const Int sign = (mask >> j) & 1 ? -1 : 1;
            for (std::size_t i = 0; i < len; ++i)
                sum[i] += sign * d.coefficients[j] * d.classes[j].coords[i];
        }
        seen.insert(std::move(sum));
    }
    std::vector<HClass> out;
    out.reserve(seen.size());
    for (auto& v : seen) out.push_back(HClass{v, std::vector<Int>(tlen)});
    return out;
}

VerifyDiagnostics verify_certificate(const std::vector<std::vector<HClass>>& family_sets,
                                     const NicetyCertificate& cert)
{
    if (cert.n < 1) throw std::invalid_argument("certificate order n must be positive");
    if (family_sets.size() != cert.per_member.size())
        throw std::invalid_argument("certificate member count does not match the family");
    const std::size_t n = static_cast<std::size_t>(cert.n);
    for (std::size_t i = 0; i < cert.per_member.size(); ++i) {
        const auto& d = cert.per_member[i];
        if (d.classes.size() != d.coefficients.size())
            throw std::invalid_argument("decomposition classes/coefficients length mismatch");
        if (d.summands() < n)
            throw std::invalid_argument("member " + std::to_string(i) +
                                        " has fewer summands than the certificate order");
    }

    VerifyDiagnostics diag;
    for (std::size_t i = 0; i < family_sets.size(); ++i) {
        VecSet want = to_vecset(family_sets[i], "verify_certificate");
        VecSet got = to_vecset(expand_decomposition(cert.per_member[i]), "verify_certificate");
        if (want != got) {
            diag.failing_bullet = 1;
            diag.failing_member = static_cast<int>(i);
            diag.message = "member " + std::to_string(i) +
                           ": expanded decomposition does not reproduce the class set";
            return diag;
        }
    }
    for (std::size_t i = 0; i < cert.per_member.size(); ++i) {
        const auto& d = cert.per_member[i];
        std::span<const HClass> head(d.classes.data(), n);
        bool all_primitive = std::all_of(head.begin(), head.end(),
                                         [](const HClass& k) { return is_primitive(k); });
        if (!all_primitive || rank_of(head) != cert.n) {
            diag.failing_bullet = 2;
            diag.failing_member = static_cast<int>(i);
            diag.message = "member " + std::to_string(i) +
                           ": leading classes are not primitive and linearly independent";
            return diag;
        }
    }
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 1; i < cert.per_member.size(); ++i)
            if (!(cert.per_member[i - 1].coefficients[j] < cert.per_member[i].coefficients[j])) {
                diag.failing_bullet = 3;
                diag.failing_member = static_cast<int>(i);
                diag.message = "coefficient column " + std::to_string(j + 1) +
                               " is not strictly increasing at member " + std::to_string(i);
                return diag;
            }
    diag.ok = true;
    return diag;
}

namespace {

struct Summand {
    Int a;                  // coefficient, > 0
    std::vector<Int> k;    // primitive direction, first nonzero coordinate > 0
    bool operator<(const Summand& o) const
    {
        if (a != o.a) return a > o.a; // larger coefficients first
        return k < o.k;
    }
    bool operator==(const Summand& o) const = default;
};

std::vector<Int> canonical_direction(std::vector<Int> v)
{
    for (const auto& c : v) {
        if (c == 0) continue;
        if (c < 0)
            for (auto& x : v) x = -x;
        break;
    }
    return v;
}

struct SearchState {
    std::uint64_t budget;
    std::size_t max_collect;
    bool truncated = false;
    std::vector<std::vector<Summand>> collected;
};

// Peel one summand a*K off S: candidates come from half-differences against
// the lex-max element; a candidate survives when translating the residual
// set E by +-a*K covers S exactly. Recurses on E, which is strictly smaller.
void peel(const VecSet& s, std::vector<Summand>& partial, SearchState& st)
{
    if (st.collected.size() >= st.max_collect) return;
    const std::size_t len = s.empty() ? 0 : s[0].size();
    if (s.size() == 1 && std::all_of(s[0].begin(), s[0].end(),
                                     [](const Int& c) { return c == 0; })) {
        st.collected.push_back(partial);
        return;
    }

    const std::vector<Int>& top = s.back();
    std::set<Summand> candidates;
    for (const auto& e : s) {
        std::vector<Int> diff = minus(top, e);
        bool even = true, zero = true;
        for (auto& c : diff) {
            if (c % 2 != 0) {
                even = false;
                break;
            }
            c /= 2;
            if (c != 0) zero = false;
        }
        if (!even || zero) continue;
        HClass h{diff, {}};
        Int a = divisibility(h);
        std::vector<Int> k(len);
        for (std::size_t i = 0; i < len; ++i) k[i] = diff[i] / a;
        candidates.insert(Summand{a, canonical_direction(std::move(k))});
    }

    for (const auto& cand : candidates) {
        if (st.budget == 0) {
            st.truncated = true;
            return;
        }
        --st.budget;
        std::vector<Int> c(len);
        for (std::size_t i = 0; i < len; ++i) c[i] = cand.a * cand.k[i];

        VecSet residual;
        for (const auto& e : s) {
            // y = e - c; need y + c (= e) and y - c (= e - 2c) in S
            std::vector<Int> e2 = e;
            for (std::size_t i = 0; i < len; ++i) e2[i] -= 2 * c[i];
            if (contains_vec(s, e2)) residual.push_back(minus(e, c));
        }
        std::sort(residual.begin(), residual.end());
        residual.erase(std::unique(residual.begin(), residual.end()), residual.end());
        if (residual.empty() || residual.size() >= s.size()) continue;

        VecSet covered;
        covered.reserve(residual.size() * 2);
        for (const auto& y : residual) {
            covered.push_back(plus(y, c));
            covered.push_back(minus(y, c));
        }
        std::sort(covered.begin(), covered.end());
        covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
        if (covered != s) continue;

        partial.push_back(cand);
        peel(residual, partial, st);
        partial.pop_back();
        if (st.collected.size() >= st.max_collect) return;
    }
}

// Extend a decomposition to n summands with zero-coefficient standard basis
// directions that stay independent of the leading classes. Returns false if
// the coordinate rank runs out.
bool pad_to_order(std::vector<Summand>& dec, int n, std::size_t len)
{
    while (dec.size() < static_cast<std::size_t>(n)) {
        bool placed = false;
        for (std::size_t t = 0; t < len && !placed; ++t) {
            std::vector<Int> unit(len);
            unit[t] = 1;
            std::vector<HClass> head;
            for (std::size_t j = 0; j < dec.size() && j + 1 < static_cast<std::size_t>(n); ++j)
                head.push_back(HClass{dec[j].k, {}});
            head.push_back(HClass{unit, {}});
            if (rank_of(head) == static_cast<int>(head.size())) {
                dec.push_back(Summand{Int(0), std::move(unit)});
                placed = true;
            }
        }
        if (!placed) return false;
    }
    return true;
}

bool leading_block_ok(const std::vector<Summand>& dec, int n)
{
    std::vector<HClass> head;
    head.reserve(n);
    for (int j = 0; j < n; ++j) {
        HClass k{dec[j].k, {}};
        if (!is_primitive(k)) return false;
        head.push_back(std::move(k));
    }
    return rank_of(head) == n;
}

bool columns_increase(const std::vector<Summand>& prev, const std::vector<Summand>& next, int n)
{
    for (int j = 0; j < n; ++j)
        if (!(prev[j].a < next[j].a)) return false;
    return true;
}

bool choose_members(const std::vector<std::vector<std::vector<Summand>>>& options,
                    std::size_t member, int n, std::vector<std::size_t>& pick)
{
    if (member == options.size()) return true;
    for (std::size_t idx = 0; idx < options[member].size(); ++idx) {
        if (member > 0 &&
            !columns_increase(options[member - 1][pick[member - 1]], options[member][idx], n))
            continue;
        pick[member] = idx;
        if (choose_members(options, member + 1, n, pick)) return true;
    }
    return false;
}

} // namespace

NicetyCertificate infer_certificate(const std::vector<std::vector<HClass>>& family_sets,
                                    const InferOptions& options)
{
    if (options.n < 1) throw std::invalid_argument("certificate order n must be positive");
    NicetyCertificate cert;
    cert.n = options.n;

    std::vector<std::size_t> tlens;
    std::vector<std::vector<std::vector<Summand>>> options_per_member;
    bool any_truncated = false;
    for (std::size_t i = 0; i < family_sets.size(); ++i) {
        VecSet s = to_vecset(family_sets[i], "infer_certificate");
        tlens.push_back(family_sets[i].empty() ? 0 : family_sets[i][0].torsion.size());
        if (s.empty()) {
            cert.failure_reason = "member " + std::to_string(i) + ": class set is empty";
            return cert;
        }
        for (const auto& v : s)
            if (!contains_vec(s, negated(v)))
                throw std::invalid_argument("infer_certificate: member " + std::to_string(i) +
                                            " class set is not closed under negation");

        SearchState st;
        st.budget = options.search_limit;
        st.max_collect = static_cast<std::size_t>(
            std::min<std::uint64_t>(options.search_limit, 4096));
        std::vector<Summand> partial;
        peel(s, partial, st);
        any_truncated = any_truncated || st.truncated;

        std::vector<std::vector<Summand>> kept;
        const std::size_t len = s[0].size();
        for (auto& dec : st.collected) {
            if (!pad_to_order(dec, options.n, len)) continue;
            if (!leading_block_ok(dec, options.n)) continue;
            kept.push_back(std::move(dec));
        }
        if (kept.empty()) {
            cert.failure_reason = "member " + std::to_string(i) +
                                  ": no admissible decomposition found" +
                                  (st.truncated ? " within the search limit" : "");
            return cert;
        }
        options_per_member.push_back(std::move(kept));
    }

    std::vector<std::size_t> pick(options_per_member.size());
    if (!choose_members(options_per_member, 0, options.n, pick)) {
        cert.failure_reason =
            std::string("no per-member choice gives strictly increasing coefficient columns") +
            (any_truncated ? " (search limit was reached; result inconclusive)" : "");
        return cert;
    }

    for (std::size_t i = 0; i < options_per_member.size(); ++i) {
        const auto& chosen = options_per_member[i][pick[i]];
        Decomposition d;
        for (const auto& summand : chosen) {
            d.classes.push_back(HClass{summand.k, std::vector<Int>(tlens[i])});
            d.coefficients.push_back(summand.a);
        }
        cert.per_member.push_back(std::move(d));
    }

    auto diag = verify_certificate(family_sets, cert);
    if (!diag.ok)
        throw std::logic_error("infer_certificate produced a non-verifying certificate: " +
                               diag.message);
    cert.verified = true;
    return cert;
}

} // namespace adjlab
