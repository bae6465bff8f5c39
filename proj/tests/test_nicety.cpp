#include "adjlab/nicety.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace adjlab;

namespace {

HClass cls(std::vector<Int> coords) { return HClass{std::move(coords), {}}; }

std::vector<HClass> sign_orbit(const std::vector<Int>& v)
{
    std::vector<Int> neg = v;
    for (auto& c : neg) c = -c;
    std::vector<HClass> out{cls(v), cls(neg)};
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Brute-force expansion oracle, independent of expand_decomposition.
std::set<std::vector<Int>> expand_oracle(const std::vector<std::vector<Int>>& ks,
                                         const std::vector<Int>& as)
{
    std::set<std::vector<Int>> out;
    const std::size_t m = ks.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
        std::vector<Int> sum(ks[0].size());
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i = 0; i < sum.size(); ++i)
                sum[i] += ((mask >> j) & 1 ? -1 : 1) * as[j] * ks[j][i];
        out.insert(std::move(sum));
    }
    return out;
}

std::set<std::vector<Int>> as_coord_set(const std::vector<HClass>& classes)
{
    std::set<std::vector<Int>> out;
    for (const auto& c : classes) out.insert(c.coords);
    return out;
}

} // namespace

TEST_CASE("expand_decomposition matches the brute-force oracle")
{
    Decomposition d;
    d.classes = {cls({1, 0}), cls({0, 1}), cls({1, 1})};
    d.coefficients = {3, 2, 1};
    auto got = as_coord_set(expand_decomposition(d));
    auto want = expand_oracle({{1, 0}, {0, 1}, {1, 1}}, {3, 2, 1});
    CHECK(got == want);
}

TEST_CASE("verify: singleton decompositions with increasing coefficients")
{
    std::vector<std::vector<HClass>> sets;
    NicetyCertificate cert;
    cert.n = 1;
    for (int i = 1; i <= 4; ++i) {
        sets.push_back(sign_orbit({Int(i), Int(0)}));
        Decomposition d;
        d.classes = {cls({1, 0})};
        d.coefficients = {Int(i)};
        cert.per_member.push_back(std::move(d));
    }
    auto diag = verify_certificate(sets, cert);
    CHECK(diag.ok);
}

TEST_CASE("verify: non-increasing column is rejected at bullet 3")
{
    std::vector<std::vector<HClass>> sets{sign_orbit({1}), sign_orbit({2}), sign_orbit({2})};
    NicetyCertificate cert;
    cert.n = 1;
    for (Int a : {1, 2, 2}) {
        Decomposition d;
        d.classes = {cls({1})};
        d.coefficients = {a};
        cert.per_member.push_back(std::move(d));
    }
    auto diag = verify_certificate(sets, cert);
    CHECK_FALSE(diag.ok);
    CHECK(diag.failing_bullet == 3);
    CHECK(diag.failing_member == 2);
}

TEST_CASE("verify: non-primitive leading class is rejected at bullet 2")
{
    std::vector<std::vector<HClass>> sets{sign_orbit({2}), sign_orbit({4})};
    NicetyCertificate cert;
    cert.n = 1;
    for (Int a : {1, 2}) {
        Decomposition d;
        d.classes = {cls({2})}; // 2 * primitive
        d.coefficients = {a};
        cert.per_member.push_back(std::move(d));
    }
    auto diag = verify_certificate(sets, cert);
    CHECK_FALSE(diag.ok);
    CHECK(diag.failing_bullet == 2);
}

TEST_CASE("verify: set mismatch is rejected at bullet 1, shape errors throw")
{
    std::vector<std::vector<HClass>> sets{sign_orbit({1}), sign_orbit({3})};
    NicetyCertificate cert;
    cert.n = 1;
    for (Int a : {1, 2}) { // member 2 expands to {+-2}, set says {+-3}
        Decomposition d;
        d.classes = {cls({1})};
        d.coefficients = {a};
        cert.per_member.push_back(std::move(d));
    }
    auto diag = verify_certificate(sets, cert);
    CHECK_FALSE(diag.ok);
    CHECK(diag.failing_bullet == 1);
    CHECK(diag.failing_member == 1);

    cert.per_member.pop_back();
    CHECK_THROWS_AS(verify_certificate(sets, cert), std::invalid_argument);

    NicetyCertificate thin;
    thin.n = 2;
    thin.per_member.resize(2);
    for (auto& d : thin.per_member) {
        d.classes = {cls({1})};
        d.coefficients = {Int(1)};
    }
    CHECK_THROWS_AS(verify_certificate(sets, thin), std::invalid_argument);
}

TEST_CASE("verify is invariant under negating any K_j")
{
    std::vector<std::vector<HClass>> sets;
    NicetyCertificate cert;
    cert.n = 2;
    for (int i = 1; i <= 3; ++i) {
        Decomposition d;
        d.classes = {cls({1, 0}), cls({0, 1}), cls({1, 1})};
        d.coefficients = {Int(i), Int(i + 3), Int(1)};
        sets.push_back(expand_decomposition(d));
        cert.per_member.push_back(std::move(d));
    }
    CHECK(verify_certificate(sets, cert).ok);
    // negate K_2 of member 1 and K_3 of member 2
    for (auto& c : cert.per_member[0].classes[1].coords) c = -c;
    for (auto& c : cert.per_member[1].classes[2].coords) c = -c;
    CHECK(verify_certificate(sets, cert).ok);
}

TEST_CASE("verify is invariant under permuting trailing columns")
{
    std::vector<std::vector<HClass>> sets;
    NicetyCertificate cert;
    cert.n = 1;
    for (int i = 1; i <= 3; ++i) {
        Decomposition d;
        d.classes = {cls({1, 0}), cls({0, 1}), cls({1, 1})};
        d.coefficients = {Int(i), Int(5), Int(7)};
        sets.push_back(expand_decomposition(d));
        cert.per_member.push_back(std::move(d));
    }
    CHECK(verify_certificate(sets, cert).ok);
    std::swap(cert.per_member[1].classes[1], cert.per_member[1].classes[2]);
    std::swap(cert.per_member[1].coefficients[1], cert.per_member[1].coefficients[2]);
    CHECK(verify_certificate(sets, cert).ok);
}

TEST_CASE("infer: odd multiples of a primitive class")
{
    std::vector<std::vector<HClass>> sets;
    for (int i = 1; i <= 5; ++i) sets.push_back(sign_orbit({Int(2 * i + 1), Int(0)}));
    auto cert = infer_certificate(sets, InferOptions{1, 10000});
    REQUIRE(cert.verified);
    for (int i = 0; i < 5; ++i) {
        CHECK(cert.per_member[i].coefficients[0] == 2 * (i + 1) + 1);
        CHECK(cert.per_member[i].classes[0] == cls({1, 0}));
    }
    CHECK(verify_certificate(sets, cert).ok); // round trip
}

TEST_CASE("infer: a two-scale orbit set is still a sign expansion")
{
    // {+-K, +-3K} = {+-2K +- K}; brute-force oracle confirms the expansion.
    auto want = as_coord_set(sign_orbit({1}));
    auto three = as_coord_set(sign_orbit({3}));
    want.insert(three.begin(), three.end());
    CHECK(expand_oracle({{1}, {1}}, {2, 1}) == want);

    std::vector<HClass> set;
    for (const auto& v : want) set.push_back(cls(v));
    auto cert = infer_certificate({set}, InferOptions{1, 10000});
    REQUIRE(cert.verified);
    CHECK(as_coord_set(expand_decomposition(cert.per_member[0])) == want);
}

TEST_CASE("infer: mixed-parity orbits are not sign expansions")
{
    std::vector<HClass> set = sign_orbit({1});
    for (const auto& v : sign_orbit({2})) set.push_back(v);
    auto cert = infer_certificate({set}, InferOptions{1, 10000});
    CHECK_FALSE(cert.verified);
    CHECK_FALSE(cert.failure_reason.empty());
}

TEST_CASE("infer: throws on a set that is not closed under negation")
{
    std::vector<HClass> bad{cls({1, 0}), cls({2, 0}), cls({-2, 0})};
    CHECK_THROWS_AS(infer_certificate({bad}, InferOptions{1, 1000}), std::invalid_argument);
}

TEST_CASE("infer: block sums recover one column per block")
{
    // sets r(+-K1 +- K2) for r = 2, 4, 6
    std::vector<std::vector<HClass>> sets;
    for (int r = 2; r <= 6; r += 2) {
        Decomposition d;
        d.classes = {cls({1, 0, 0, 0}), cls({0, 0, 1, 0})};
        d.coefficients = {Int(r), Int(r)};
        sets.push_back(expand_decomposition(d));
    }
    auto cert = infer_certificate(sets, InferOptions{2, 10000});
    REQUIRE(cert.verified);
    for (int i = 0; i < 3; ++i) {
        CHECK(cert.per_member[i].summands() == 2);
        CHECK(cert.per_member[i].coefficients[0] == 2 * (i + 1));
        CHECK(cert.per_member[i].coefficients[1] == 2 * (i + 1));
    }
}

TEST_CASE("infer: arithmetic-progression shift sets peel with top coefficient i")
{
    // sets {0, +-2T, ..., +-2iT}: decomposable with leading coefficient i
    std::vector<std::vector<HClass>> sets;
    for (int i = 1; i <= 6; ++i) {
        std::set<std::vector<Int>> s;
        for (int j = -i; j <= i; ++j) s.insert({Int(2 * j), Int(0)});
        std::vector<HClass> set;
        for (const auto& v : s) set.push_back(cls(v));
        sets.push_back(std::move(set));
    }
    auto cert = infer_certificate(sets, InferOptions{1, 10000});
    REQUIRE(cert.verified);
    for (int i = 0; i < 6; ++i) CHECK(cert.per_member[i].coefficients[0] == i + 1);
}

TEST_CASE("infer round trip on randomized-ish products")
{
    std::vector<std::vector<HClass>> sets;
    for (int i = 1; i <= 3; ++i) {
        Decomposition d;
        d.classes = {cls({1, 2}), cls({0, 1})};
        d.coefficients = {Int(2 * i + 1), Int(4 * i)};
        sets.push_back(expand_decomposition(d));
    }
    auto cert = infer_certificate(sets, InferOptions{2, 10000});
    REQUIRE(cert.verified);
    CHECK(verify_certificate(sets, cert).ok);
}
