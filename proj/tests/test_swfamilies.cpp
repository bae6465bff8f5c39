#include "adjlab/swfamilies.hpp"

#include <doctest.h>

#include <set>

using namespace adjlab;

namespace {

std::set<std::vector<Int>> coord_set(const std::vector<HClass>& classes)
{
    std::set<std::vector<Int>> out;
    for (const auto& c : classes) out.insert(c.coords);
    return out;
}

// Naive product-set oracle for knot surgery without cancellation tracking:
// every base class shifted by every tuple of monomial exponents.
std::set<std::vector<Int>> product_set_oracle(const ManifoldModel& base,
                                              const std::vector<HClass>& tori,
                                              const AlexanderPolynomial& knot)
{
    std::set<std::vector<Int>> current = coord_set(base.class_set());
    for (const auto& t : tori) {
        std::set<std::vector<Int>> next;
        for (const auto& v : current)
            for (const auto& [exp, c] : knot.coeffs()) {
                std::vector<Int> shifted = v;
                for (std::size_t i = 0; i < shifted.size(); ++i)
                    shifted[i] += 2 * exp * t.coords[i];
                next.insert(std::move(shifted));
            }
        current = std::move(next);
    }
    return current;
}

HClass unit(const Lattice& l, int i)
{
    std::vector<Int> coords(l.rank());
    coords[i] = 1;
    return l.make_class(std::move(coords));
}

} // namespace

TEST_CASE("elliptic model: divisibility is kpq - p - q on the whole grid")
{
    CHECK(divisibility(elliptic_model(2, 2, 3).class_set().back()) == 7);
    CHECK(divisibility(elliptic_model(3, 1, 1).class_set().back()) == 1);

    auto degenerate = elliptic_model(2, 1, 1);
    CHECK(degenerate.degenerate());
    CHECK(degenerate.class_set().size() == 1);
    CHECK(divisibility(degenerate.class_set()[0]) == 0);

    for (int k = 2; k <= 5; ++k)
        for (int p = 1; p <= 6; ++p)
            for (int q = 1; q <= 6; ++q) {
                auto m = elliptic_model(k, p, q);
                long long r = static_cast<long long>(k) * p * q - p - q;
                CHECK(m.lattice().rank() == 12 * k - 2);
                CHECK(divisibility(m.class_set().back()) == abs_int(Int(r)));
                CHECK(m.degenerate() == (r == 0));
                CHECK(m.closed());
                CHECK(m.simple_type());
            }

    CHECK_THROWS_AS(elliptic_model(1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(elliptic_model(2, 0, 1), std::invalid_argument);
}

TEST_CASE("knot surgery: trefoil on the formal zero class")
{
    ManifoldModel base = elliptic_model(2, 1, 1); // class set {0}
    HClass torus = unit(base.lattice(), 2);
    auto family = knot_surgery_family(base, std::vector<HClass>{torus},
                                      std::vector<AlexanderPolynomial>{
                                          AlexanderPolynomial::parse("t - 1 + t^-1")});
    REQUIRE(family.size() == 1);
    auto got = coord_set(family[0].class_set());
    std::set<std::vector<Int>> want;
    for (int j : {-2, 0, 2}) {
        std::vector<Int> v(base.lattice().rank());
        v[2] = j;
        want.insert(v);
    }
    CHECK(got == want);
}

TEST_CASE("knot surgery: unknot leaves class sets fixed")
{
    ManifoldModel base = elliptic_model(3, 2, 1);
    std::vector<HClass> tori{unit(base.lattice(), 2), unit(base.lattice(), 4)};
    auto family = knot_surgery_family(
        base, tori, std::vector<AlexanderPolynomial>{AlexanderPolynomial::unknot()});
    REQUIRE(family.size() == 1);
    CHECK(coord_set(family[0].class_set()) == coord_set(base.class_set()));
}

TEST_CASE("knot surgery: agreement with the product-set oracle when no terms cancel")
{
    ManifoldModel base = elliptic_model(3, 1, 2); // classes +-e0, torus directions e2, e4
    std::vector<HClass> tori{unit(base.lattice(), 2), unit(base.lattice(), 4)};
    auto knot = AlexanderPolynomial::torus_knot_2_odd(2);
    auto family = knot_surgery_family(base, tori,
                                      std::vector<AlexanderPolynomial>{knot});
    CHECK(coord_set(family[0].class_set()) == product_set_oracle(base, tori, knot));
}

TEST_CASE("knot surgery: exact cancellation drops classes")
{
    // base classes +-T along the torus direction itself: the +-1 terms cancel
    ManifoldModelData d;
    d.lattice = elliptic_model(2, 1, 1).lattice();
    d.b2_plus_gt_1 = true;
    d.simple_type = true;
    d.closed = true;
    d.class_set_kind = ClassSetKind::sw_basic;
    HClass t = unit(d.lattice, 2);
    d.class_set = {t, d.lattice.negate(t)};
    ManifoldModel base{std::move(d)};

    auto family = knot_surgery_family(base, std::vector<HClass>{t},
                                      std::vector<AlexanderPolynomial>{
                                          AlexanderPolynomial::parse("t - 1 + t^-1")});
    auto got = coord_set(family[0].class_set());
    // (T + -T) * (t - 1 + 1/t) at shifts 2T: [3T] - [T] + [-T] + [T] - [-T] + [-3T]
    std::set<std::vector<Int>> want;
    for (int j : {-3, 3}) {
        std::vector<Int> v(base.lattice().rank());
        v[2] = j;
        want.insert(v);
    }
    CHECK(got == want);
}

TEST_CASE("knot surgery: maximal torus coefficient is twice the degree")
{
    ManifoldModel base = elliptic_model(2, 1, 1);
    HClass torus = unit(base.lattice(), 2);
    for (int g = 1; g <= 5; ++g) {
        auto family = knot_surgery_family(base, std::vector<HClass>{torus},
                                          std::vector<AlexanderPolynomial>{
                                              AlexanderPolynomial::torus_knot_2_odd(g)});
        Int top = 0;
        for (const auto& c : family[0].class_set()) top = std::max(top, c.coords[2]);
        CHECK(top == 2 * g);
        CHECK(family[0].lattice().rank() == base.lattice().rank());
    }
}

TEST_CASE("knot surgery: torus preconditions")
{
    ManifoldModel base = elliptic_model(2, 1, 1);
    std::vector<AlexanderPolynomial> knots{AlexanderPolynomial::unknot()};

    HClass imprimitive = base.lattice().scale(2, unit(base.lattice(), 2));
    CHECK_THROWS_AS(knot_surgery_family(base, std::vector<HClass>{imprimitive}, knots),
                    std::invalid_argument);

    std::vector<HClass> dependent{unit(base.lattice(), 2), unit(base.lattice(), 2)};
    CHECK_THROWS_AS(knot_surgery_family(base, dependent, knots), std::invalid_argument);

    // e0 + e1 has square 2 in the hyperbolic block
    HClass square2 = base.lattice().add(unit(base.lattice(), 0), unit(base.lattice(), 1));
    CHECK_THROWS_AS(knot_surgery_family(base, std::vector<HClass>{square2}, knots),
                    std::invalid_argument);
}

TEST_CASE("stein model: divisibility r = p(m1 - 1) + m0 - 2")
{
    CHECK(divisibility(stein_model(2, 2, 1, 3).class_set().back()) == 3);
    CHECK(divisibility(stein_model(2, 2, 1, 1).class_set().back()) == 1);
    CHECK(divisibility(stein_model(4, 3, 1, 2).class_set().back()) == 6);
    auto m = stein_model(2, 2, 1, 3);
    CHECK(m.lattice().rank() == 2);
    CHECK_FALSE(m.closed());
    CHECK(m.class_set_kind() == ClassSetKind::stein_c1);
    CHECK(m.class_set().size() == 2);

    CHECK_THROWS_AS(stein_model(1, 2, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(stein_model(2, 1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(stein_model(2, 2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(stein_model(2, 2, 1, 0), std::invalid_argument);
}

TEST_CASE("boundary connected sum: sign combinations and rank additivity")
{
    auto x = stein_model(2, 2, 1, 3); // r = 3
    std::vector<ManifoldModel> one{x};
    auto z1 = boundary_connected_sum(one);
    CHECK(coord_set(z1.class_set()) == coord_set(x.class_set()));

    std::vector<ManifoldModel> two{x, x};
    auto z2 = boundary_connected_sum(two);
    CHECK(z2.lattice().rank() == 4);
    CHECK(z2.class_set().size() == 4);
    std::set<std::vector<Int>> want;
    for (int s0 : {-1, 1})
        for (int s1 : {-1, 1}) want.insert({Int(3 * s0), Int(0), Int(3 * s1), Int(0)});
    CHECK(coord_set(z2.class_set()) == want);

    for (int n = 1; n <= 5; ++n) {
        std::vector<ManifoldModel> copies(n, x);
        auto z = boundary_connected_sum(copies);
        CHECK(z.lattice().rank() == 2 * n);
        CHECK(z.class_set().size() == (std::size_t(1) << n));
        // +- symmetry of the class set
        auto cs = coord_set(z.class_set());
        for (const auto& v : cs) {
            std::vector<Int> neg = v;
            for (auto& c : neg) c = -c;
            CHECK(cs.count(neg) == 1);
        }
    }

    std::vector<ManifoldModel> closed{elliptic_model(2, 1, 1)};
    CHECK_THROWS_AS(boundary_connected_sum(closed), std::invalid_argument);
}

TEST_CASE("nuclei capacity")
{
    CHECK(nuclei_capacity(2) == 2);
    CHECK(nuclei_capacity(4) == 6);
    for (int n = 1; n <= 10; ++n) CHECK(nuclei_capacity(n + 1) >= n);
    CHECK_THROWS_AS(nuclei_capacity(1), std::invalid_argument);
}

TEST_CASE("build_family: descriptors drive the constructors")
{
    FamilyDescriptor elliptic;
    elliptic.params = EllipticParams{2, {{2, 3}, {3, 4}, {4, 5}}};
    auto fam = build_family(elliptic);
    REQUIRE(fam.members.size() == 3);
    std::vector<Int> divs;
    for (const auto& m : fam.members)
        divs.push_back(divisibility(m.class_set().back()));
    CHECK(divs == std::vector<Int>{7, 17, 31});
    CHECK(fam.descriptor.index_range == std::vector<int>{1, 2, 3});

    FamilyDescriptor bcs;
    bcs.params = SteinBcsParams{2, 2, 1, 2, {2, 4, 6}};
    auto zfam = build_family(bcs);
    REQUIRE(zfam.members.size() == 3);
    for (const auto& m : zfam.members) {
        CHECK(m.lattice().rank() == 4);
        CHECK(m.class_set().size() == 4);
    }

    FamilyDescriptor empty;
    empty.params = SteinBcsParams{2, 2, 1, 2, {}};
    CHECK_THROWS_AS(build_family(empty), std::invalid_argument);

    FamilyDescriptor toomany;
    toomany.params = KnotSurgeryParams{2, 3, {"t - 1 + t^-1"}}; // E(2) holds only 2 nuclei
    CHECK_THROWS_AS(build_family(toomany), std::invalid_argument);
}
