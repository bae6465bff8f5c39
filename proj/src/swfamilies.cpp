#include "adjlab/swfamilies.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace adjlab {

namespace {

Lattice hyperbolic_sum(int rank)
{
    if (rank % 2 != 0) throw std::invalid_argument("hyperbolic sum needs even rank");
    IntMat form(rank, rank);
    for (int b = 0; b + 1 < rank; b += 2) {
        form.at(b, b + 1) = 1;
        form.at(b + 1, b) = 1;
    }
    return Lattice(rank, {}, std::move(form));
}

} // namespace

ManifoldModel elliptic_model(int k, int p, int q)
{
    if (k < 2) throw std::invalid_argument("elliptic_model needs k >= 2");
    if (p < 1 || q < 1) throw std::invalid_argument("elliptic_model needs p, q >= 1");
    const long long r = static_cast<long long>(k) * p * q - p - q;

    ManifoldModelData data;
    data.lattice = hyperbolic_sum(12 * k - 2);
    data.b2_plus_gt_1 = true;
    data.simple_type = true;
    data.closed = true;
    data.class_set_kind = ClassSetKind::sw_basic;
    data.degenerate = r == 0;
    std::vector<Int> coords(12 * k - 2);
    coords[0] = r;
    data.class_set.push_back(data.lattice.make_class(coords));
    coords[0] = -r;
    data.class_set.push_back(data.lattice.make_class(std::move(coords)));
    data.label = "E(" + std::to_string(k) + ")_{" + std::to_string(p) + "," +
                 std::to_string(q) + "}";
    return ManifoldModel(std::move(data));
}

std::vector<ManifoldModel> knot_surgery_family(const ManifoldModel& base,
                                               std::span<const HClass> tori,
                                               std::span<const AlexanderPolynomial> knots)
{
    const Lattice& lat = base.lattice();
    if (base.class_set().empty())
        throw std::invalid_argument("knot surgery needs a base with a non-empty class set");
    if (tori.empty()) throw std::invalid_argument("knot surgery needs at least one torus");
    for (const auto& t : tori) {
        if (!lat.contains(t))
            throw std::invalid_argument("torus class does not belong to the base lattice");
        if (!is_primitive(t))
            throw std::invalid_argument("torus duals must be primitive");
        if (lat.pair(t, t) != 0)
            throw std::invalid_argument("surgery tori must have self-intersection 0");
    }
    if (rank_of(tori) != static_cast<int>(tori.size()))
        throw std::invalid_argument("torus duals must be linearly independent");

    std::vector<ManifoldModel> family;
    family.reserve(knots.size());
    for (std::size_t i = 0; i < knots.size(); ++i) {
        // Formal sum over lattice classes; base classes enter with
        // coefficient 1 and each torus multiplies by sum_j c_j [2j T].
        std::map<HClass, Int> sum;
        for (const auto& l : base.class_set()) sum[l] += 1;
        for (const auto& t : tori) {
            std::map<HClass, Int> next;
            for (const auto& [cls, coeff] : sum)
                for (const auto& [exp, c] : knots[i].coeffs())
                    next[lat.add(cls, lat.scale(2 * exp, t))] += coeff * c;
            for (auto it = next.begin(); it != next.end();)
                it = it->second == 0 ? next.erase(it) : std::next(it);
            sum = std::move(next);
        }

        ManifoldModelData data;
        data.lattice = lat;
        data.b2_plus_gt_1 = base.b2_plus_gt_1();
        data.simple_type = true; // surgery along square-zero tori preserves simple type
        data.closed = base.closed();
        data.b1_boundary = base.b1_boundary();
        data.class_set_kind = base.class_set_kind();
        for (const auto& [cls, coeff] : sum) data.class_set.push_back(cls);
        data.label = base.label() + " surgered[" + std::to_string(i + 1) + "]";
        family.emplace_back(std::move(data));
    }
    return family;
}

ManifoldModel stein_model(int m0, int m1, int m2, long long p)
{
    if (m0 < 2 || m1 < 2 || m2 < 1)
        throw std::invalid_argument("stein_model needs m0 >= 2, m1 >= 2, m2 >= 1");
    if (p < 1) throw std::invalid_argument("stein_model needs p >= 1");
    const long long r = p * (m1 - 1) + m0 - 2;

    ManifoldModelData data;
    data.lattice = hyperbolic_sum(2);
    data.closed = false;
    data.class_set_kind = ClassSetKind::stein_c1;
    data.class_set.push_back(data.lattice.make_class({Int(r), Int(0)}));
    data.class_set.push_back(data.lattice.make_class({Int(-r), Int(0)}));
    data.label = "X_" + std::to_string(p) + "^(" + std::to_string(m0) + "," +
                 std::to_string(m1) + "," + std::to_string(m2) + ")";
    return ManifoldModel(std::move(data));
}

ManifoldModel boundary_connected_sum(std::span<const ManifoldModel> members)
{
    if (members.empty())
        throw std::invalid_argument("boundary connected sum needs at least one member");
    std::vector<HClass> distinguished;
    for (const auto& m : members) {
        if (m.closed())
            throw std::invalid_argument("boundary connected sum needs members with boundary");
        // A single sign orbit {+-alpha} (or {0}) names the distinguished class.
        const auto& set = m.class_set();
        if (set.empty() || set.size() > 2 ||
            (set.size() == 2 && m.lattice().negate(set[0]) != set[1]))
            throw std::invalid_argument("member '" + m.label() +
                                        "' has no single distinguished class");
        distinguished.push_back(set.back()); // canonical order puts -alpha first
    }

    Lattice lattice = members[0].lattice();
    for (std::size_t i = 1; i < members.size(); ++i)
        lattice = lattice.direct_sum(members[i].lattice());
    if (!lattice.torsion_coefficients().empty())
        throw std::invalid_argument("boundary connected sum supports torsion-free members only");

    std::vector<HClass> class_set;
    const std::size_t n = members.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        std::vector<Int> coords(lattice.rank());
        std::size_t offset = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const int sign = (mask >> i) & 1 ? -1 : 1;
            const auto& alpha = distinguished[i].coords;
            for (std::size_t j = 0; j < alpha.size(); ++j)
                coords[offset + j] = sign * alpha[j];
            offset += alpha.size();
        }
        class_set.push_back(lattice.make_class(std::move(coords)));
    }

    ManifoldModelData data;
    data.lattice = std::move(lattice);
    data.closed = false;
    data.class_set_kind = ClassSetKind::stein_c1;
    long long b1 = 0;
    for (const auto& m : members) b1 += m.b1_boundary();
    data.b1_boundary = b1;
    data.class_set = std::move(class_set);
    data.label = "bcs[";
    for (std::size_t i = 0; i < members.size(); ++i)
        data.label += (i ? ", " : "") + members[i].label();
    data.label += "]";
    return ManifoldModel(std::move(data));
}

long long nuclei_capacity(int k)
{
    if (k < 2) throw std::invalid_argument("nuclei_capacity needs k >= 2");
    return 2LL * (k - 1);
}

Family build_family(FamilyDescriptor descriptor)
{
    Family out{std::move(descriptor), {}};
    const auto& d = out.descriptor;
    switch (d.kind()) {
    case FamilyDescriptor::Kind::elliptic: {
        const auto& p = std::get<EllipticParams>(d.params);
        if (p.pq_list.empty()) throw std::invalid_argument("elliptic family needs a p,q list");
        for (const auto& [pp, qq] : p.pq_list)
            out.members.push_back(elliptic_model(p.k, pp, qq));
        break;
    }
    case FamilyDescriptor::Kind::knot_surgery: {
        const auto& p = std::get<KnotSurgeryParams>(d.params);
        if (p.knots.empty()) throw std::invalid_argument("knot surgery family needs knots");
        if (p.tori < 1) throw std::invalid_argument("knot surgery family needs tori >= 1");
        if (p.tori > nuclei_capacity(p.k))
            throw std::invalid_argument("E(" + std::to_string(p.k) + ") carries only " +
                                        std::to_string(nuclei_capacity(p.k)) +
                                        " disjoint nuclei");
        ManifoldModel base = elliptic_model(p.k, 1, 1);
        std::vector<HClass> tori;
        for (int t = 0; t < p.tori; ++t) {
            // distinct hyperbolic blocks, away from the fiber block 0
            std::vector<Int> coords(base.lattice().rank());
            coords[2 * (t + 1)] = 1;
            tori.push_back(base.lattice().make_class(std::move(coords)));
        }
        std::vector<AlexanderPolynomial> knots;
        for (const auto& text : p.knots) knots.push_back(AlexanderPolynomial::parse(text));
        out.members = knot_surgery_family(base, tori, knots);
        break;
    }
    case FamilyDescriptor::Kind::stein: {
        const auto& p = std::get<SteinParams>(d.params);
        if (p.p_list.empty()) throw std::invalid_argument("stein family needs a p list");
        for (long long pp : p.p_list) out.members.push_back(stein_model(p.m0, p.m1, p.m2, pp));
        break;
    }
    case FamilyDescriptor::Kind::stein_bcs: {
        const auto& p = std::get<SteinBcsParams>(d.params);
        if (p.p_list.empty()) throw std::invalid_argument("stein-bcs family needs a p list");
        if (p.n < 1) throw std::invalid_argument("stein-bcs family needs n >= 1");
        for (long long pp : p.p_list) {
            std::vector<ManifoldModel> copies(
                static_cast<std::size_t>(p.n), stein_model(p.m0, p.m1, p.m2, pp));
            ManifoldModel z = boundary_connected_sum(copies);
            out.members.push_back(std::move(z));
        }
        break;
    }
    }
    out.descriptor.index_range.clear();
    for (std::size_t i = 0; i < out.members.size(); ++i)
        out.descriptor.index_range.push_back(static_cast<int>(i + 1));
    return out;
}

} // namespace adjlab
