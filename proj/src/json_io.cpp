#include "adjlab/json_io.hpp"

namespace adjlab {

namespace {

Json int_list_to_json(const std::vector<Int>& v)
{
    Json out = Json::array();
    for (const auto& x : v) out.push_back(int_to_json(x));
    return out;
}

std::vector<Int> int_list_from_json(const Json& j)
{
    if (!j.is_array()) throw std::invalid_argument("expected an array of integers");
    std::vector<Int> out;
    out.reserve(j.size());
    for (const auto& x : j) out.push_back(int_from_json(x));
    return out;
}

const Json& field(const Json& j, const char* name)
{
    auto it = j.find(name);
    if (it == j.end())
        throw std::invalid_argument(std::string("missing field \"") + name + "\"");
    return *it;
}

} // namespace

Json int_to_json(const Int& v)
{
    if (fits_int64(v)) return v.convert_to<std::int64_t>();
    return v.str();
}

Int int_from_json(const Json& j)
{
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_string()) return int_from_string(j.get<std::string>());
    throw std::invalid_argument("expected an integer (number or decimal string)");
}

Json lattice_to_json(const Lattice& l)
{
    Json out;
    out["rank"] = l.rank();
    out["torsion"] = int_list_to_json(l.torsion_coefficients());
    Json form = Json::array();
    for (int i = 0; i < l.rank(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < l.rank(); ++j) row.push_back(int_to_json(l.form().at(i, j)));
        form.push_back(std::move(row));
    }
    out["form"] = std::move(form);
    return out;
}

Lattice lattice_from_json(const Json& j)
{
    const int rank = field(j, "rank").get<int>();
    std::vector<Int> torsion = int_list_from_json(field(j, "torsion"));
    const Json& form_json = field(j, "form");
    if (!form_json.is_array() || form_json.size() != static_cast<std::size_t>(rank))
        throw std::invalid_argument("form must be a rank x rank array");
    IntMat form(rank, rank);
    for (int i = 0; i < rank; ++i) {
        const Json& row = form_json[i];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(rank))
            throw std::invalid_argument("form must be a rank x rank array");
        for (int k = 0; k < rank; ++k) form.at(i, k) = int_from_json(row[k]);
    }
    return Lattice(rank, std::move(torsion), std::move(form));
}

Json class_to_json(const HClass& v)
{
    Json out;
    out["coords"] = int_list_to_json(v.coords);
    out["torsion"] = int_list_to_json(v.torsion);
    return out;
}

HClass class_from_json(const Json& j, const Lattice& lattice)
{
    std::vector<Int> coords = int_list_from_json(field(j, "coords"));
    std::vector<Int> torsion;
    if (j.contains("torsion")) torsion = int_list_from_json(j["torsion"]);
    return lattice.make_class(std::move(coords), std::move(torsion));
}

Json genus_model_to_json(const GenusModel& m)
{
    Json out;
    out["lattice"] = lattice_to_json(m.lattice());
    Json table = Json::array();
    for (const auto& [v, g] : m.table())
        table.push_back(Json::array({class_to_json(v), int_to_json(g)}));
    out["table"] = std::move(table);
    out["default_rule"] = Json{{"kind", "divisibility_linear"},
                               {"slope", int_to_json(m.default_rule().slope)},
                               {"offset", int_to_json(m.default_rule().offset)}};
    return out;
}

GenusModel genus_model_from_json(const Json& j)
{
    Lattice lattice = lattice_from_json(field(j, "lattice"));
    std::vector<std::pair<HClass, Int>> table;
    for (const auto& entry : field(j, "table")) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("genus table entries are [class, genus] pairs");
        table.emplace_back(class_from_json(entry[0], lattice), int_from_json(entry[1]));
    }
    DefaultGenusRule rule;
    const Json& rj = field(j, "default_rule");
    if (field(rj, "kind").get<std::string>() != "divisibility_linear")
        throw std::invalid_argument("unknown default genus rule kind");
    rule.slope = int_from_json(field(rj, "slope"));
    rule.offset = int_from_json(field(rj, "offset"));
    return GenusModel(std::move(lattice), std::move(table), rule);
}

namespace {

std::string kind_name(ClassSetKind k)
{
    return k == ClassSetKind::sw_basic ? "SW_basic" : "Stein_c1";
}

ClassSetKind kind_from_name(const std::string& name)
{
    if (name == "SW_basic") return ClassSetKind::sw_basic;
    if (name == "Stein_c1") return ClassSetKind::stein_c1;
    throw std::invalid_argument("unknown class_set_kind: " + name);
}

} // namespace

Json manifold_to_json(const ManifoldModel& m)
{
    Json out;
    out["lattice"] = lattice_to_json(m.lattice());
    out["b2_plus_gt_1"] = m.b2_plus_gt_1();
    out["simple_type"] = m.simple_type();
    out["closed"] = m.closed();
    out["b1_boundary"] = m.b1_boundary();
    out["class_set_kind"] = kind_name(m.class_set_kind());
    Json classes = Json::array();
    for (const auto& k : m.class_set()) classes.push_back(class_to_json(k));
    out["class_set"] = std::move(classes);
    out["label"] = m.label();
    out["degenerate"] = m.degenerate();
    return out;
}

ManifoldModel manifold_from_json(const Json& j)
{
    ManifoldModelData data;
    data.lattice = lattice_from_json(field(j, "lattice"));
    data.b2_plus_gt_1 = field(j, "b2_plus_gt_1").get<bool>();
    data.simple_type = field(j, "simple_type").get<bool>();
    data.closed = field(j, "closed").get<bool>();
    data.b1_boundary = field(j, "b1_boundary").get<long long>();
    data.class_set_kind = kind_from_name(field(j, "class_set_kind").get<std::string>());
    for (const auto& c : field(j, "class_set"))
        data.class_set.push_back(class_from_json(c, data.lattice));
    data.label = field(j, "label").get<std::string>();
    if (j.contains("degenerate")) data.degenerate = j["degenerate"].get<bool>();
    return ManifoldModel(std::move(data));
}

Json descriptor_to_json(const FamilyDescriptor& d)
{
    Json out;
    Json params;
    switch (d.kind()) {
    case FamilyDescriptor::Kind::elliptic: {
        const auto& p = std::get<EllipticParams>(d.params);
        out["kind"] = "elliptic";
        params["k"] = p.k;
        Json list = Json::array();
        for (const auto& [pp, qq] : p.pq_list) list.push_back(Json::array({pp, qq}));
        params["pq_list"] = std::move(list);
        break;
    }
    case FamilyDescriptor::Kind::knot_surgery: {
        const auto& p = std::get<KnotSurgeryParams>(d.params);
        out["kind"] = "knot_surgery";
        params["k"] = p.k;
        params["tori"] = p.tori;
        params["knots"] = p.knots;
        break;
    }
    case FamilyDescriptor::Kind::stein: {
        const auto& p = std::get<SteinParams>(d.params);
        out["kind"] = "stein";
        params["m"] = Json::array({p.m0, p.m1, p.m2});
        params["p_list"] = p.p_list;
        break;
    }
    case FamilyDescriptor::Kind::stein_bcs: {
        const auto& p = std::get<SteinBcsParams>(d.params);
        out["kind"] = "stein_bcs";
        params["m"] = Json::array({p.m0, p.m1, p.m2});
        params["n"] = p.n;
        params["p_list"] = p.p_list;
        break;
    }
    }
    out["parameters"] = std::move(params);
    out["index_range"] = d.index_range;
    return out;
}

FamilyDescriptor descriptor_from_json(const Json& j)
{
    FamilyDescriptor d;
    const std::string kind = field(j, "kind").get<std::string>();
    const Json& params = field(j, "parameters");
    if (kind == "elliptic") {
        EllipticParams p;
        p.k = field(params, "k").get<int>();
        for (const auto& pq : field(params, "pq_list"))
            p.pq_list.emplace_back(pq.at(0).get<int>(), pq.at(1).get<int>());
        d.params = std::move(p);
    } else if (kind == "knot_surgery") {
        KnotSurgeryParams p;
        p.k = field(params, "k").get<int>();
        p.tori = field(params, "tori").get<int>();
        p.knots = field(params, "knots").get<std::vector<std::string>>();
        d.params = std::move(p);
    } else if (kind == "stein" || kind == "stein_bcs") {
        const Json& m = field(params, "m");
        if (!m.is_array() || m.size() != 3)
            throw std::invalid_argument("stein parameter m must be a 3-tuple");
        if (kind == "stein") {
            SteinParams p;
            p.m0 = m[0].get<int>();
            p.m1 = m[1].get<int>();
            p.m2 = m[2].get<int>();
            p.p_list = field(params, "p_list").get<std::vector<long long>>();
            d.params = std::move(p);
        } else {
            SteinBcsParams p;
            p.m0 = m[0].get<int>();
            p.m1 = m[1].get<int>();
            p.m2 = m[2].get<int>();
            p.n = field(params, "n").get<int>();
            p.p_list = field(params, "p_list").get<std::vector<long long>>();
            d.params = std::move(p);
        }
    } else {
        throw std::invalid_argument("unknown family kind: " + kind);
    }
    if (j.contains("index_range"))
        d.index_range = j["index_range"].get<std::vector<int>>();
    return d;
}

Json family_to_json(const Family& f)
{
    Json out;
    out["descriptor"] = descriptor_to_json(f.descriptor);
    Json members = Json::array();
    for (const auto& m : f.members) members.push_back(manifold_to_json(m));
    out["members"] = std::move(members);
    return out;
}

Family family_from_json(const Json& j)
{
    Family f{descriptor_from_json(field(j, "descriptor")), {}};
    for (const auto& m : field(j, "members")) f.members.push_back(manifold_from_json(m));
    return f;
}

Json certificate_to_json(const NicetyCertificate& c)
{
    Json out;
    out["n"] = c.n;
    Json members = Json::array();
    for (const auto& d : c.per_member) {
        Json entry;
        entry["m"] = d.summands();
        Json classes = Json::array();
        for (const auto& k : d.classes) classes.push_back(class_to_json(k));
        entry["K"] = std::move(classes);
        entry["a"] = int_list_to_json(d.coefficients);
        members.push_back(std::move(entry));
    }
    out["per_member"] = std::move(members);
    out["verified"] = c.verified;
    out["failure_reason"] = c.failure_reason;
    return out;
}

NicetyCertificate certificate_from_json(const Json& j, const std::vector<Lattice>& lattices)
{
    NicetyCertificate c;
    c.n = field(j, "n").get<int>();
    const Json& members = field(j, "per_member");
    if (members.size() != lattices.size())
        throw std::invalid_argument("certificate member count does not match the family");
    for (std::size_t i = 0; i < members.size(); ++i) {
        const Json& entry = members[i];
        Decomposition d;
        for (const auto& k : field(entry, "K"))
            d.classes.push_back(class_from_json(k, lattices[i]));
        d.coefficients = int_list_from_json(field(entry, "a"));
        if (entry.contains("m") && entry["m"].get<std::size_t>() != d.classes.size())
            throw std::invalid_argument("certificate summand count disagrees with K");
        c.per_member.push_back(std::move(d));
    }
    if (j.contains("verified")) c.verified = j["verified"].get<bool>();
    if (j.contains("failure_reason")) c.failure_reason = j["failure_reason"].get<std::string>();
    return c;
}

NicetyCertificate certificate_from_json(const Json& j, const Lattice& lattice)
{
    std::vector<Lattice> lattices(field(j, "per_member").size(), lattice);
    return certificate_from_json(j, lattices);
}

Json obstruction_report_to_json(const ObstructionReport& r)
{
    Json out;
    switch (r.kind) {
    case ObstructionKind::twist: out["theorem"] = "twist"; break;
    case ObstructionKind::surgery: out["theorem"] = "surgery"; break;
    case ObstructionKind::embedding_varied: out["theorem"] = "embedding_varied"; break;
    }
    out["applies"] = r.applies;
    out["threshold_value"] = r.threshold_value;
    Json inputs;
    inputs["m"] = r.inputs.m;
    inputs["n"] = r.inputs.n;
    inputs["b2_X"] = r.inputs.b2_X;
    inputs["b2_W"] = r.inputs.b2_W;
    inputs["b1_dW"] = r.inputs.b1_dW;
    if (r.inputs.b2_complement) inputs["b2_complement"] = *r.inputs.b2_complement;
    out["inputs"] = std::move(inputs);
    out["narrative"] = r.narrative;
    return out;
}

} // namespace adjlab
