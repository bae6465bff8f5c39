// adjlab: exact-arithmetic toolkit for genus invariants and cut-and-paste
// obstructions on algebraic models of smooth 4-manifolds.
//
// Exit codes are uniform across subcommands:
//   0  success / obstruction applies / certificate verified
//   1  negative determination (does not apply, not verified, family too small)
//   2  invalid input or resource limit

#include "adjlab/json_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace adjlab;

constexpr const char* kVersion = "0.1.0";
constexpr int kSchemaVersion = 1;

std::uint64_t work_limit_from_env()
{
    if (const char* env = std::getenv("ADJLAB_WORK_LIMIT")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("ADJLAB_WORK_LIMIT must be a positive integer");
    }
    return kDefaultWorkLimit;
}

Json load_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void emit(const Json& doc, const std::string& output_path)
{
    if (output_path.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream out(output_path);
        if (!out) throw std::invalid_argument("cannot write " + output_path);
        out << doc.dump(2) << "\n";
    }
}

class Timer {
public:
    long long elapsed_ms() const
    {
        auto dt = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json run_report(const std::string& command, Json inputs, Json outputs, const Timer& timer)
{
    Json report;
    report["command"] = command;
    report["inputs"] = std::move(inputs);
    report["outputs"] = std::move(outputs);
    report["timing_ms"] = timer.elapsed_ms();
    report["version"] = kVersion;
    report["schema_version"] = kSchemaVersion;
    return report;
}

std::vector<std::vector<HClass>> family_class_sets(const Family& family)
{
    std::vector<std::vector<HClass>> sets;
    sets.reserve(family.members.size());
    for (const auto& m : family.members) sets.push_back(m.class_set());
    return sets;
}

// ---------------------------------------------------------------- family

struct FamilyBuildArgs {
    std::string type;
    int k = 2;
    std::string pq_list;
    std::vector<int> m_tuple;
    int n = 1;
    int tori = 1;
    std::string knots;
    std::vector<long long> p_list;
    std::string output;
};

std::vector<std::pair<int, int>> parse_pq_list(const std::string& text)
{
    std::vector<std::pair<int, int>> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("--pq-list items look like p:q");
        out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("--pq-list is empty");
    return out;
}

std::vector<std::string> split_knots(const std::string& text)
{
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t sep = text.find(';', pos);
        std::string item = text.substr(pos, sep == std::string::npos ? sep : sep - pos);
        if (!item.empty()) out.push_back(item);
        if (sep == std::string::npos) break;
        pos = sep + 1;
    }
    return out;
}

int cmd_family_build(const FamilyBuildArgs& args)
{
    FamilyDescriptor desc;
    if (args.type == "elliptic") {
        desc.params = EllipticParams{args.k, parse_pq_list(args.pq_list)};
    } else if (args.type == "knot-surgery") {
        desc.params = KnotSurgeryParams{args.k, args.tori, split_knots(args.knots)};
    } else if (args.type == "stein" || args.type == "stein-bcs") {
        if (args.m_tuple.size() != 3)
            throw std::invalid_argument("--m takes three integers m0,m1,m2");
        if (args.p_list.empty()) throw std::invalid_argument("--p-list is empty");
        if (args.type == "stein")
            desc.params = SteinParams{args.m_tuple[0], args.m_tuple[1], args.m_tuple[2],
                                      args.p_list};
        else
            desc.params = SteinBcsParams{args.m_tuple[0], args.m_tuple[1], args.m_tuple[2],
                                         args.n, args.p_list};
    } else {
        throw std::invalid_argument("unknown family type: " + args.type);
    }

    Family family = build_family(std::move(desc));
    emit(family_to_json(family), args.output);

    std::cerr << "built " << family.members.size() << " member(s);";
    std::cerr << " b2:";
    for (const auto& m : family.members) std::cerr << " " << m.lattice().rank();
    std::cerr << "; class set sizes:";
    for (const auto& m : family.members) std::cerr << " " << m.class_set().size();
    std::cerr << "\n";
    return 0;
}

// ---------------------------------------------------------------- nicety

int cmd_nicety_check(const std::string& family_path, int n, const std::string& cert_path,
                     std::uint64_t search_limit, const std::string& output)
{
    Timer timer;
    Family family = family_from_json(load_json(family_path));
    auto sets = family_class_sets(family);

    NicetyCertificate cert;
    if (!cert_path.empty()) {
        std::vector<Lattice> lattices;
        for (const auto& m : family.members) lattices.push_back(m.lattice());
        cert = certificate_from_json(load_json(cert_path), lattices);
        cert.n = n;
        auto diag = verify_certificate(sets, cert);
        cert.verified = diag.ok;
        if (!diag.ok) cert.failure_reason = diag.message;
    } else {
        cert = infer_certificate(sets, InferOptions{n, search_limit});
    }

    Json inputs{{"family", family_path}, {"n", n}};
    if (!cert_path.empty()) inputs["certificate"] = cert_path;
    Json outputs;
    outputs["verified"] = cert.verified;
    outputs["certificate"] = certificate_to_json(cert);
    emit(run_report("nicety check", std::move(inputs), std::move(outputs), timer), output);
    return cert.verified ? 0 : 1;
}

// ---------------------------------------------------------------- genus

int cmd_genus_exact(const std::string& model_path, int n, int coeff_bound,
                    const std::string& output)
{
    Timer timer;
    GenusModel model = genus_model_from_json(load_json(model_path));
    Json inputs{{"model", model_path}, {"n", n}, {"coeff_bound", coeff_bound}};
    try {
        BoundedGenusResult res = bounded_n_genus(model, n, coeff_bound, work_limit_from_env());
        Json witness = Json::array();
        for (const auto& v : res.witness) witness.push_back(class_to_json(v));
        Json outputs;
        outputs["value"] = int_to_json(res.value);
        outputs["upper_bound_only"] = true;
        outputs["witness"] = std::move(witness);
        outputs["work_examined"] = res.work_examined;
        outputs["bases_checked"] = res.bases_checked;
        outputs["work_limit_hit"] = false;
        emit(run_report("genus exact", std::move(inputs), std::move(outputs), timer), output);
        return 0;
    } catch (const WorkLimitError& e) {
        Json outputs;
        outputs["error"] = e.what();
        outputs["work_examined"] = e.work_examined;
        outputs["work_limit_hit"] = true;
        emit(run_report("genus exact", std::move(inputs), std::move(outputs), timer), output);
        return 2;
    }
}

int cmd_genus_bound(const std::string& family_path, int n, std::uint64_t search_limit,
                    const std::string& output)
{
    Timer timer;
    Family family = family_from_json(load_json(family_path));
    NicetyCertificate cert = infer_certificate(family_class_sets(family),
                                               InferOptions{n, search_limit});
    Json inputs{{"family", family_path}, {"n", n}};
    Json outputs;
    outputs["certificate_verified"] = cert.verified;
    if (!cert.verified) {
        outputs["failure_reason"] = cert.failure_reason;
        emit(run_report("genus bound", std::move(inputs), std::move(outputs), timer), output);
        return 1;
    }
    auto bounds = family_divergence_bound(family.members, cert, n);
    Json blist = Json::array();
    for (std::size_t i = 0; i < bounds.size(); ++i)
        blist.push_back(Json{{"label", family.members[i].label()},
                             {"lower_bound", int_to_json(bounds[i])}});
    outputs["certificate"] = certificate_to_json(cert);
    outputs["lower_bounds"] = std::move(blist);
    emit(run_report("genus bound", std::move(inputs), std::move(outputs), timer), output);
    return 0;
}

// ---------------------------------------------------------------- obstruct

int emit_obstruction(const char* command, const ObstructionReport& report, Json inputs,
                     Json extras, const Timer& timer, const std::string& output)
{
    Json outputs = obstruction_report_to_json(report);
    for (auto& [key, value] : extras.items()) outputs[key] = value;
    emit(run_report(command, std::move(inputs), std::move(outputs), timer), output);
    return report.applies ? 0 : 1;
}

// ---------------------------------------------------------------- pipeline

int cmd_pipeline(const std::string& family_path, int n, std::vector<long long> b2w_grid,
                 std::vector<long long> b1bw_grid, std::uint64_t search_limit,
                 const std::string& output)
{
    Timer timer;
    Family family = family_from_json(load_json(family_path));
    Json inputs{{"family", family_path},
                {"n", n},
                {"b2w_grid", b2w_grid},
                {"b1bw_grid", b1bw_grid}};

    if (family.members.size() < 2) {
        Json outputs{{"error", "family too small for divergence"}};
        emit(run_report("pipeline", std::move(inputs), std::move(outputs), timer), output);
        return 1;
    }
    long long m = family.members[0].lattice().rank();
    for (const auto& member : family.members)
        if (member.lattice().rank() != m)
            throw std::invalid_argument("family members have unequal b2");

    NicetyCertificate cert = infer_certificate(family_class_sets(family),
                                               InferOptions{n, search_limit});
    Json outputs;
    outputs["m"] = m;
    outputs["certificate_verified"] = cert.verified;
    if (!cert.verified) {
        outputs["failure_reason"] = cert.failure_reason;
        emit(run_report("pipeline", std::move(inputs), std::move(outputs), timer), output);
        return 1;
    }
    outputs["certificate"] = certificate_to_json(cert);

    auto bounds = family_divergence_bound(family.members, cert, n);
    Json blist = Json::array();
    for (std::size_t i = 0; i < bounds.size(); ++i)
        blist.push_back(Json{{"label", family.members[i].label()},
                             {"lower_bound", int_to_json(bounds[i])}});
    outputs["lower_bounds"] = std::move(blist);

    // Obstruction grids ask whether this family's own smooth structures can
    // be generated from a manifold with the members' b2 (so b2(X) = m).
    Json twists = Json::array();
    for (long long b1 : b1bw_grid)
        twists.push_back(obstruction_report_to_json(twist_applies(n, b1)));
    Json surgeries = Json::array();
    Json embeddings = Json::array();
    for (long long b2w : b2w_grid)
        for (long long b1 : b1bw_grid) {
            surgeries.push_back(obstruction_report_to_json(surgery_applies(m, m, b2w, b1, n)));
            embeddings.push_back(obstruction_report_to_json(embedding_applies(m, n, b2w, b1)));
        }
    outputs["obstructions"] =
        Json{{"twist", std::move(twists)},
             {"surgery", std::move(surgeries)},
             {"embedding_varied", std::move(embeddings)},
             {"embedding_threshold", m - n}};

    emit(run_report("pipeline", std::move(inputs), std::move(outputs), timer), output);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"adjlab: adjunction genus bounds and cut-and-paste obstructions "
                 "on 4-manifold models"};
    app.require_subcommand(1);

    // family build
    auto* family = app.add_subcommand("family", "family constructors");
    family->require_subcommand(1);
    auto* build = family->add_subcommand("build", "construct a model family");
    FamilyBuildArgs fargs;
    build->add_option("--type", fargs.type, "elliptic|knot-surgery|stein|stein-bcs")
        ->required();
    build->add_option("--k", fargs.k, "elliptic index k");
    build->add_option("--pq-list", fargs.pq_list, "log-transform multiplicities, e.g. 2:3,3:4");
    build->add_option("--m", fargs.m_tuple, "stein parameters m0,m1,m2")->delimiter(',');
    build->add_option("--n", fargs.n, "number of boundary-connected summands");
    build->add_option("--tori", fargs.tori, "number of surgery tori");
    build->add_option("--knots", fargs.knots,
                      "semicolon-separated Alexander polynomials, e.g. \"t - 1 + t^-1\"");
    build->add_option("--p-list", fargs.p_list, "stein parameters p")->delimiter(',');
    build->add_option("--output", fargs.output, "write the family JSON here");

    // nicety check
    auto* nicety = app.add_subcommand("nicety", "inequivalence certificates");
    nicety->require_subcommand(1);
    auto* check = nicety->add_subcommand("check", "infer or verify a certificate");
    std::string nc_family, nc_cert, nc_output;
    int nc_n = 1;
    std::uint64_t nc_limit = 10000;
    check->add_option("family", nc_family, "family JSON file")->required();
    check->add_option("-n,--n", nc_n, "certificate order")->required();
    check->add_option("--cert", nc_cert, "verify this certificate instead of inferring");
    check->add_option("--search-limit", nc_limit, "decomposition search limit per member");
    check->add_option("--output", nc_output, "write the report here");

    // genus exact | bound
    auto* genus = app.add_subcommand("genus", "adjunction n-genus estimates");
    genus->require_subcommand(1);
    auto* exact = genus->add_subcommand(
        "exact", "bounded-basis minimum (an upper bound for the invariant)");
    std::string ge_model, ge_output;
    int ge_n = 1, ge_bound = 1;
    exact->add_option("model", ge_model, "genus model JSON file")->required();
    exact->add_option("-n,--n", ge_n, "which order statistic")->required();
    exact->add_option("-B,--coeff-bound", ge_bound, "coordinate bound for basis vectors")
        ->required();
    exact->add_option("--output", ge_output, "write the report here");

    auto* bound = genus->add_subcommand(
        "bound", "certificate-driven lower bounds for a family");
    std::string gb_family, gb_output;
    int gb_n = 1;
    std::uint64_t gb_limit = 10000;
    bound->add_option("family", gb_family, "family JSON file")->required();
    bound->add_option("-n,--n", gb_n, "divergence order")->required();
    bound->add_option("--search-limit", gb_limit, "decomposition search limit per member");
    bound->add_option("--output", gb_output, "write the report here");

    // obstruct twist|surgery|embedding
    auto* obstruct = app.add_subcommand("obstruct", "cut-and-paste obstruction tests");
    obstruct->require_subcommand(1);
    long long ob_m = 0, ob_n = 1, ob_b2x = 0, ob_b2w = 0, ob_b1bw = 0;
    long long ob_b2comp = -1;
    std::string ob_output;
    auto add_common = [&](CLI::App* sub, bool needs_m, bool needs_b2x) {
        if (needs_m) sub->add_option("--m", ob_m, "family members' b2")->required();
        sub->add_option("--n", ob_n, "divergence order")->required();
        if (needs_b2x) sub->add_option("--b2x", ob_b2x, "b2 of the ambient manifold")->required();
        sub->add_option("--b2w", ob_b2w, "b2 of the cut piece W");
        sub->add_option("--b1bw", ob_b1bw, "b1 of the boundary of W");
        sub->add_option("--b2comp", ob_b2comp, "b2 of the complement, when known");
        sub->add_option("--output", ob_output, "write the report here");
    };
    auto* ob_twist = obstruct->add_subcommand("twist", "fixed-embedding twist test");
    add_common(ob_twist, false, false);
    auto* ob_surgery = obstruct->add_subcommand("surgery", "surgery test");
    add_common(ob_surgery, true, true);
    auto* ob_embed = obstruct->add_subcommand("embedding", "varied-embedding twist test");
    add_common(ob_embed, true, false);

    // pipeline
    auto* pipeline = app.add_subcommand(
        "pipeline", "family -> certificate -> bounds -> obstruction grid");
    std::string pl_family, pl_output;
    int pl_n = 1;
    std::uint64_t pl_limit = 10000;
    std::vector<long long> pl_b2w{0}, pl_b1bw{0};
    pipeline->add_option("family", pl_family, "family JSON file")->required();
    pipeline->add_option("-n,--n", pl_n, "divergence order")->required();
    pipeline->add_option("--b2w", pl_b2w, "grid of b2(W) values")->delimiter(',');
    pipeline->add_option("--b1bw", pl_b1bw, "grid of b1(dW) values")->delimiter(',');
    pipeline->add_option("--search-limit", pl_limit, "decomposition search limit per member");
    pipeline->add_option("--output", pl_output, "write the report here");

    try {
        app.parse(argc, argv);

        if (build->parsed()) return cmd_family_build(fargs);
        if (check->parsed())
            return cmd_nicety_check(nc_family, nc_n, nc_cert, nc_limit, nc_output);
        if (exact->parsed()) return cmd_genus_exact(ge_model, ge_n, ge_bound, ge_output);
        if (bound->parsed()) return cmd_genus_bound(gb_family, gb_n, gb_limit, gb_output);
        if (ob_twist->parsed()) {
            Timer timer;
            Json extras{{"finiteness_least_n", twist_finiteness_threshold(ob_b1bw)}};
            return emit_obstruction("obstruct twist", twist_applies(ob_n, ob_b1bw),
                                    Json{{"n", ob_n}, {"b1bw", ob_b1bw}}, std::move(extras),
                                    timer, ob_output);
        }
        if (ob_surgery->parsed()) {
            Timer timer;
            auto report = surgery_applies(ob_m, ob_b2x, ob_b2w, ob_b1bw, ob_n);
            Json inputs{{"m", ob_m}, {"n", ob_n},       {"b2x", ob_b2x},
                        {"b2w", ob_b2w}, {"b1bw", ob_b1bw}};
            Json extras;
            if (ob_b2comp >= 0) {
                report.inputs.b2_complement = ob_b2comp;
                inputs["b2comp"] = ob_b2comp;
                if (!report.inputs.mv_consistent())
                    throw std::invalid_argument(
                        "b2(W) + b2(complement) < b2(X) - b1(dW): no such cut exists");
                auto fin = surgery_finiteness_threshold(ob_m, ob_b2comp, ob_b1bw);
                extras["finiteness"] = Json{{"least_n", fin.least_n},
                                            {"glued_rank_bound", fin.glued_rank_bound}};
            }
            return emit_obstruction("obstruct surgery", report, std::move(inputs),
                                    std::move(extras), timer, ob_output);
        }
        if (ob_embed->parsed()) {
            Timer timer;
            return emit_obstruction(
                "obstruct embedding", embedding_applies(ob_m, ob_n, ob_b2w, ob_b1bw),
                Json{{"m", ob_m}, {"n", ob_n}, {"b2w", ob_b2w}, {"b1bw", ob_b1bw}}, Json{},
                timer, ob_output);
        }
        if (pipeline->parsed())
            return cmd_pipeline(pl_family, pl_n, pl_b2w, pl_b1bw, pl_limit, pl_output);

        std::cerr << app.help();
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        Json err{{"error", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 2;
    }
}
