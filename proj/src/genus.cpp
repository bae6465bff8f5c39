#include "adjlab/genus.hpp"

#include <algorithm>
#include <map>

namespace adjlab {

GenusModel::GenusModel(Lattice lattice, std::vector<std::pair<HClass, Int>> table,
                       DefaultGenusRule default_rule)
    : lattice_(std::move(lattice)), default_rule_(default_rule)
{
    if (default_rule_.slope < 0 || default_rule_.offset < 0)
        throw std::invalid_argument("default genus rule must be non-negative");
    std::map<HClass, Int> canonical;
    for (auto& [v, g] : table) {
        if (!lattice_.contains(v))
            throw std::invalid_argument("genus table class does not belong to the lattice");
        if (g < 0) throw std::invalid_argument("genus values must be non-negative");
        if (v.is_zero() && g != 0)
            throw std::invalid_argument("genus of the zero class must be 0");
        HClass rep = lattice_.canonical_rep(v);
        auto [it, inserted] = canonical.emplace(std::move(rep), g);
        if (!inserted && it->second != g)
            throw std::invalid_argument("genus table assigns conflicting values to v and -v");
    }
    table_.assign(canonical.begin(), canonical.end());
}

Int GenusModel::genus(const HClass& v) const
{
    if (!lattice_.contains(v))
        throw std::invalid_argument("genus: class does not belong to the lattice");
    if (v.is_zero()) return 0;
    HClass rep = lattice_.canonical_rep(v);
    auto it = std::lower_bound(table_.begin(), table_.end(), rep,
                               [](const auto& entry, const HClass& key) {
                                   return entry.first < key;
                               });
    if (it != table_.end() && it->first == rep) return it->second;
    return default_rule_.slope * divisibility(v) + default_rule_.offset;
}

ManifoldModel::ManifoldModel(ManifoldModelData data) : data_(std::move(data))
{
    if (data_.b1_boundary < 0)
        throw std::invalid_argument("b1 of the boundary must be non-negative");
    if (data_.closed && data_.b1_boundary != 0)
        throw std::invalid_argument("a closed model has no boundary: b1_boundary must be 0");
    if (data_.class_set_kind == ClassSetKind::sw_basic) {
        if (!data_.closed || !data_.b2_plus_gt_1)
            throw std::invalid_argument(
                "a basic-class set requires a closed model with b2+ > 1");
    } else {
        if (data_.closed)
            throw std::invalid_argument("a Stein class set requires a model with boundary");
    }
    for (const auto& k : data_.class_set)
        if (!data_.lattice.contains(k))
            throw std::invalid_argument("class set member does not belong to the lattice");
    // Negation closure, then canonical order for deterministic serialization.
    std::vector<HClass> closed_set = data_.class_set;
    for (const auto& k : data_.class_set) closed_set.push_back(data_.lattice.negate(k));
    std::sort(closed_set.begin(), closed_set.end());
    closed_set.erase(std::unique(closed_set.begin(), closed_set.end()), closed_set.end());
    std::sort(data_.class_set.begin(), data_.class_set.end());
    data_.class_set.erase(std::unique(data_.class_set.begin(), data_.class_set.end()),
                          data_.class_set.end());
    if (closed_set != data_.class_set)
        throw std::invalid_argument("class set must be closed under negation");
}

Int adjunction_genus(const GenusModel& model, const HClass& v)
{
    return 2 * model.genus(v) - model.lattice().pair(v, v);
}

Int nth_largest_adjunction(const GenusModel& model, std::span<const HClass> basis, int n)
{
    if (n < 1) throw std::invalid_argument("nth_largest_adjunction needs n >= 1");
    if (!model.lattice().is_rational_basis(basis))
        throw std::invalid_argument("nth_largest_adjunction: not a rational basis");
    if (n > model.lattice().rank()) return 0;
    std::vector<Int> values;
    values.reserve(basis.size());
    for (const auto& v : basis) values.push_back(adjunction_genus(model, v));
    std::sort(values.begin(), values.end(), std::greater<Int>());
    return values[static_cast<std::size_t>(n) - 1];
}

namespace {

// Incremental fraction-free elimination for pruning dependent partial
// tuples: rows are kept in echelon form; a vector reducing to zero is in
// the span of the current tuple.
class EchelonSpan {
public:
    // Returns true (and records the reduced row) if v enlarges the span.
    bool push(const std::vector<Int>& v)
    {
        std::vector<Int> row = v;
        for (const auto& [col, pivot_row] : pivots_) {
            const Int lead = row[col];
            if (lead == 0) continue;
            const Int& pivot = pivot_row[col];
            for (std::size_t j = 0; j < row.size(); ++j)
                row[j] = row[j] * pivot - lead * pivot_row[j];
        }
        std::size_t col = 0;
        while (col < row.size() && row[col] == 0) ++col;
        if (col == row.size()) return false;
        pivots_.emplace_back(col, std::move(row));
        return true;
    }
    void pop() { pivots_.pop_back(); }

private:
    std::vector<std::pair<std::size_t, std::vector<Int>>> pivots_;
};

struct Enumerator {
    Enumerator(const GenusModel& model_, int n_, std::uint64_t work_limit_)
        : model(model_), n(n_), work_limit(work_limit_) {}

    const GenusModel& model;
    int n;
    std::uint64_t work_limit;
    std::uint64_t work = 0;
    std::uint64_t bases = 0;

    std::vector<HClass> candidates;
    std::vector<Int> values; // adjunction genus per candidate

    bool have_best = false;
    Int best;
    std::vector<std::size_t> best_tuple;

    std::vector<std::size_t> tuple;
    std::vector<Int> partial_sorted; // descending adjunction values of the tuple
    EchelonSpan span;

    void charge(std::uint64_t amount)
    {
        work += amount;
        if (work > work_limit)
            throw WorkLimitError("bounded_n_genus: work limit exceeded after " +
                                     std::to_string(work) + " steps",
                                 work);
    }

    // n-th largest of the current partial values; only meaningful once the
    // tuple holds at least n vectors.
    const Int& partial_nth() const { return partial_sorted[static_cast<std::size_t>(n) - 1]; }

    void dfs(std::size_t next)
    {
        const int rank = model.lattice().rank();
        if (tuple.size() == static_cast<std::size_t>(rank)) {
            ++bases;
            const Int& value = partial_nth();
            if (!have_best || value < best) {
                have_best = true;
                best = value;
                best_tuple = tuple;
            }
            return;
        }
        for (std::size_t i = next; i < candidates.size(); ++i) {
            charge(1);
            if (!span.push(candidates[i].coords)) continue; // rank-deficient
            auto pos = std::lower_bound(partial_sorted.begin(), partial_sorted.end(),
                                        values[i], std::greater<Int>());
            partial_sorted.insert(pos, values[i]);
            tuple.push_back(i);
            // Once n values are on board their n-th largest can only grow;
            // prune tuples that cannot beat the incumbent.
            bool viable = tuple.size() < static_cast<std::size_t>(n) || !have_best ||
                          partial_nth() < best;
            if (viable) dfs(i + 1);
            tuple.pop_back();
            partial_sorted.erase(std::find(partial_sorted.begin(), partial_sorted.end(),
                                           values[i]));
            span.pop();
        }
    }
};

} // namespace

BoundedGenusResult bounded_n_genus(const GenusModel& model, int n, int coeff_bound,
                                   std::uint64_t work_limit)
{
    if (n < 0) throw std::invalid_argument("bounded_n_genus needs n >= 0");
    if (coeff_bound < 1) throw std::invalid_argument("bounded_n_genus needs coeff_bound >= 1");
    const int rank = model.lattice().rank();
    BoundedGenusResult out{Int(0), {}, 0, 0};
    if (n == 0 || n > rank) return out;

    // Candidate generation can itself blow the budget; check the box size first.
    Int box = 1;
    for (int i = 0; i < rank; ++i) box *= 2 * coeff_bound + 1;
    if (box > Int(work_limit))
        throw WorkLimitError("bounded_n_genus: candidate box of size " + box.str() +
                                 " exceeds the work limit",
                             0);

    Enumerator en(model, n, work_limit);
    std::vector<Int> coords(rank, Int(-coeff_bound));
    for (;;) {
        en.charge(1);
        int lead = 0;
        while (lead < rank && coords[lead] == 0) ++lead;
        // keep one representative of {v, -v}: first nonzero coordinate > 0
        if (lead < rank && coords[lead] > 0) {
            HClass v = model.lattice().make_class(coords);
            en.values.push_back(adjunction_genus(model, v));
            en.candidates.push_back(std::move(v));
        }
        int i = rank - 1;
        while (i >= 0 && coords[i] == coeff_bound) coords[i--] = -coeff_bound;
        if (i < 0) break;
        ++coords[i];
    }

    en.dfs(0);
    out.work_examined = en.work;
    out.bases_checked = en.bases;
    if (!en.have_best)
        throw std::logic_error("bounded_n_genus: no rational basis in a nonempty box");
    out.value = en.best;
    for (std::size_t idx : en.best_tuple) out.witness.push_back(en.candidates[idx]);
    return out;
}

Int sw_adjunction_lower_bound(const ManifoldModel& model, const HClass& alpha)
{
    if (!model.lattice().contains(alpha))
        throw std::invalid_argument("sw_adjunction_lower_bound: class outside the lattice");
    if (alpha.is_zero())
        throw std::invalid_argument("sw_adjunction_lower_bound needs a non-zero class");
    const Int q = model.lattice().pair(alpha, alpha);
    Int best = 0;
    for (const auto& k : model.class_set()) {
        const Int s = abs_int(model.lattice().pair(k, alpha));
        Int bound;
        if (q >= 0) {
            bound = s + 2;
        } else if (model.simple_type()) {
            // From s + q <= max{2g - 2, 0}: genus 0 forces the adjunction
            // genus to be exactly -q and is only possible when s <= -q.
            bound = (s > -q) ? Int(s + 2) : std::min(Int(s + 2), Int(-q));
        } else {
            bound = 0; // inequality not applicable without simple type
        }
        best = std::max(best, bound);
    }
    return best;
}

std::vector<Int> family_divergence_bound(const std::vector<ManifoldModel>& family,
                                         const NicetyCertificate& cert, int n)
{
    if (n < 1) throw std::invalid_argument("family_divergence_bound needs n >= 1");
    if (cert.n != n)
        throw std::invalid_argument("certificate order does not match the requested n");
    std::vector<std::vector<HClass>> sets;
    sets.reserve(family.size());
    for (const auto& m : family) sets.push_back(m.class_set());
    auto diag = verify_certificate(sets, cert);
    if (!diag.ok)
        throw std::invalid_argument("certificate does not verify for this family: " +
                                    diag.message);
    std::vector<Int> bounds;
    bounds.reserve(cert.per_member.size());
    for (const auto& d : cert.per_member) {
        Int m = d.coefficients[0];
        for (int j = 1; j < n; ++j) m = std::min(m, d.coefficients[j]);
        bounds.push_back(m);
    }
    return bounds;
}

DivisibilityCheck divisibility_distinct_check(const std::vector<ManifoldModel>& family)
{
    if (family.empty())
        throw std::invalid_argument("divisibility_distinct_check needs a non-empty family");
    DivisibilityCheck out;
    for (const auto& m : family) {
        if (m.class_set_kind() != ClassSetKind::stein_c1)
            throw std::invalid_argument("divisibility check applies to Stein class sets");
        if (m.class_set().empty())
            throw std::invalid_argument("member '" + m.label() + "' has an empty class set");
        Int d = 0;
        for (const auto& k : m.class_set()) d = std::max(d, divisibility(k));
        out.divisibilities.push_back(d);
    }
    std::vector<Int> sorted = out.divisibilities;
    std::sort(sorted.begin(), sorted.end());
    out.distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    return out;
}

} // namespace adjlab
