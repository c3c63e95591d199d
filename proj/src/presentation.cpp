#include "mdist/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "mdist/field.hpp"

namespace mdist {

std::uint32_t Presentation::coeff(std::size_t row, std::size_t col) const {
    const auto& c = columns.at(col);
    const auto it = std::lower_bound(c.begin(), c.end(), row,
                                     [](const Entry& e, std::size_t r) { return e.row < r; });
    return (it != c.end() && it->row == row) ? it->coeff : 0;
}

Presentation make_presentation(std::uint32_t prime, std::vector<Grade> generators, std::vector<Grade> relations,
                               const std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>>& columns) {
    const PrimeField field(prime);
    Presentation q;
    q.prime = prime;
    q.generators = std::move(generators);
    q.relations = std::move(relations);
    q.generator_ids.resize(q.generators.size());
    std::iota(q.generator_ids.begin(), q.generator_ids.end(), 0U);
    q.relation_ids.resize(q.relations.size());
    std::iota(q.relation_ids.begin(), q.relation_ids.end(), static_cast<std::uint32_t>(q.generators.size()));
    for (const auto& col : columns) {
        SparseColumn c;
        for (const auto& [row, value] : col) {
            const auto r = field.reduce(value);
            if (r != 0) c.push_back({row, r});
        }
        std::sort(c.begin(), c.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
        q.columns.push_back(std::move(c));
    }
    validate(q);
    return q;
}

void validate(const Presentation& q) {
    if (!PrimeField::is_prime(q.prime))
        throw ValidationError("field characteristic " + std::to_string(q.prime) + " is not prime");
    if (q.columns.size() != q.relations.size())
        throw ValidationError("matrix has " + std::to_string(q.columns.size()) + " columns but there are " +
                              std::to_string(q.relations.size()) + " relations");
    if (q.generator_ids.size() != q.generators.size() || q.relation_ids.size() != q.relations.size())
        throw ValidationError("id list length does not match generator/relation count");

    std::set<std::uint32_t> seen;
    for (const auto id : q.generator_ids)
        if (!seen.insert(id).second) throw ValidationError("duplicate id " + std::to_string(id));
    for (const auto id : q.relation_ids)
        if (!seen.insert(id).second) throw ValidationError("duplicate id " + std::to_string(id));

    for (std::size_t j = 0; j < q.columns.size(); ++j) {
        const auto& col = q.columns[j];
        for (std::size_t k = 0; k < col.size(); ++k) {
            const auto& e = col[k];
            if (e.row >= q.generators.size())
                throw ValidationError("entry (" + std::to_string(e.row) + ", " + std::to_string(j) +
                                      ") refers to a missing generator");
            if (e.coeff == 0 || e.coeff >= q.prime)
                throw ValidationError("entry (" + std::to_string(e.row) + ", " + std::to_string(j) +
                                      ") is not a nonzero residue");
            if (k > 0 && col[k - 1].row >= e.row)
                throw ValidationError("column " + std::to_string(j) + " is not sorted by row");
            if (!leq(q.generators[e.row], q.relations[j])) {
                std::ostringstream msg;
                msg << "grade condition violated at (" << e.row << ", " << j << "): generator grade ("
                    << q.generators[e.row].x << ", " << q.generators[e.row].y << ") is not <= relation grade ("
                    << q.relations[j].x << ", " << q.relations[j].y << ")";
                throw ValidationError(msg.str());
            }
        }
    }
}

namespace {

std::vector<std::uint32_t> inverse_of(const std::vector<std::uint32_t>& perm, std::size_t n, const char* what) {
    if (perm.size() != n) throw std::invalid_argument(std::string(what) + " permutation has wrong length");
    std::vector<std::uint32_t> inv(n, static_cast<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (perm[i] >= n || inv[perm[i]] != n)
            throw std::invalid_argument(std::string(what) + " permutation is not a bijection");
        inv[perm[i]] = static_cast<std::uint32_t>(i);
    }
    return inv;
}

}  // namespace

Presentation permute(const Presentation& q, const std::vector<std::uint32_t>& sigma,
                     const std::vector<std::uint32_t>& tau) {
    const auto sigma_inv = inverse_of(sigma, q.generators.size(), "row");
    inverse_of(tau, q.relations.size(), "column");

    Presentation out;
    out.prime = q.prime;
    for (const auto i : sigma) {
        out.generators.push_back(q.generators[i]);
        out.generator_ids.push_back(q.generator_ids[i]);
    }
    for (const auto j : tau) {
        out.relations.push_back(q.relations[j]);
        out.relation_ids.push_back(q.relation_ids[j]);
        SparseColumn col;
        for (const auto& e : q.columns[j]) col.push_back({sigma_inv[e.row], e.coeff});
        std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
        out.columns.push_back(std::move(col));
    }
    return out;
}

Presentation swap_coordinates(const Presentation& q) {
    Presentation out = q;
    for (auto& g : out.generators) std::swap(g.x, g.y);
    for (auto& r : out.relations) std::swap(r.x, r.y);
    return out;
}

}  // namespace mdist
