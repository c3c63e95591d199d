#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdist/rational.hpp"

namespace mdist {

/// A point of the parameter plane R^2.
struct Grade {
    Rational x;
    Rational y;

    friend bool operator==(const Grade&, const Grade&) = default;
};

/// Componentwise order on R^2.
inline bool leq(const Grade& p, const Grade& q) { return p.x <= q.x && p.y <= q.y; }
/// Least upper bound of two grades.
inline Grade join(const Grade& p, const Grade& q) { return {max(p.x, q.x), max(p.y, q.y)}; }

struct Entry {
    std::uint32_t row;
    std::uint32_t coeff;  // nonzero residue mod p

    friend bool operator==(const Entry&, const Entry&) = default;
};

/// Column of the presentation matrix, sorted by row.
using SparseColumn = std::vector<Entry>;

/// A graded matrix over F_p: rows are generators, columns are relations.
///
/// Element ids are dense integers; by convention generators are numbered
/// before relations in file order. They only need to be unique.
struct Presentation {
    std::uint32_t prime = 2;
    std::vector<Grade> generators;
    std::vector<Grade> relations;
    std::vector<SparseColumn> columns;
    std::vector<std::uint32_t> generator_ids;
    std::vector<std::uint32_t> relation_ids;

    [[nodiscard]] std::size_t num_generators() const { return generators.size(); }
    [[nodiscard]] std::size_t num_relations() const { return relations.size(); }
    [[nodiscard]] std::size_t size() const { return generators.size() + relations.size(); }
    [[nodiscard]] bool is_zero_module() const { return generators.empty(); }

    /// Coefficient at (row, col), zero when absent.
    [[nodiscard]] std::uint32_t coeff(std::size_t row, std::size_t col) const;

    friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Builds a presentation with default ids 0..m-1 for generators and
/// m..m+m'-1 for relations. Entries are reduced mod p, zeros dropped and
/// rows sorted; the result is validated.
Presentation make_presentation(std::uint32_t prime, std::vector<Grade> generators, std::vector<Grade> relations,
                               const std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>>& columns);

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws ValidationError describing the first violated invariant.
void validate(const Presentation& q);

/// `out[i][j] = q[sigma[i]][tau[j]]`; indexing tuples permuted accordingly.
Presentation permute(const Presentation& q, const std::vector<std::uint32_t>& sigma,
                     const std::vector<std::uint32_t>& tau);

/// Exchanges the x and y coordinate of every grade.
Presentation swap_coordinates(const Presentation& q);

}  // namespace mdist
