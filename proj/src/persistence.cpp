#include "mdist/persistence.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mdist {

RUState RUState::reduce(const Presentation& q, std::span<const std::uint32_t> row_order,
                        std::span<const std::uint32_t> col_order) {
    const std::size_t m = q.num_generators();
    const std::size_t n = q.num_relations();
    if (row_order.size() != m || col_order.size() != n)
        throw std::invalid_argument("RUState::reduce: order sizes do not match the presentation");

    RUState st(q.prime);
    st.row_at_.assign(row_order.begin(), row_order.end());
    st.col_at_.assign(col_order.begin(), col_order.end());
    st.row_pos_.assign(m, 0);
    st.col_pos_.assign(n, 0);
    for (std::size_t i = 0; i < m; ++i) st.row_pos_[st.row_at_[i]] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 0; j < n; ++j) st.col_pos_[st.col_at_[j]] = static_cast<std::uint32_t>(j);

    st.r_.assign(n, std::vector<std::uint32_t>(m, 0));
    st.u_.assign(n, std::vector<std::uint32_t>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        for (const auto& e : q.columns[st.col_at_[j]]) st.r_[j][st.row_pos_[e.row]] = e.coeff;
        st.u_[j][j] = 1;
    }

    st.low_.assign(n, npos);
    st.pivot_col_.assign(m, npos);
    const auto& f = st.field_;
    for (std::size_t j = 0; j < n; ++j) {
        auto low = st.scan_pivot(j);
        while (low && st.pivot_col_[*low] != npos) {
            const std::size_t e = st.pivot_col_[*low];
            const auto c = f.neg(f.div(st.r_[j][*low], st.r_[e][*low]));
            st.add_column(e, j, c);
            low = st.scan_pivot(j);
        }
        if (low) {
            st.low_[j] = *low;
            st.pivot_col_[*low] = j;
        }
    }
    return st;
}

std::optional<std::size_t> RUState::scan_pivot(std::size_t col) const {
    const auto& c = r_[col];
    for (std::size_t i = c.size(); i-- > 0;)
        if (c[i] != 0) return i;
    return std::nullopt;
}

void RUState::refresh_pivot(std::size_t col) {
    const auto low = scan_pivot(col);
    low_[col] = low ? *low : npos;
}

void RUState::add_column(std::size_t src, std::size_t dst, std::uint32_t coeff) {
    if (coeff == 0) return;
    auto& d = r_[dst];
    const auto& s = r_[src];
    for (std::size_t i = 0; i < d.size(); ++i)
        if (s[i] != 0) d[i] = field_.add(d[i], field_.mul(coeff, s[i]));
    // R' = R E with E = I + c e_src e_dst^T, so U' = E^{-1} U: row src -= c * row dst.
    for (std::size_t c = dst; c < u_.size(); ++c)
        if (u_[c][dst] != 0) u_[c][src] = field_.sub(u_[c][src], field_.mul(coeff, u_[c][dst]));
}

std::optional<std::uint32_t> RUState::partner_of_generator(std::uint32_t generator) const {
    const auto col = pivot_col_[row_pos_[generator]];
    if (col == npos) return std::nullopt;
    return col_at_[col];
}

std::optional<std::uint32_t> RUState::partner_of_relation(std::uint32_t relation) const {
    const auto low = low_[col_pos_[relation]];
    if (low == npos) return std::nullopt;
    return row_at_[low];
}

namespace {

PairingDelta classify(std::vector<PairChange> changes) {
    std::erase_if(changes, [](const PairChange& c) { return c.before == c.after; });
    PairingDelta out;
    if (changes.empty()) return out;
    if (changes.size() == 2 && changes[0].before == changes[1].after && changes[0].after == changes[1].before)
        out.kind = DeltaKind::swap_partners;
    else
        out.kind = DeltaKind::reassign;
    out.changes = std::move(changes);
    return out;
}

}  // namespace

PairingDelta RUState::transpose(Axis axis, std::size_t pos) {
    return axis == Axis::rows ? transpose_rows(pos) : transpose_columns(pos);
}

PairingDelta RUState::transpose_rows(std::size_t i) {
    if (i + 1 >= row_at_.size()) throw std::out_of_range("transpose_rows: position out of range");
    const std::uint32_t g0 = row_at_[i];
    const std::uint32_t g1 = row_at_[i + 1];
    std::vector<PairChange> changes{{g0, partner_of_generator(g0), {}}, {g1, partner_of_generator(g1), {}}};

    const std::size_t a = pivot_col_[i + 1];
    const std::size_t b = pivot_col_[i];
    for (auto& col : r_) std::swap(col[i], col[i + 1]);
    std::swap(row_at_[i], row_at_[i + 1]);
    row_pos_[row_at_[i]] = static_cast<std::uint32_t>(i);
    row_pos_[row_at_[i + 1]] = static_cast<std::uint32_t>(i + 1);
    pivot_col_[i] = pivot_col_[i + 1] = npos;

    if (a != npos) refresh_pivot(a);
    if (b != npos) refresh_pivot(b);
    if (a != npos && b != npos && low_[a] == low_[b]) {
        const std::size_t early = std::min(a, b);
        const std::size_t late = std::max(a, b);
        const std::size_t l = low_[late];
        add_column(early, late, field_.neg(field_.div(r_[late][l], r_[early][l])));
        refresh_pivot(late);
    }
    for (const std::size_t c : {a, b})
        if (c != npos && low_[c] != npos) pivot_col_[low_[c]] = c;

    for (auto& ch : changes) ch.after = partner_of_generator(ch.generator);
    return classify(std::move(changes));
}

PairingDelta RUState::transpose_columns(std::size_t j) {
    if (j + 1 >= col_at_.size()) throw std::out_of_range("transpose_columns: position out of range");
    const std::size_t k = j + 1;
    std::vector<PairChange> changes;
    for (const std::size_t c : {j, k})
        if (low_[c] != npos) changes.push_back({row_at_[low_[c]], col_at_[c], {}});

    for (const std::size_t c : {j, k})
        if (low_[c] != npos) pivot_col_[low_[c]] = npos;
    if (const auto c = u_[k][j]; c != 0) {
        add_column(j, k, c);
        refresh_pivot(k);
    }
    std::swap(r_[j], r_[k]);
    std::swap(u_[j], u_[k]);
    for (auto& col : u_) std::swap(col[j], col[k]);
    std::swap(low_[j], low_[k]);
    std::swap(col_at_[j], col_at_[k]);
    col_pos_[col_at_[j]] = static_cast<std::uint32_t>(j);
    col_pos_[col_at_[k]] = static_cast<std::uint32_t>(k);

    if (low_[j] != npos && low_[j] == low_[k]) {
        const std::size_t l = low_[k];
        add_column(j, k, field_.neg(field_.div(r_[k][l], r_[j][l])));
        refresh_pivot(k);
    }
    for (const std::size_t c : {j, k})
        if (low_[c] != npos) {
            pivot_col_[low_[c]] = c;
            const std::uint32_t g = row_at_[low_[c]];
            if (std::none_of(changes.begin(), changes.end(), [&](const PairChange& ch) { return ch.generator == g; }))
                changes.push_back({g, std::nullopt, {}});
        }
    for (auto& ch : changes) ch.after = partner_of_generator(ch.generator);
    return classify(std::move(changes));
}

bool RUState::is_reduced() const {
    std::vector<std::size_t> seen(row_at_.size(), npos);
    for (std::size_t c = 0; c < r_.size(); ++c) {
        const auto low = scan_pivot(c);
        const std::size_t l = low ? *low : npos;
        if (l != low_[c]) return false;
        if (l == npos) continue;
        if (seen[l] != npos) return false;
        seen[l] = c;
    }
    return seen == pivot_col_;
}

bool RUState::u_is_unit_upper() const {
    for (std::size_t c = 0; c < u_.size(); ++c)
        for (std::size_t r = 0; r < u_.size(); ++r) {
            const auto v = u_[c][r];
            if (r == c ? v != 1 : (r > c && v != 0)) return false;
        }
    return true;
}

bool RUState::reproduces(const Presentation& q) const {
    const std::size_t m = row_at_.size();
    const std::size_t n = col_at_.size();
    if (q.num_generators() != m || q.num_relations() != n) return false;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::uint32_t> col(m, 0);
        for (std::size_t k = 0; k <= c; ++k) {
            const auto u = u_[c][k];
            if (u == 0) continue;
            for (std::size_t i = 0; i < m; ++i)
                if (r_[k][i] != 0) col[i] = field_.add(col[i], field_.mul(r_[k][i], u));
        }
        std::vector<std::uint32_t> want(m, 0);
        for (const auto& e : q.columns[col_at_[c]]) want[row_pos_[e.row]] = e.coeff;
        if (col != want) return false;
    }
    return true;
}

std::string RUState::dump() const {
    std::ostringstream out;
    out << "rows:";
    for (const auto g : row_at_) out << ' ' << g;
    out << "\ncols:";
    for (const auto c : col_at_) out << ' ' << c;
    out << "\nR:\n";
    for (std::size_t i = 0; i < row_at_.size(); ++i) {
        for (std::size_t c = 0; c < col_at_.size(); ++c) out << (c ? " " : "  ") << r_[c][i];
        out << '\n';
    }
    out << "U:\n";
    for (std::size_t i = 0; i < col_at_.size(); ++i) {
        for (std::size_t c = 0; c < col_at_.size(); ++c) out << (c ? " " : "  ") << u_[c][i];
        out << '\n';
    }
    out << "low:";
    for (const auto l : low_) {
        if (l == npos)
            out << " -";
        else
            out << ' ' << l;
    }
    out << '\n';
    return out.str();
}

BarcodePairing barcode_pairing(const RUState& ru, std::span<const Rational> generator_push,
                               std::span<const Rational> relation_push) {
    BarcodePairing bp;
    bp.pairs.reserve(ru.num_rows());
    for (std::uint32_t g = 0; g < ru.num_rows(); ++g) {
        BarcodePair pair{g, ru.partner_of_generator(g), false};
        if (pair.relation) pair.empty = generator_push[g] == relation_push[*pair.relation];
        bp.pairs.push_back(pair);
    }
    return bp;
}

std::vector<Interval> barcode(const BarcodePairing& bp, std::span<const Rational> generator_push,
                              std::span<const Rational> relation_push) {
    std::vector<Interval> out;
    for (const auto& p : bp.pairs) {
        if (p.empty) continue;
        out.push_back({generator_push[p.generator],
                       p.relation ? ExtRational(relation_push[*p.relation]) : ExtRational::infinity()});
    }
    std::sort(out.begin(), out.end());
    return out;
}

PushedGrades pushed_grades(const Presentation& q, const DualPoint& s) {
    PushedGrades out;
    out.generators.reserve(q.num_generators());
    out.relations.reserve(q.num_relations());
    for (const auto& g : q.generators) out.generators.push_back(push(s, g));
    for (const auto& r : q.relations) out.relations.push_back(push(s, r));
    return out;
}

std::vector<Interval> slice_barcode(const Presentation& q, const DualPoint& s) {
    const auto ordered = induced_ordered_presentation(q, s);
    const auto ru = RUState::reduce(q, ordered);
    const auto pushed = pushed_grades(q, s);
    return barcode(barcode_pairing(ru, pushed.generators, pushed.relations), pushed.generators, pushed.relations);
}

}  // namespace mdist
