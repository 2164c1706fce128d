#include "awd/codes.hpp"

#include <set>
#include <stdexcept>

namespace awd {

namespace {

// Logical operators of one type: kernel of `opposite` modulo the row space
// of `same`. Returns exactly k independent representatives.
std::vector<BitVector> logical_operators(const SparseBitMatrix& opposite,
                                         const SparseBitMatrix& same) {
    const uint32_t n = opposite.n_cols();
    auto elim = eliminate(opposite);

    std::vector<bool> is_pivot(n, false);
    for (uint32_t c : elim.pivot_cols) is_pivot[c] = true;

    // Reduced rows R = T * opposite, needed for back-substitution of the
    // kernel basis.
    std::vector<BitVector> reduced;
    reduced.reserve(opposite.n_rows());
    for (uint32_t r = 0; r < opposite.n_rows(); ++r) {
        BitVector row(n);
        for (uint32_t rr : elim.transform[r].ones())
            for (uint32_t c : opposite.row(rr)) row.flip(c);
        reduced.push_back(std::move(row));
    }

    RowBasis basis(n);
    for (uint32_t r = 0; r < same.n_rows(); ++r) {
        BitVector row(n);
        for (uint32_t c : same.row(r)) row.set(c);
        basis.add_row(std::move(row));
    }

    std::vector<BitVector> logicals;
    for (uint32_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        BitVector v(n);
        v.set(c);
        for (std::size_t i = 0; i < elim.pivot_cols.size(); ++i)
            if (reduced[elim.pivot_rows[i]].get(c)) v.set(elim.pivot_cols[i]);
        if (basis.add_row(v)) logicals.push_back(std::move(v));
    }
    return logicals;
}

void check_css(CssCode& code) {
    // Hx Hz^T = 0
    for (uint32_t r = 0; r < code.hx.n_rows(); ++r) {
        BitVector row(code.n);
        for (uint32_t c : code.hx.row(r)) row.set(c);
        for (uint32_t rz = 0; rz < code.hz.n_rows(); ++rz) {
            BitVector zrow(code.n);
            for (uint32_t c : code.hz.row(rz)) zrow.set(c);
            if (row.dot_parity(zrow))
                throw std::logic_error("CSS commutation violated during code construction");
        }
    }
    const auto rx = gf2_rank(code.hx);
    const auto rz = gf2_rank(code.hz);
    code.k = code.n - static_cast<uint32_t>(rx) - static_cast<uint32_t>(rz);
}

}  // namespace

CssCode build_toric(uint32_t d) {
    if (d < 3) throw std::invalid_argument("build_toric: d must be >= 3");
    if (d % 2 == 0) throw std::invalid_argument("build_toric: d must be odd");

    const uint32_t n = 2 * d * d;
    // Edge layout: horizontal edge h(i,j) = i*d + j runs from vertex (i,j)
    // to (i,j+1); vertical edge v(i,j) = d*d + i*d + j runs from (i,j) to
    // (i+1,j). All arithmetic wraps mod d.
    auto h = [d](uint32_t i, uint32_t j) { return i * d + (j % d); };
    auto v = [d](uint32_t i, uint32_t j) { return d * d + (i % d) * d + (j % d); };

    CssCode code;
    code.n = n;
    code.d = d;
    code.hx = SparseBitMatrix(d * d, n);
    code.hz = SparseBitMatrix(d * d, n);

    for (uint32_t i = 0; i < d; ++i) {
        for (uint32_t j = 0; j < d; ++j) {
            const uint32_t check = i * d + j;
            // Vertex (i,j): incident edges.
            code.hx.add_entry(check, h(i, j));
            code.hx.add_entry(check, h(i, (j + d - 1) % d));
            code.hx.add_entry(check, v(i, j));
            code.hx.add_entry(check, v((i + d - 1) % d, j));
            // Plaquette with corners (i,j),(i,j+1),(i+1,j),(i+1,j+1).
            code.hz.add_entry(check, h(i, j));
            code.hz.add_entry(check, h((i + 1) % d, j));
            code.hz.add_entry(check, v(i, j));
            code.hz.add_entry(check, v(i, (j + 1) % d));
        }
    }

    // Non-contractible loops. Z_1 runs along horizontal edges of row 0,
    // Z_2 along vertical edges of column 0; X_1 crosses Z_1 (horizontal
    // edges of column 0), X_2 crosses Z_2 (vertical edges of row 0).
    BitVector z1(n), z2(n), x1(n), x2(n);
    for (uint32_t t = 0; t < d; ++t) {
        z1.set(h(0, t));
        z2.set(v(t, 0));
        x1.set(h(t, 0));
        x2.set(v(0, t));
    }
    code.logical_z = {std::move(z1), std::move(z2)};
    code.logical_x = {std::move(x1), std::move(x2)};

    check_css(code);
    if (code.k != 2) throw std::logic_error("build_toric: rank check gave k != 2");
    return code;
}

CssCode build_bb(uint32_t l, uint32_t m,
                 std::span<const std::pair<uint32_t, uint32_t>> a_terms,
                 std::span<const std::pair<uint32_t, uint32_t>> b_terms,
                 uint32_t declared_d) {
    if (l < 2 || m < 2) throw std::invalid_argument("build_bb: l and m must be >= 2");
    if (a_terms.empty() || b_terms.empty())
        throw std::invalid_argument("build_bb: term lists must be nonempty");

    const uint32_t lm = l * m;
    // Monomial x^a y^b maps group element (i,j) -> (i+a, j+b); repeated
    // monomials cancel mod 2.
    auto poly_entries = [&](std::span<const std::pair<uint32_t, uint32_t>> terms) {
        std::set<std::pair<uint32_t, uint32_t>> reduced;
        for (auto [a, b] : terms) {
            auto key = std::make_pair(a % l, b % m);
            if (!reduced.insert(key).second) reduced.erase(key);
        }
        if (reduced.empty())
            throw std::invalid_argument("build_bb: polynomial cancels to zero mod 2");
        return reduced;
    };
    const auto a_red = poly_entries(a_terms);
    const auto b_red = poly_entries(b_terms);

    CssCode code;
    code.n = 2 * lm;
    code.d = declared_d;
    code.hx = SparseBitMatrix(lm, code.n);
    code.hz = SparseBitMatrix(lm, code.n);

    for (uint32_t i = 0; i < l; ++i) {
        for (uint32_t j = 0; j < m; ++j) {
            const uint32_t g = i * m + j;
            for (auto [a, b] : a_red) {
                const uint32_t target = ((i + a) % l) * m + ((j + b) % m);
                code.hx.add_entry(g, target);        // A block
                code.hz.add_entry(target, lm + g);   // A^T block
            }
            for (auto [a, b] : b_red) {
                const uint32_t target = ((i + a) % l) * m + ((j + b) % m);
                code.hx.add_entry(g, lm + target);   // B block
                code.hz.add_entry(target, g);        // B^T block
            }
        }
    }

    check_css(code);
    code.logical_x = logical_operators(code.hz, code.hx);
    code.logical_z = logical_operators(code.hx, code.hz);
    if (code.logical_x.size() != code.k || code.logical_z.size() != code.k)
        throw std::logic_error("build_bb: logical operator count disagrees with rank-derived k");
    return code;
}

std::string to_string(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::Depolarizing: return "depolarizing";
        case NoiseKind::NeutralAtom: return "NA";
        case NoiseKind::SI100: return "SI100";
    }
    return "?";
}

NoiseKind noise_kind_from_string(const std::string& s) {
    if (s == "depolarizing") return NoiseKind::Depolarizing;
    if (s == "NA") return NoiseKind::NeutralAtom;
    if (s == "SI100") return NoiseKind::SI100;
    throw std::invalid_argument("unknown noise model kind: " + s);
}

EffectiveRates effective_rates(const NoiseModelSpec& spec) {
    if (!(spec.p >= 0.0 && spec.p < 0.5))
        throw std::invalid_argument("effective_rates: base rate must satisfy 0 <= p < 0.5");
    const double p = spec.p;
    switch (spec.kind) {
        case NoiseKind::Depolarizing:
            return {p, p};
        case NoiseKind::NeutralAtom:
            // two-qubit + idle on data; readout + wait (folded into idle) on
            // measurement.
            return {p + p / 10, p + p / 10};
        case NoiseKind::SI100:
            // two-qubit + idle + wait-for-meas on data; readout + reset on
            // measurement.
            return {p + p / 10 + 2 * p, 5 * p + 2 * p};
    }
    throw std::logic_error("effective_rates: unhandled noise kind");
}

}  // namespace awd
