#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "hlg/folding.hpp"

namespace hlg {

/// Letter k > 0 is unbarred k, −k is k̄. Alphabet order 1 < … < n < n̄ < … < 1̄.
using Column = std::vector<int>;

struct Tableau {
    Family family = Family::A;
    int rank = 1;
    /// C_1 (rightmost) first.
    std::vector<Column> columns;

    friend bool operator==(const Tableau& a, const Tableau& b) {
        return a.family == b.family && a.rank == b.rank && a.columns == b.columns;
    }
};

inline int letter_order(const Tableau& t, int letter) { return letter > 0 ? letter : 2 * t.rank + 1 + letter; }

/// A column of the tableau occupies either a whole fundamental block or one half of it.
struct TableauBlock {
    int fundamental_index = 1;
    std::size_t first_column = 0;
    bool paired = false;
};

/// p_λ for λ = Σ a_i ω_i.
inline std::vector<std::int64_t> shape_partition(const RootSystem& rs, const std::vector<std::int64_t>& a) {
    const int n = rs.rank();
    if (a.size() != static_cast<std::size_t>(n)) throw DomainError("shape_partition: wrong number of coefficients");
    std::vector<std::int64_t> p(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            std::int64_t mult = 1;
            if (rs.family() == Family::B && j < n - 1) mult = 2;
            if (rs.family() == Family::C && j >= 1) mult = 2;
            p[i] += mult * a[j];
        }
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

namespace detail {

inline bool is_pair_index(Family f, int rank, int i) {
    if (f == Family::A) return false;
    if (f == Family::B) return i < rank;
    return i > 1;
}

/// Entries of u must be 0 or ±1.
inline Column column_of_unit_vector(const RootSystem& rs, const RootVec& u) {
    Column c;
    for (std::size_t j = 0; j < u.size(); ++j) {
        const int letter = static_cast<int>(j) + 1;
        if (u[j] == Rat(1)) c.push_back(letter);
        else if (u[j] == Rat(-1) && rs.family() != Family::A) c.push_back(-letter);
        else if (u[j].numerator() != 0) throw DomainError("direction is not a column weight: " + u.str());
    }
    Tableau tmp{rs.family(), rs.rank(), {}};
    std::sort(c.begin(), c.end(), [&](int x, int y) { return letter_order(tmp, x) < letter_order(tmp, y); });
    return c;
}

inline RootVec unit_vector_of_column(const RootSystem& rs, const Column& c) {
    RootVec u(rs.dim());
    for (int l : c) {
        const int j = (l > 0 ? l : -l) - 1;
        if (j < 0 || j >= rs.dim() || (l < 0 && rs.family() == Family::A))
            throw DomainError("letter out of alphabet: " + std::to_string(l));
        if (u[static_cast<std::size_t>(j)].numerator() != 0) throw DomainError("repeated index in column");
        u[static_cast<std::size_t>(j)] = Rat(l > 0 ? 1 : -1);
    }
    return u;
}

/// Scale turning a column's ±1-vector into τ(ω_i).
inline Rat column_scale(const RootSystem& rs, int i) {
    return (rs.family() == Family::B && i == rs.rank()) ? Rat(1, 2) : Rat(1);
}

}  // namespace detail

/// Splits the columns into fundamental blocks; heights must follow Bourbaki order.
inline std::vector<TableauBlock> tableau_blocks(const RootSystem& rs, const Tableau& t) {
    if (t.family != rs.family() || t.rank != rs.rank()) throw DomainError("tableau: root system mismatch");
    std::vector<TableauBlock> out;
    int last = 0;
    for (std::size_t k = 0; k < t.columns.size();) {
        const int h = static_cast<int>(t.columns[k].size());
        if (h < 1 || h > rs.rank()) throw DomainError("tableau: column height out of range");
        if (h < last) throw DomainError("tableau: column heights are not in Bourbaki order");
        last = h;
        TableauBlock b{h, k, detail::is_pair_index(rs.family(), rs.rank(), h)};
        if (b.paired) {
            if (k + 1 >= t.columns.size() || t.columns[k + 1].size() != t.columns[k].size())
                throw DomainError("tableau: unpaired column of height " + std::to_string(h));
            k += 2;
        } else {
            k += 1;
        }
        out.push_back(b);
    }
    return out;
}

inline Tableau gallery_to_tableau(const RootSystem& rs, const Gallery& g) {
    Tableau t{rs.family(), rs.rank(), {}};
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        const EdgeType& et = g.gtype.edges[k];
        const Rat s = et.segment == Segment::Whole ? Rat(1) / detail::column_scale(rs, et.fundamental_index) : Rat(2);
        t.columns.push_back(detail::column_of_unit_vector(rs, s * g.direction(k)));
    }
    return t;
}

/// Rebuilds the gallery; every edge must be an admissible choice at its vertex.
inline Gallery tableau_to_gallery(const RootSystem& rs, const Tableau& t) {
    Gallery g = empty_gallery(rs);
    for (const auto& b : tableau_blocks(rs, t)) {
        const Column& c0 = t.columns[b.first_column];
        if (std::adjacent_find(c0.begin(), c0.end(), [&](int x, int y) {
                return letter_order(t, x) >= letter_order(t, y);
            }) != c0.end())
            throw DomainError("tableau: column is not strictly increasing");
        if (!b.paired) {
            RootVec d = detail::column_scale(rs, b.fundamental_index) * detail::unit_vector_of_column(rs, c0);
            push_edge(g, EdgeType{b.fundamental_index, Segment::Whole}, d);
            continue;
        }
        const Column& c1 = t.columns[b.first_column + 1];
        if (std::adjacent_find(c1.begin(), c1.end(), [&](int x, int y) {
                return letter_order(t, x) >= letter_order(t, y);
            }) != c1.end())
            throw DomainError("tableau: column is not strictly increasing");
        RootVec d0 = Rat(1, 2) * detail::unit_vector_of_column(rs, c0);
        RootVec d1 = Rat(1, 2) * detail::unit_vector_of_column(rs, c1);
        push_edge(g, EdgeType{b.fundamental_index, Segment::FirstHalf}, d0);
        const Vertex& mid = g.vertices.back();
        auto orbit = local_root_system(rs, mid).orbit(d0);
        if (!std::binary_search(orbit.begin(), orbit.end(), d1))
            throw DomainError("tableau: column pair violates the sign-change rule");
        push_edge(g, EdgeType{b.fundamental_index, Segment::SecondHalf}, d1);
    }
    return g;
}

inline bool is_valid_tableau(const RootSystem& rs, const Tableau& t) {
    try {
        tableau_to_gallery(rs, t);
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

/// Rows weakly increase from left to right (C_{k+1} is left of C_k).
inline bool is_semistandard(const Tableau& t) {
    for (std::size_t k = 0; k + 1 < t.columns.size(); ++k) {
        const Column& right = t.columns[k];
        const Column& left = t.columns[k + 1];
        const std::size_t h = std::min(left.size(), right.size());
        for (std::size_t r = 0; r < h; ++r)
            if (letter_order(t, left[r]) > letter_order(t, right[r])) return false;
    }
    return true;
}

/// Weight read off the columns; equals the target of the corresponding gallery.
inline RootVec tableau_content(const RootSystem& rs, const Tableau& t) {
    RootVec w(rs.dim());
    for (const auto& b : tableau_blocks(rs, t)) {
        if (b.paired) {
            w += Rat(1, 2) * detail::unit_vector_of_column(rs, t.columns[b.first_column]);
            w += Rat(1, 2) * detail::unit_vector_of_column(rs, t.columns[b.first_column + 1]);
        } else {
            w += detail::column_scale(rs, b.fundamental_index) *
                 detail::unit_vector_of_column(rs, t.columns[b.first_column]);
        }
    }
    return w;
}

/// Row lengths of the column layout.
inline std::vector<std::int64_t> tableau_shape(const Tableau& t) {
    std::vector<std::int64_t> rows;
    for (const auto& c : t.columns) {
        if (rows.size() < c.size()) rows.resize(c.size(), 0);
        for (std::size_t r = 0; r < c.size(); ++r) ++rows[r];
    }
    return rows;
}

inline std::string letter_string(int l) {
    return l > 0 ? std::to_string(l) : std::to_string(-l) + "̄";
}

/// Rows top to bottom, columns left to right.
inline std::string pretty(const Tableau& t) {
    std::ostringstream os;
    const auto rows = tableau_shape(t);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        bool first = true;
        for (std::size_t k = t.columns.size(); k-- > 0;) {
            if (t.columns[k].size() <= r) continue;
            const int l = t.columns[k][r];
            os << (first ? "" : " ") << (l > 0 ? " " : "") << letter_string(l);
            first = false;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace hlg
