#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "formula.hpp"

namespace artgallery {

/// CNF clauses for membership in |k|, with every variable index shifted by `shift`.
inline std::vector<Clause> membership_cnf(const CubicalComplex& k, int shift) {
    CnfFormula m = dnf_to_minimal_cnf(complex_to_dnf(k));
    for (auto& cl : m.clauses)
        for (auto& l : cl) l.var += shift;
    return m.clauses;
}

/// Builds the constraint for R # R # ... # R (n copies) from a complex C realizing R.
/// Variable 0 is the tube coordinate x0; C's variables follow. Band b means k_b <= x0 <= k_{b+1}.
inline CnfFormula surface_formula(const CubicalComplex& c, const Face& f1, const Face& f2, int n,
                                  const std::vector<Rational>& constants) {
    validate_complex(c);
    if (n < 2) throw PreconditionError("surface_formula: genus must be at least 2");
    if (static_cast<int>(constants.size()) != n) throw PreconditionError("surface_formula: need n band constants");
    check_bands(constants);
    for (const Face* f : {&f1, &f2})
        if (!c.faces.count(*f) || f->dim() != 2) throw PreconditionError("surface_formula: " + f->str() + " is not a square of C");
    if (f1 == f2) throw PreconditionError("surface_formula: the two removed squares must differ");

    auto without = [&](const Face& f) {
        CubicalComplex k = c;
        k.faces.erase(f);
        validate_complex(k);
        return k;
    };
    auto membership = [](const CubicalComplex& k) { return membership_cnf(k, 1); };
    auto c1 = membership(without(f1));
    auto c2 = membership(without(f2));
    auto b1 = membership(CubicalComplex::generated_by(c.n, {f1}));
    auto b2 = membership(CubicalComplex::generated_by(c.n, {f2}));

    Clause odd_bands, even_bands;
    for (int b = 0; b + 1 < n; ++b) (b % 2 ? odd_bands : even_bands).push_back(Literal::band(b));
    const Literal at0 = Literal::eq(0, 0), at1 = Literal::eq(0, 1);

    CnfFormula out{c.n + 1, constants, {}};
    auto append = [&](const std::vector<Clause>& part, Clause extra) {
        for (Clause cl : part) {
            cl.insert(cl.end(), extra.begin(), extra.end());
            canonicalize(cl);
            out.clauses.push_back(std::move(cl));
        }
    };
    auto plus = [](Clause a, std::initializer_list<Literal> more) {
        a.insert(a.end(), more.begin(), more.end());
        return a;
    };
    if (n % 2 == 0) {
        append(c2, {at0, at1});
        append(c1, {});
        append(b1, plus(odd_bands, {at0, at1}));
        append(b2, even_bands);
    } else {
        append(c2, {at0});
        append(c1, {at1});
        append(b1, plus(odd_bands, {at0}));
        append(b2, plus(even_bands, {at1}));
    }
    return out;
}

/// Evenly spaced constants 0, 1/(n-1), ..., 1.
inline std::vector<Rational> uniform_constants(int n) {
    std::vector<Rational> k;
    for (int i = 0; i < n; ++i) k.push_back(make_rational(i, n - 1));
    return k;
}

/// Cell decomposition of a closed union of product cells, up to dimension two.
struct CellComplex2 {
    std::vector<std::vector<int>> vertex_codes;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::array<int, 4>> squares;  // corners in cyclic order

    int euler() const {
        return static_cast<int>(vertex_codes.size()) - static_cast<int>(edges.size()) +
               static_cast<int>(squares.size());
    }
};

namespace detail {

/// Each coordinate has K constants; cell code 2i is the point k_i, code 2i+1 the open interval after it.
inline CellComplex2 assemble_cells(const std::vector<std::vector<int>>& cells) {
    CellComplex2 cc;
    std::map<std::vector<int>, int> vid;
    auto dim_of = [](const std::vector<int>& code) {
        int d = 0;
        for (int v : code) d += v % 2;
        return d;
    };
    std::set<std::vector<int>> present(cells.begin(), cells.end());
    for (const auto& code : cells) {
        int d = dim_of(code);
        if (d > 2) throw TopologyError("solution set contains a " + std::to_string(d) + "-dimensional cell");
        if (d == 0) {
            vid.emplace(code, static_cast<int>(cc.vertex_codes.size()));
            cc.vertex_codes.push_back(code);
        }
    }
    auto vertex = [&](const std::vector<int>& code) {
        auto it = vid.find(code);
        if (it == vid.end()) throw TopologyError("solution set is not closed");
        return it->second;
    };
    for (const auto& code : cells) {
        std::vector<int> open;
        for (std::size_t i = 0; i < code.size(); ++i)
            if (code[i] % 2) open.push_back(static_cast<int>(i));
        if (open.size() == 1) {
            auto a = code, b = code;
            --a[open[0]];
            ++b[open[0]];
            cc.edges.push_back({vertex(a), vertex(b)});
        } else if (open.size() == 2) {
            auto corner = [&](int di, int dj) {
                auto v = code;
                v[open[0]] += di;
                v[open[1]] += dj;
                return vertex(v);
            };
            for (int s : {0, 1}) {
                auto side = code;
                side[open[s]] -= 1;
                if (!present.count(side)) throw TopologyError("solution set is not closed");
            }
            cc.squares.push_back({corner(-1, -1), corner(1, -1), corner(1, 1), corner(-1, 1)});
        }
    }
    return cc;
}

}  // namespace detail

/// Cell structure of a cubical complex's realization (faces become cells).
inline CellComplex2 cell_complex_of(const CubicalComplex& k) {
    validate_complex(k);
    std::vector<std::vector<int>> cells;
    for (const Face& f : k.faces) {
        std::vector<int> code;
        for (std::size_t i = 0; i < f.size(); ++i) code.push_back(f[i] == '0' ? 0 : f[i] == '*' ? 1 : 2);
        cells.push_back(std::move(code));
    }
    return detail::assemble_cells(cells);
}

/// Cell decomposition of a formula's solution set by products of face cells and x0 band cells.
inline CellComplex2 build_cell_complex(const CnfFormula& f) {
    validate_formula(f);
    std::vector<int> ks(f.n, 2);
    if (!f.bands.empty()) ks[0] = static_cast<int>(f.bands.size());
    auto literal_holds = [&](const Literal& l, const std::vector<int>& code) {
        if (l.kind == Literal::Kind::Band) return code[0] >= 2 * l.value && code[0] <= 2 * l.value + 2;
        int last = 2 * ks[l.var] - 2;
        return code[l.var] == (l.value == 0 ? 0 : last);
    };
    std::vector<std::vector<int>> cells;
    std::vector<int> code(f.n, 0);
    while (true) {
        bool ok = std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) {
            return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return literal_holds(l, code); });
        });
        if (ok) cells.push_back(code);
        int i = f.n - 1;
        for (; i >= 0; --i) {
            if (++code[i] <= 2 * ks[i] - 2) break;
            code[i] = 0;
        }
        if (i < 0) break;
    }
    if (cells.empty()) throw TopologyError("empty solution set");
    return detail::assemble_cells(cells);
}

struct SurfaceClass {
    bool closed = false;
    bool orientable = false;
    int euler = 0;
    int genus = -1;  // closed surfaces only
    int boundary_circles = 0;
};

inline std::string signed_text(int v) {
    return v < 0 ? "−" + std::to_string(-v) : std::to_string(v);
}

inline std::string describe(const SurfaceClass& s) {
    std::string chi = "(χ = " + signed_text(s.euler) + ")";
    std::string o = s.orientable ? "orientable" : "non-orientable";
    if (s.closed) return "closed " + o + " genus " + std::to_string(s.genus) + " " + chi;
    return o + " surface with " + std::to_string(s.boundary_circles) + " boundary circle" +
           (s.boundary_circles == 1 ? "" : "s") + " " + chi;
}

/// Checks the surface conditions and reports closedness, orientability, Euler characteristic and genus.
inline SurfaceClass classify_surface(const CellComplex2& c) {
    const int nv = static_cast<int>(c.vertex_codes.size());
    if (nv == 0 || c.squares.empty()) throw TopologyError("complex has no squares");
    auto key = [](int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; };
    std::map<std::pair<int, int>, int> eid;
    for (std::size_t e = 0; e < c.edges.size(); ++e) eid[key(c.edges[e][0], c.edges[e][1])] = static_cast<int>(e);

    std::vector<std::vector<std::pair<int, int>>> uses(c.edges.size());  // (square, direction)
    for (std::size_t s = 0; s < c.squares.size(); ++s)
        for (int k = 0; k < 4; ++k) {
            int a = c.squares[s][k], b = c.squares[s][(k + 1) % 4];
            auto it = eid.find(key(a, b));
            if (it == eid.end()) throw TopologyError("square side missing from the edge list");
            uses[it->second].push_back({static_cast<int>(s), a < b ? 1 : -1});
        }
    for (std::size_t e = 0; e < uses.size(); ++e) {
        if (uses[e].empty()) throw TopologyError("edge " + std::to_string(e) + " lies in no square");
        if (uses[e].size() > 2)
            throw TopologyError("edge " + std::to_string(e) + " lies in " + std::to_string(uses[e].size()) + " squares");
    }

    // Vertex links must be single cycles (interior) or single paths (boundary).
    std::vector<std::vector<int>> vertex_edges(nv);
    for (std::size_t e = 0; e < c.edges.size(); ++e)
        for (int v : c.edges[e]) vertex_edges[v].push_back(static_cast<int>(e));
    for (int v = 0; v < nv; ++v) {
        const auto& inc = vertex_edges[v];
        if (inc.empty()) throw TopologyError("isolated vertex " + std::to_string(v));
        std::map<int, int> local;
        for (std::size_t i = 0; i < inc.size(); ++i) local[inc[i]] = static_cast<int>(i);
        std::vector<int> parent(inc.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        std::vector<int> deg(inc.size(), 0);
        for (const auto& sq : c.squares)
            for (int k = 0; k < 4; ++k)
                if (sq[k] == v) {
                    int e1 = local.at(eid.at(key(v, sq[(k + 1) % 4])));
                    int e2 = local.at(eid.at(key(v, sq[(k + 3) % 4])));
                    ++deg[e1];
                    ++deg[e2];
                    parent[find(e1)] = find(e2);
                }
        int ends = 0;
        for (std::size_t i = 0; i < inc.size(); ++i) {
            if (deg[i] == 1) ++ends;
            if (find(static_cast<int>(i)) != find(0)) throw TopologyError("vertex " + std::to_string(v) + " is a pinch point");
        }
        if (ends != 0 && ends != 2) throw TopologyError("vertex " + std::to_string(v) + " has a singular link");
    }

    // Connectivity.
    std::vector<int> comp(nv);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> root = [&](int x) { return comp[x] == x ? x : comp[x] = root(comp[x]); };
    for (const auto& e : c.edges) comp[root(e[0])] = root(e[1]);
    for (int v = 0; v < nv; ++v)
        if (root(v) != root(0)) throw TopologyError("complex is disconnected");

    // Orientation propagation across shared edges.
    std::vector<int> orient_of(c.squares.size(), 0);
    bool orientable = true;
    std::vector<std::vector<std::pair<int, int>>> square_edges(c.squares.size());
    for (std::size_t e = 0; e < uses.size(); ++e)
        for (auto [s, d] : uses[e]) square_edges[s].push_back({static_cast<int>(e), d});
    std::queue<int> q;
    orient_of[0] = 1;
    q.push(0);
    while (!q.empty()) {
        int s = q.front();
        q.pop();
        for (auto [e, d] : square_edges[s])
            for (auto [t, dt] : uses[e]) {
                if (t == s) continue;
                int want = -orient_of[s] * d * dt;
                if (orient_of[t] == 0) {
                    orient_of[t] = want;
                    q.push(t);
                } else if (orient_of[t] != want) {
                    orientable = false;
                }
            }
    }

    // Boundary circles: components of the boundary-edge graph.
    std::vector<int> bparent(nv);
    std::iota(bparent.begin(), bparent.end(), 0);
    std::function<int(int)> broot = [&](int x) { return bparent[x] == x ? x : bparent[x] = broot(bparent[x]); };
    std::set<int> on_boundary;
    for (std::size_t e = 0; e < uses.size(); ++e)
        if (uses[e].size() == 1) {
            bparent[broot(c.edges[e][0])] = broot(c.edges[e][1]);
            on_boundary.insert(c.edges[e][0]);
            on_boundary.insert(c.edges[e][1]);
        }
    std::set<int> circles;
    for (int v : on_boundary) circles.insert(broot(v));

    SurfaceClass out;
    out.euler = c.euler();
    out.orientable = orientable;
    out.boundary_circles = static_cast<int>(circles.size());
    out.closed = circles.empty();
    if (out.closed) out.genus = orientable ? (2 - out.euler) / 2 : 2 - out.euler;
    return out;
}

}  // namespace artgallery
