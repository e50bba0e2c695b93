#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace artgallery {

/// A face of the cube [0,1]^n: one of '0', '1', '*' (free) per coordinate.
class Face {
public:
    Face() = default;
    explicit Face(std::string pattern) : s_(std::move(pattern)) {
        for (char c : s_)
            if (c != '0' && c != '1' && c != '*') throw PreconditionError("bad face pattern '" + s_ + "'");
    }

    const std::string& str() const { return s_; }
    std::size_t size() const { return s_.size(); }
    char operator[](std::size_t i) const { return s_[i]; }
    int dim() const { return static_cast<int>(std::count(s_.begin(), s_.end(), '*')); }

    /// Codimension-one faces obtained by fixing one free coordinate.
    std::vector<Face> facets() const {
        std::vector<Face> out;
        for (std::size_t i = 0; i < s_.size(); ++i)
            if (s_[i] == '*')
                for (char c : {'0', '1'}) {
                    std::string t = s_;
                    t[i] = c;
                    out.emplace_back(std::move(t));
                }
        return out;
    }

    /// Set containment of the realized faces.
    bool contains(const Face& o) const {
        for (std::size_t i = 0; i < s_.size(); ++i)
            if (s_[i] != '*' && s_[i] != o.s_[i]) return false;
        return true;
    }

    bool contains_point(const std::vector<Rational>& x) const {
        for (std::size_t i = 0; i < s_.size(); ++i) {
            if (s_[i] == '0' && x[i] != 0) return false;
            if (s_[i] == '1' && x[i] != 1) return false;
        }
        return true;
    }

    friend auto operator<=>(const Face&, const Face&) = default;

private:
    std::string s_;
};

/// Downward-closed set of faces of [0,1]^n.
struct CubicalComplex {
    int n = 0;
    std::set<Face> faces;

    /// Smallest complex containing the given faces.
    static CubicalComplex generated_by(int n, const std::vector<Face>& gens) {
        CubicalComplex k{n, {}};
        std::vector<Face> stack;
        for (const Face& f : gens) {
            if (static_cast<int>(f.size()) != n) throw PreconditionError("face dimension mismatch: " + f.str());
            stack.push_back(f);
        }
        while (!stack.empty()) {
            Face f = std::move(stack.back());
            stack.pop_back();
            if (!k.faces.insert(f).second) continue;
            for (Face& g : f.facets()) stack.push_back(std::move(g));
        }
        return k;
    }

    std::vector<Face> maximal_faces() const {
        std::vector<Face> out;
        for (const Face& f : faces) {
            bool maximal = true;
            for (const Face& g : faces)
                if (g != f && g.contains(f)) {
                    maximal = false;
                    break;
                }
            if (maximal) out.push_back(f);
        }
        return out;
    }

    bool contains_point(const std::vector<Rational>& x) const {
        for (const Face& f : faces)
            if (f.contains_point(x)) return true;
        return false;
    }

    int top_dimension() const {
        int d = -1;
        for (const Face& f : faces) d = std::max(d, f.dim());
        return d;
    }
};

inline const CubicalComplex& validate_complex(const CubicalComplex& k) {
    if (k.n <= 0) throw PreconditionError("complex dimension must be positive");
    for (const Face& f : k.faces) {
        if (static_cast<int>(f.size()) != k.n) throw PreconditionError("face dimension mismatch: " + f.str());
        for (const Face& g : f.facets())
            if (!k.faces.count(g))
                throw PreconditionError("complex not downward closed: missing " + g.str() + " below " + f.str());
    }
    return k;
}

/// x_var = value for Eq; band `value` on the first variable for Band.
struct Literal {
    enum class Kind { Eq, Band };
    Kind kind = Kind::Eq;
    int var = 0;
    int value = 0;

    static Literal eq(int var, int c) { return {Kind::Eq, var, c}; }
    static Literal band(int b) { return {Kind::Band, 0, b}; }

    friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

inline void canonicalize(Clause& c) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
}

/// Variables are printed 1-based.
inline std::string to_string(const Literal& l) {
    if (l.kind == Literal::Kind::Band) return "band" + std::to_string(l.value);
    return "x" + std::to_string(l.var + 1) + "=" + std::to_string(l.value);
}

inline std::string clause_string(const Clause& c, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? sep : "") + to_string(c[i]);
    return s;
}

struct DnfFormula {
    int n = 0;
    std::vector<Clause> clauses;  // conjunctions
};

struct CnfFormula {
    int n = 0;
    std::vector<Rational> bands;  // k_0 = 0 < ... < k_last = 1, or empty
    std::vector<Clause> clauses;  // disjunctions

    std::size_t literal_count() const {
        std::size_t s = 0;
        for (const auto& c : clauses) s += c.size();
        return s;
    }
    bool has_band_literals() const {
        for (const auto& c : clauses)
            for (const auto& l : c)
                if (l.kind == Literal::Kind::Band) return true;
        return false;
    }
};

inline void check_bands(const std::vector<Rational>& k) {
    if (k.empty()) return;
    if (k.size() < 2 || k.front() != 0 || k.back() != 1)
        throw PreconditionError("band constants must run from 0 to 1");
    for (std::size_t i = 0; i + 1 < k.size(); ++i)
        if (!(k[i] < k[i + 1])) throw PreconditionError("band constants must increase strictly");
}

inline void validate_formula(const CnfFormula& f) {
    if (f.n <= 0) throw PreconditionError("formula dimension must be positive");
    check_bands(f.bands);
    for (const auto& c : f.clauses) {
        if (c.empty()) throw PreconditionError("empty clause");
        for (const auto& l : c) {
            if (l.kind == Literal::Kind::Eq) {
                if (l.var < 0 || l.var >= f.n || (l.value != 0 && l.value != 1))
                    throw PreconditionError("bad literal " + to_string(l));
            } else if (f.bands.empty() || l.value < 0 || l.value + 1 >= static_cast<int>(f.bands.size())) {
                throw PreconditionError("band literal " + to_string(l) + " without matching constants");
            }
        }
    }
}

inline bool eval_literal(const Literal& l, const std::vector<Rational>& x, const std::vector<Rational>& bands) {
    if (l.kind == Literal::Kind::Eq) return x[l.var] == l.value;
    if (bands.empty()) throw PreconditionError("band literal evaluated without band constants");
    return bands[l.value] <= x[0] && x[0] <= bands[l.value + 1];
}

inline void check_point(int n, const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != n) throw PreconditionError("point dimension mismatch");
}

inline bool eval_formula(const CnfFormula& f, const std::vector<Rational>& x) {
    check_point(f.n, x);
    return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) {
        return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return eval_literal(l, x, f.bands); });
    });
}

inline bool eval_formula(const DnfFormula& f, const std::vector<Rational>& x) {
    check_point(f.n, x);
    static const std::vector<Rational> none;
    return std::any_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) {
        return std::all_of(c.begin(), c.end(), [&](const Literal& l) { return eval_literal(l, x, none); });
    });
}

inline DnfFormula complex_to_dnf(const CubicalComplex& k) {
    validate_complex(k);
    if (k.faces.empty()) throw PreconditionError("empty complex");
    DnfFormula d{k.n, {}};
    for (const Face& f : k.maximal_faces()) {
        Clause c;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i] != '*') c.push_back(Literal::eq(static_cast<int>(i), f[i] - '0'));
        d.clauses.push_back(std::move(c));
    }
    return d;
}

/// Full distribution: one clause per choice of a literal from every conjunction.
/// Literals repeated inside a clause collapse; repeated clauses are kept so the product count stays visible.
inline CnfFormula dnf_to_cnf(const DnfFormula& d, std::size_t max_clauses = std::size_t{1} << 22) {
    if (d.clauses.empty()) throw PreconditionError("empty DNF");
    std::size_t total = 1;
    for (const auto& c : d.clauses) {
        if (c.empty()) throw PreconditionError("DNF with an empty conjunction is a tautology");
        if (total > max_clauses / c.size()) throw BudgetError("DNF to CNF product too large");
        total *= c.size();
    }
    CnfFormula out{d.n, {}, {}};
    out.clauses.reserve(total);
    std::vector<std::size_t> pick(d.clauses.size(), 0);
    for (std::size_t r = 0; r < total; ++r) {
        Clause c;
        for (std::size_t j = 0; j < pick.size(); ++j) c.push_back(d.clauses[j][pick[j]]);
        canonicalize(c);
        out.clauses.push_back(std::move(c));
        for (std::size_t j = pick.size(); j-- > 0;) {
            if (++pick[j] < d.clauses[j].size()) break;
            pick[j] = 0;
        }
    }
    return out;
}

namespace detail {
inline bool subset_of(const Clause& a, const Clause& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Keeps, in first-occurrence order, the clauses not subsumed by another clause.
inline std::vector<Clause> minimal_clauses(std::vector<Clause> cs) {
    for (auto& c : cs) canonicalize(c);
    std::vector<Clause> uniq;
    std::set<Clause> seen;
    for (auto& c : cs)
        if (seen.insert(c).second) uniq.push_back(c);
    std::vector<Clause> out;
    for (std::size_t i = 0; i < uniq.size(); ++i) {
        bool subsumed = false;
        for (std::size_t j = 0; j < uniq.size() && !subsumed; ++j)
            subsumed = j != i && uniq[j].size() < uniq[i].size() && subset_of(uniq[j], uniq[i]);
        if (!subsumed) out.push_back(uniq[i]);
    }
    return out;
}
}  // namespace detail

/// Removes duplicate and subsumed clauses; literals are treated as opaque atoms.
inline CnfFormula simplify_cnf(const CnfFormula& c) {
    CnfFormula out = c;
    out.clauses = detail::minimal_clauses(c.clauses);
    return out;
}

/// The subsumption-minimal CNF of a DNF (its minimal hitting sets), built one conjunction at a time.
/// Equivalent to simplify_cnf(dnf_to_cnf(d)) without materializing the full product.
inline CnfFormula dnf_to_minimal_cnf(const DnfFormula& d) {
    if (d.clauses.empty()) throw PreconditionError("empty DNF");
    std::vector<Clause> acc{Clause{}};
    for (const Clause& conj : d.clauses) {
        if (conj.empty()) throw PreconditionError("DNF with an empty conjunction is a tautology");
        std::vector<Clause> next;
        for (const Clause& s : acc) {
            bool hit = std::any_of(conj.begin(), conj.end(),
                                   [&](const Literal& l) { return std::binary_search(s.begin(), s.end(), l); });
            if (hit) {
                next.push_back(s);
                continue;
            }
            for (const Literal& l : conj) {
                Clause t = s;
                t.push_back(l);
                canonicalize(t);
                next.push_back(std::move(t));
            }
        }
        acc = detail::minimal_clauses(std::move(next));
    }
    return CnfFormula{d.n, {}, std::move(acc)};
}

/// Coordinates at which every literal's truth value is constant between consecutive entries.
inline std::vector<std::vector<Rational>> test_grid_axes(int n, const std::vector<Rational>& bands) {
    std::vector<std::vector<Rational>> axes(n, {Rational(0), make_rational(1, 2), Rational(1)});
    if (!bands.empty() && n > 0) {
        std::vector<Rational> a;
        for (std::size_t i = 0; i < bands.size(); ++i) {
            a.push_back(bands[i]);
            if (i + 1 < bands.size()) a.push_back((bands[i] + bands[i + 1]) / 2);
        }
        axes[0] = std::move(a);
    }
    return axes;
}

inline void for_each_grid_point(int n, const std::vector<Rational>& bands,
                                const std::function<bool(const std::vector<Rational>&)>& fn) {
    auto axes = test_grid_axes(n, bands);
    std::vector<std::size_t> idx(n, 0);
    std::vector<Rational> x(n);
    while (true) {
        for (int i = 0; i < n; ++i) x[i] = axes[i][idx[i]];
        if (!fn(x)) return;
        int i = n - 1;
        for (; i >= 0; --i) {
            if (++idx[i] < axes[i].size()) break;
            idx[i] = 0;
        }
        if (i < 0) return;
    }
}

/// A grid point where f and g disagree; every literal is constant on the grid's cells, so none means equivalence.
template <class F, class G>
std::optional<std::vector<Rational>> separating_point(const F& f, const G& g, const std::vector<Rational>& bands = {}) {
    if (f.n != g.n) throw PreconditionError("formula dimension mismatch");
    std::optional<std::vector<Rational>> found;
    for_each_grid_point(f.n, bands, [&](const std::vector<Rational>& x) {
        if (eval_formula(f, x) != eval_formula(g, x)) {
            found = x;
            return false;
        }
        return true;
    });
    return found;
}

inline const std::vector<Rational>& bands_of(const CnfFormula& f) { return f.bands; }
inline const std::vector<Rational>& bands_of(const DnfFormula&) {
    static const std::vector<Rational> none;
    return none;
}

template <class F, class G>
bool cell_equivalent(const F& f, const G& g) {
    const auto& bf = bands_of(f);
    const auto& bg = bands_of(g);
    if (!bf.empty() && !bg.empty() && bf != bg) throw PreconditionError("band constants differ");
    return !separating_point(f, g, bf.empty() ? bg : bf).has_value();
}

/// Satisfiability on the test grid (exact, since truth values are constant on its cells).
inline bool satisfiable(const CnfFormula& f) {
    bool sat = false;
    for_each_grid_point(f.n, f.bands, [&](const std::vector<Rational>& x) {
        sat = eval_formula(f, x);
        return !sat;
    });
    return sat;
}

inline std::size_t grid_size(int n, const std::vector<Rational>& bands) {
    std::size_t s = 1;
    for (const auto& a : test_grid_axes(n, bands)) {
        if (s > (std::size_t{1} << 40) / a.size()) return std::size_t{1} << 40;
        s *= a.size();
    }
    return s;
}

}  // namespace artgallery
