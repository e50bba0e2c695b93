#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "formula.hpp"
#include "gallery.hpp"
#include "verifier.hpp"

namespace artgallery {

// Line-oriented text formats. Each file starts with "artgallery-<kind> 1" and ends with "end".
// Blank lines and lines starting with '#' are ignored. Rationals are written "num/den".

namespace detail {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

class LineReader {
public:
    explicit LineReader(std::string_view text) {
        std::istringstream in{std::string(text)};
        std::string raw;
        int n = 0;
        while (std::getline(in, raw)) {
            ++n;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            std::istringstream ls(raw);
            Line l{n, {}};
            for (std::string t; ls >> t;) l.tokens.push_back(t);
            if (l.tokens.empty() || l.tokens[0][0] == '#') continue;
            lines_.push_back(std::move(l));
        }
    }

    bool done() const { return pos_ >= lines_.size(); }
    const Line& peek() const {
        if (done()) throw ParseError("unexpected end of input");
        return lines_[pos_];
    }
    const Line& next() {
        const Line& l = peek();
        ++pos_;
        return l;
    }

    /// Consumes a line whose first token is key and which has exactly `count` further tokens (-1: any).
    const Line& expect(const std::string& key, int count) {
        const Line& l = next();
        if (l.tokens[0] != key) fail(l, "expected '" + key + "'");
        if (count >= 0 && static_cast<int>(l.tokens.size()) != count + 1) fail(l, "wrong number of fields for '" + key + "'");
        return l;
    }

    void header(const std::string& kind) {
        const Line& l = next();
        if (l.tokens.size() != 2 || l.tokens[0] != "artgallery-" + kind) fail(l, "expected header 'artgallery-" + kind + " 1'");
        if (l.tokens[1] != "1") fail(l, "unsupported format version " + l.tokens[1]);
    }

    void finish() {
        expect("end", 0);
        if (!done()) fail(peek(), "content after 'end'");
    }

    [[noreturn]] static void fail(const Line& l, const std::string& what) {
        throw ParseError("line " + std::to_string(l.number) + ": " + what);
    }

private:
    std::vector<Line> lines_;
    std::size_t pos_ = 0;
};

inline Rational field_rational(const Line& l, std::size_t i) {
    try {
        return parse_rational(l.tokens.at(i));
    } catch (const std::exception& e) {
        LineReader::fail(l, std::string("bad rational: ") + e.what());
    }
}

inline int field_int(const Line& l, std::size_t i) {
    const std::string& t = l.tokens.at(i);
    try {
        std::size_t used = 0;
        int v = std::stoi(t, &used);
        if (used != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        LineReader::fail(l, "bad integer '" + t + "'");
    }
}

inline Literal parse_literal(const Line& l, const std::string& t) {
    if (t.rfind("band", 0) == 0) {
        Line tmp{l.number, {t.substr(4)}};
        return Literal::band(field_int(tmp, 0));
    }
    auto eq = t.find('=');
    if (t.size() < 4 || t[0] != 'x' || eq == std::string::npos) LineReader::fail(l, "bad literal '" + t + "'");
    Line tmp{l.number, {t.substr(1, eq - 1), t.substr(eq + 1)}};
    int var = field_int(tmp, 0), value = field_int(tmp, 1);
    if (var < 1 || (value != 0 && value != 1)) LineReader::fail(l, "bad literal '" + t + "'");
    return Literal::eq(var - 1, value);
}

/// dimension, optional bands, clause lines; stops at the first other key.
inline CnfFormula read_formula_body(LineReader& r) {
    CnfFormula f;
    const Line& d = r.expect("dimension", 1);
    f.n = field_int(d, 1);
    if (!r.done() && r.peek().tokens[0] == "bands") {
        const Line& b = r.next();
        for (std::size_t i = 1; i < b.tokens.size(); ++i) f.bands.push_back(field_rational(b, i));
    }
    while (!r.done() && r.peek().tokens[0] == "clause") {
        const Line& c = r.next();
        if (c.tokens.size() < 2) LineReader::fail(c, "empty clause");
        Clause cl;
        for (std::size_t i = 1; i < c.tokens.size(); ++i) cl.push_back(parse_literal(c, c.tokens[i]));
        f.clauses.push_back(std::move(cl));
    }
    try {
        validate_formula(f);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
    return f;
}

inline void write_formula_body(std::ostream& o, const CnfFormula& f) {
    o << "dimension " << f.n << "\n";
    if (!f.bands.empty()) {
        o << "bands";
        for (const auto& b : f.bands) o << " " << to_string(b);
        o << "\n";
    }
    for (const auto& c : f.clauses) o << "clause " << clause_string(c, " ") << "\n";
}

inline std::string point_fields(const Point& p) { return to_string(p.x) + " " + to_string(p.y); }

}  // namespace detail

inline std::string write_complex(const CubicalComplex& k) {
    std::ostringstream o;
    o << "artgallery-complex 1\n";
    o << "dimension " << k.n << "\n";
    for (const Face& f : k.maximal_faces()) o << "face " << f.str() << "\n";
    o << "end\n";
    return o.str();
}

inline CubicalComplex read_complex(std::string_view text) {
    detail::LineReader r(text);
    r.header("complex");
    const auto& d = r.expect("dimension", 1);
    int n = detail::field_int(d, 1);
    if (n <= 0) detail::LineReader::fail(d, "dimension must be positive");
    std::vector<Face> gens;
    while (!r.done() && r.peek().tokens[0] == "face") {
        const auto& l = r.expect("face", 1);
        try {
            gens.emplace_back(l.tokens[1]);
        } catch (const PreconditionError& e) {
            detail::LineReader::fail(l, e.what());
        }
    }
    r.finish();
    try {
        return validate_complex(CubicalComplex::generated_by(n, gens));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

inline std::string write_cnf(const CnfFormula& f) {
    std::ostringstream o;
    o << "artgallery-cnf 1\n";
    detail::write_formula_body(o, f);
    o << "end\n";
    return o.str();
}

inline CnfFormula read_cnf(std::string_view text) {
    detail::LineReader r(text);
    r.header("cnf");
    auto f = detail::read_formula_body(r);
    r.finish();
    return f;
}

/// Reads either a complex or a CNF file, chosen by the header line.
inline std::variant<CubicalComplex, CnfFormula> read_input(std::string_view text) {
    detail::LineReader r(text);
    const auto& h = r.peek();
    if (h.tokens[0] == "artgallery-complex") return read_complex(text);
    if (h.tokens[0] == "artgallery-cnf") return read_cnf(text);
    detail::LineReader::fail(h, "expected a complex or cnf header");
}

inline std::string write_gallery(const Gallery& g) {
    std::ostringstream o;
    o << "artgallery-gallery 1\n";
    o << "epsilon " << to_string(g.epsilon) << "\n";
    if (g.surface)
        o << "source surface " << g.surface->genus << " " << (g.surface->orientable ? "orientable" : "nonorientable") << "\n";
    else
        o << "source formula\n";
    detail::write_formula_body(o, g.formula);
    o << "k " << g.k() << "\n";
    o << "vertex_count " << vertex_count(g) << "\n";
    for (const Point& p : g.polygon.vertices()) o << "vertex " << detail::point_fields(p) << "\n";
    for (const auto& s : g.guard_segments)
        o << "segment clause " << s.clause + 1 << " position " << s.position + 1 << " var " << s.var + 1 << " literal "
          << to_string(s.literal) << " from " << detail::point_fields(s.segment.a) << " to "
          << detail::point_fields(s.segment.b) << " designation " << designation(s) << "\n";
    for (const auto& c : g.clause_regions) {
        o << "region clause " << c.clause + 1 << " witness " << detail::point_fields(c.witness) << " points";
        for (const Point& p : c.region) o << " " << detail::point_fields(p);
        o << "\n";
    }
    for (const auto& n : g.notes) o << "note " << n << "\n";
    o << "end\n";
    return o.str();
}

/// Parses a gallery file, rebuilds it from its source and checks every recorded value against the rebuild.
inline Gallery read_gallery(std::string_view text) {
    detail::LineReader r(text);
    r.header("gallery");
    Rational eps = detail::field_rational(r.expect("epsilon", 1), 1);
    if (!(eps > 0)) throw ParseError("epsilon must be positive");
    const auto& src = r.expect("source", -1);
    std::optional<SurfaceSource> surface;
    if (src.tokens.size() == 4 && src.tokens[1] == "surface") {
        if (src.tokens[3] != "orientable" && src.tokens[3] != "nonorientable") detail::LineReader::fail(src, "bad orientability");
        surface = SurfaceSource{detail::field_int(src, 2), src.tokens[3] == "orientable"};
    } else if (!(src.tokens.size() == 2 && src.tokens[1] == "formula")) {
        detail::LineReader::fail(src, "bad source line");
    }
    CnfFormula f = detail::read_formula_body(r);

    Gallery g;
    try {
        g = surface ? compile_surface(surface->genus, surface->orientable, eps) : compile(f, eps);
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("gallery source rejected: ") + e.what());
    }
    std::string expected = write_gallery(g);
    std::string given;
    {
        // Canonical re-serialization of the parsed lines for a byte comparison.
        detail::LineReader all(text);
        std::ostringstream o;
        while (!all.done()) {
            const auto& l = all.next();
            for (std::size_t i = 0; i < l.tokens.size(); ++i) o << (i ? " " : "") << l.tokens[i];
            o << "\n";
        }
        given = o.str();
    }
    if (given != expected) {
        std::istringstream a(given), b(expected);
        std::string la, lb;
        int n = 1;
        while (std::getline(a, la) && std::getline(b, lb) && la == lb) ++n;
        throw ParseError("gallery file differs from its rebuild at record " + std::to_string(n) + ": '" + la + "'");
    }
    return g;
}

inline std::string write_report(const SampleReport& r) { return report_text(r); }

}  // namespace artgallery
