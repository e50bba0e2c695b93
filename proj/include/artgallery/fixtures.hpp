#pragma once

#include <string>
#include <vector>

#include "formula.hpp"

namespace artgallery::fixtures {

inline CubicalComplex from_patterns(int n, const std::vector<std::string>& patterns) {
    std::vector<Face> gens;
    for (const auto& p : patterns) gens.emplace_back(p);
    return CubicalComplex::generated_by(n, gens);
}

/// Boundary of the unit square.
inline CubicalComplex circle() { return from_patterns(2, {"0*", "1*", "*0", "*1"}); }

/// Six squares in I^4 glued into a Moebius strip; x4 = 0 is the outer shell.
inline CubicalComplex mobius() {
    return from_patterns(4, {"*0*0", "0**0", "0*1*", "**11", "*0*1", "*00*"});
}

/// The simplified Moebius CNF with clause sizes 3, 3, 3, 4, 4.
inline CnfFormula mobius_cnf() {
    auto e = [](int i, int c) { return Literal::eq(i - 1, c); };
    CnfFormula f{4, {}, {
        {e(1, 0), e(2, 0), e(3, 1)},
        {e(2, 0), e(3, 1), e(4, 0)},
        {e(1, 0), e(2, 0), e(4, 1)},
        {e(3, 0), e(3, 1), e(4, 0), e(4, 1)},
        {e(1, 0), e(3, 0), e(4, 0), e(4, 1)},
    }};
    for (auto& c : f.clauses) canonicalize(c);
    return f;
}

/// Torus as the product of two square boundaries in I^4 (16 squares).
inline CubicalComplex torus() {
    const std::vector<std::string> ring{"0*", "1*", "*0", "*1"};
    std::vector<std::string> faces;
    for (const auto& a : ring)
        for (const auto& b : ring) faces.push_back(a + b);
    return from_patterns(4, faces);
}

/// Real projective plane as 20 squares in I^5.
inline CubicalComplex projective_plane() {
    return from_patterns(5, {"**010", "**111", "*0*01", "*1*11", "*00*1", "*01*1", "*001*",
                             "*101*", "0**11", "1**11", "1*0*0", "1*0*1", "0*01*", "1*00*",
                             "00**1", "10**0", "10*0*", "10*1*", "101**", "110**"});
}

/// Two disjoint squares removed to form the connected-sum tube ends.
inline std::pair<Face, Face> torus_discs() { return {Face("0*0*"), Face("0*1*")}; }
inline std::pair<Face, Face> projective_plane_discs() { return {Face("**010"), Face("**111")}; }

}  // namespace artgallery::fixtures
