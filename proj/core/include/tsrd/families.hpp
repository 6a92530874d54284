#pragma once

#include <optional>
#include <string>

#include "tsrd/graph.hpp"

namespace tsrd {

enum class FixedGraphId { F1, F2, F3, F4, F5, SK13 };

enum class ParamId { Gamma, GammaT, GammaR, GammaTR, GammaStR, GammaTStR };

const char* to_string(ParamId id);
std::optional<ParamId> parse_param(const std::string& name);

// Symbolic description of a named graph family plus construction arguments.
//
// Canonical vertex numbering of realize():
//   Path(n):          0-1-...-(n-1)
//   Cycle(n):         0-1-...-(n-1)-0
//   Star(n):          center 0, leaves 1..n-1 (order n)
//   DoubleStar(p,q):  centers 0 (p leaves) and 1 (q leaves), edge 0-1,
//                     leaves of 0 are 2..p+1, leaves of 1 are p+2..p+q+1
//   Corona(base):     base keeps ids 0..b-1, leaf of vertex i is b+i
//   SubdividedStar(k): center 0, middles 1..k, leaf of middle i is k+i
//   FamilyG(k1,k2):   4-cycle 0-1-2-3, then k1 pendant paths 0-x-y, then
//                     k2 pendant paths 1-x-y, ids assigned in that order
//   FamilyH(p,q,r):   centers 0 and 1, r subdividers 2..r+1 on the central
//                     path, then p pendant paths off 0, then q off 1, each
//                     as middle,leaf pairs
struct FamilySpec {
    enum class Kind { Path, Cycle, Star, DoubleStar, Corona, SubdividedStar, FamilyG, FamilyH, Fixed };

    Kind kind = Kind::Path;
    int a = 0;
    int b = 0;
    int c = 0;
    std::optional<Graph> base;  // Corona
    FixedGraphId fixed_id = FixedGraphId::F1;
    std::string text;  // display form

    static FamilySpec path(int n);
    static FamilySpec cycle(int n);
    static FamilySpec star(int order);
    static FamilySpec double_star(int p, int q);
    static FamilySpec corona(Graph base);
    static FamilySpec subdivided_star(int k);
    static FamilySpec family_g(int k1, int k2);
    static FamilySpec family_h(int p, int q, int r);
    static FamilySpec fixed(FixedGraphId id);

    // Textual form used by the CLI, e.g. "path:6", "dstar:2,2", "famG:1,0",
    // "famH:2,2,1", "subdivstar:3", "corona:cycle:3", "fixed:F3".
    static FamilySpec parse(const std::string& text);
};

Graph realize(const FamilySpec& spec);
Graph fixed_graph(FixedGraphId id);

// Proven closed-form parameter value for the family, when one exists.
int closed_form(const FamilySpec& spec, ParamId param);  // throws NoClosedForm
bool has_closed_form(const FamilySpec& spec, ParamId param);

}  // namespace tsrd
