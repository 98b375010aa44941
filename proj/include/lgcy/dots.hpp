#pragma once

/// Circular dot diagram of a group component: black dots for the roots
/// t w_j = a_j (mod 1), white dots for t d_i = 0 (mod 1), the counting
/// function f along the circle, and the black/white pairing it induces.

#include "lgcy/exact.hpp"
#include "lgcy/model.hpp"
#include "lgcy/symmetry.hpp"

#include <map>
#include <vector>

namespace lgcy {

enum class DotColor { black, white };

struct Dot {
    DotColor color = DotColor::black;
    Phase t;
    int source = 0;  // j for black dots, i for white dots (0-based)
    int component = 0;
    int f = 0;

    bool black() const { return color == DotColor::black; }
};

struct DotDiagram {
    int component = 0;
    Rational sum_a;         // sum of the pure representative's x-phases
    int total = 0;          // D = sum w_j = sum d_i
    bool ordered = false;
    std::vector<Dot> dots;  // traversal order once ordered
};

/// Places the dots of one component (unordered, f unset).
DotDiagram build_diagram(const ModelData& m, const Component& comp);

/// Sorts by effective angle (whites at t - epsilon, so whites at t = 0 close
/// the cycle), then runs the counter: black f = v, v += 1; white v -= 1, f = v.
/// Ties at one angle: blacks by ascending j, whites by descending i.
DotDiagram order_and_f(DotDiagram diag);

struct DotPair {
    Dot black;
    Dot white;
    int f = 0;
    Rational degree;
};

struct PairingCertificate {
    int component = 0;
    std::vector<DotPair> pairs;
};

class PairingFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Each black dot (in traversal order) takes the first unmatched white dot with
/// the same f found scanning forward cyclically.
PairingCertificate pair_dots(const DotDiagram& diag);

/// sum_j a_j + f(dot).
Rational dot_degree(const DotDiagram& diag, const Dot& dot);

/// f values of the dots sitting on one ray.
struct RayDots {
    std::vector<int> black_f;
    std::vector<int> white_f;
};
std::map<Phase, RayDots> rays(const DotDiagram& diag);

/// The piecewise-linear extension (slope +1 on a black dot's window, -1 on a
/// white dot's) is continuous on the circle. Its local maxima then sit between
/// a black dot and the following white dot.
bool piecewise_linear_consistent(const DotDiagram& diag);

/// For each level v, the number of black dots with f = v equals the number of
/// white dots with f = v.
bool levels_balanced(const DotDiagram& diag);

}  // namespace lgcy
