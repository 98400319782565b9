#pragma once

#include "handlebody/h1_map.hpp"
#include "handlebody/handlebody.hpp"
#include "handlebody/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hb {

// One subset's contribution to H_*(M_Q) (facet classes of Q) or one descent
// type's contribution to H_*(Q~) (letter set T).
struct SubsetContribution {
    std::vector<std::string> subset;            // class labels / letter labels
    std::optional<std::string> belt;            // set for {t_B} u T_S types
    std::vector<DegreeHomology> per_degree;     // indexed by degree 0..n

    bool all_trivial() const;
};

struct DoubleHomology {
    Coefficients coeff = Coefficients::Z;
    HomologyResult total;
    std::vector<SubsetContribution> contributions;  // nonzero entries, canonical order
};

// Homology of the manifold double M_Q via the facet-class subset formula.
// Degrees 1/2 for genus > 0 are computed through the meridian-killed H_1 map
// and are implemented for n = 3 only (unsupported_error otherwise).
DoubleHomology double_homology(const SimpleHandlebody& h, Coefficients coeff);

// Contribution types of the universal cover: spherical letter sets T_S and
// {t_B} u T_S with T_S around B+; degrees >= 2 only, nonzero entries only.
// Multiplicities are per group element with S(w) = T.
std::vector<SubsetContribution> universal_cover_support(const SimpleHandlebody& h);

// Theorem A verdict, cross-checked against universal_cover_support.
bool is_aspherical(const SimpleHandlebody& h);

// ---- chamber balls in the universal cover ----

struct ChamberBall {
    int radius = 0;
    std::vector<std::size_t> count_by_length;   // layer sizes 0..radius
    std::vector<std::string> chambers;          // canonical normal forms, BFS order
    std::size_t interior_count = 0;             // chambers whose dual star closes in the ball
    bool interior_links_match_nerve = false;
    bool closed = false;                        // every chamber interior (finite group ball)
};

ChamberBall chamber_ball(const SimpleHandlebody& h, int radius, std::size_t cap = 2'000'000);

// ---- curvature classification ----

enum class Verdict { Yes, No, NotDetermined };
enum class NegativeCurvature { Yes, No, NecessaryConditionsMet };
enum class Hyperbolic { Yes, No, Unknown, Never };

struct CurvatureReport {
    int dim = 0;
    int genus = 0;
    bool flag = false;
    std::optional<std::size_t> square_belts;  // null when not flag
    bool aspherical = false;
    bool npc_double = false;
    Verdict has_z2 = Verdict::NotDetermined;  // NotDetermined = not applicable (non-flag)
    NegativeCurvature negative_curvature = NegativeCurvature::No;
    Hyperbolic hyperbolic = Hyperbolic::Unknown;
    Verdict psc = Verdict::NotDetermined;
    bool two_neighborly = false;
    bool double_simply_connected = false;
    Verdict double_pi1_infinite = Verdict::NotDetermined;
    bool orientable_double = true;
};

CurvatureReport classify(const SimpleHandlebody& h);

} // namespace hb
