#pragma once

#include "handlebody/simplicial_complex.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hb {

// A simple polytope is carried combinatorially by its nerve: one vertex per
// facet, one simplex per nonempty facet intersection.
struct SimplePolytope {
    int dim = 0;                  // n
    SimplicialComplex nerve;      // on the facet labels, pure of dim n-1 when valid

    const std::vector<std::string>& facets() const { return nerve.vertex_labels(); }
};

// A cutting belt: two paired facets of P_Q plus the matching of their links
// (facet F around plus corresponds to matching[F] around minus).
struct CuttingBelt {
    std::string label;
    std::string plus;
    std::string minus;
    std::map<std::string, std::string> matching;
};

// The pre-cut pair (P_Q, {B_i}).  Genus equals the number of belts.
struct SimpleHandlebody {
    SimplePolytope polytope;
    std::vector<CuttingBelt> belts;

    int genus() const { return int(belts.size()); }
    int dim() const { return polytope.dim; }
};

struct ValidationIssue {
    std::string code;      // stable identifier, e.g. "nerve-not-pure"
    std::string message;   // names the violated invariant
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool valid() const { return issues.empty(); }
};

// Checks every structural invariant; violations are report entries, not
// failures.  Deterministic order.
ValidationReport validate(const SimpleHandlebody& h);

// Throws input_error when validate() reports anything.
void ensure_valid(const SimpleHandlebody& h);

// Facet classes of Q and the quotient nerve.  Belt facets are interior in Q
// and have no class.
struct Quotient {
    // class id per facet id of P_Q (-1 for belt facets)
    std::vector<int> class_of_facet;
    // members (facet ids of P_Q) per class, each sorted; classes ordered by
    // smallest member
    std::vector<std::vector<int>> classes;
    std::vector<std::string> class_labels;  // label of smallest member
    SimplicialComplex nerve;                // on class labels
    // per belt: the link cycle of B+ expressed as a cyclic sequence of class ids
    std::vector<std::vector<int>> meridian_class_cycles;
};

// Errors with "non-disk facet" when a facet class has a gluing cycle or a
// fixed point; other structural violations raise input_error as well.
Quotient quotient_nerve(const SimpleHandlebody& h);

// Belt witnesses.
struct BeltWitness {
    enum class Kind { Delta, Square };
    Kind kind = Kind::Delta;
    // Delta(k): the k+2 facet classes of the minimal empty simplex (k = size-1).
    // Square: the four classes in cyclic order [F1],[F2],[F3],[F4].
    std::vector<std::string> facet_classes;
    // Square only: belts crossed, in order (empty for intra-polytope squares).
    std::vector<std::string> crossing_belts;

    // Square detail at the P_Q level (enough to build the Z+Z witness words):
    std::vector<std::string> f1_chain;   // F1^(0..k)
    std::vector<std::string> f3_chain;   // F3^(0..k)
    std::string f2, f4;
    std::vector<int> crossing_dirs;      // +1 = plus->minus across the belt
};

// All minimal empty simplices of nerve(P_Q), as Delta witnesses.  Raises
// input_error if an empty simplex touches a belt facet (the instance then
// violates the B-belt hypothesis).
std::vector<BeltWitness> delta_belts(const SimpleHandlebody& h);

// Flagness of the handlebody = flagness of nerve(P_Q).
bool is_flag(const SimpleHandlebody& h);

// Quadrilateral belts: intra-polytope 4-circuits with empty diagonals plus
// belt-crossing squares found by chain search.  Precondition: is_flag(h).
std::vector<BeltWitness> square_belts(const SimpleHandlebody& h);

bool two_neighborly(const SimplePolytope& p);

// Nerve of the collar polytope B x [0,1] of a belt: the suspension of the
// link of the plus copy (used by the Gromov oracle and validation).
SimplicialComplex collar_nerve(const SimpleHandlebody& h, std::size_t belt_index);

} // namespace hb
