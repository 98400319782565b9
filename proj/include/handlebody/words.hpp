#pragma once

#include "handlebody/handlebody.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hb {

// Letters of pi_1^orb(Q): one involutive letter s_F per facet of P_Q outside
// the belt copies, one free letter t_B per belt (t_{B-} is eliminated as
// t_B^{-1}).
struct Letter {
    enum class Kind : std::uint8_t { S, T };
    Kind kind = Kind::S;
    int id = 0;      // involutive letter id or belt id
    int sign = +1;   // +1 on S letters; +-1 on T letters

    auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Word inverse(const Word& w);

// Presentation per the fundamental-domain construction: conventions are
//   t_B := t_{B+},   t_B^{-1} s_F t_B = s_{phi(F)}  for F around B+,
// with phi = the belt matching link(B+) -> link(B-).  So pinches are
//   t^{-1} g t  with support(g) in the B+ side, mapped by phi, and
//   t g t^{-1}  with support(g) in the B- side, mapped by phi^{-1}.
class Presentation {
public:
    static Presentation from_handlebody(const SimpleHandlebody& h);

    int num_letters() const { return int(letter_labels_.size()); }
    int num_belts() const { return int(belt_labels_.size()); }
    const std::string& letter_label(int i) const { return letter_labels_[i]; }
    const std::string& belt_label(int b) const { return belt_labels_[b]; }
    int letter_by_facet(const std::string& facet_label) const;  // input error if unknown/belt
    int belt_by_label(const std::string& label) const;

    bool commute(int i, int j) const { return i != j && ((commute_[i] >> j) & 1); }
    std::uint64_t commute_mask(int i) const { return commute_[i]; }
    std::uint64_t dom_mask(int b) const { return dom_[b]; }   // letters around B+
    std::uint64_t img_mask(int b) const { return img_[b]; }   // letters around B-
    int phi(int b, int letter) const { return phi_[b][letter]; }
    int phi_inv(int b, int letter) const { return phi_inv_[b][letter]; }

    // Relators (1),(3),(4) of the presentation; (2) is absorbed by the
    // single-letter convention.
    std::vector<Word> relators() const;

    // Commutation edges {s_F, s_F'} as letter-id pairs, i<j.
    std::vector<std::pair<int, int>> commutation_edges() const;

private:
    std::vector<std::string> letter_labels_;
    std::vector<std::string> belt_labels_;
    std::vector<std::uint64_t> commute_;
    std::vector<std::uint64_t> dom_, img_;
    std::vector<std::vector<int>> phi_, phi_inv_;
    std::vector<int> letter_of_facet_;  // nerve vertex id -> letter id (-1 on belts)
    friend class NormalFormEngine;
};

// ---- Coxeter layer (involutive letters only) ----

// Lexicographically least reduced word in the commutation class (Tits).
std::vector<int> coxeter_canonical(const Presentation& p, std::vector<int> letters);

std::uint64_t support_mask(const Presentation& p, const std::vector<int>& canonical);
bool in_parabolic(const Presentation& p, const std::vector<int>& canonical, std::uint64_t t_mask);

// w = w_min * w_T with w_T in W_T and w_min shortest in w W_T.
std::pair<std::vector<int>, std::vector<int>> coset_decompose(const Presentation& p,
                                                              const std::vector<int>& word,
                                                              std::uint64_t t_mask);
// w = w_T * w_min with w_min shortest in W_T w.
std::pair<std::vector<int>, std::vector<int>> coset_decompose_left(const Presentation& p,
                                                                   const std::vector<int>& word,
                                                                   std::uint64_t t_mask);

// ---- HNN layer ----

struct NormalForm {
    struct Segment {
        int belt;
        int sign;                 // exponent of t_belt
        std::vector<int> g;       // canonical Coxeter word following the t letter
    };
    std::vector<int> g0;
    std::vector<Segment> segments;

    std::size_t t_length() const { return segments.size(); }
    std::size_t length() const;
    bool identity() const { return g0.empty() && segments.empty(); }
    Word to_word() const;
    bool operator==(const NormalForm&) const = default;
};

NormalForm hnn_normal_form(const Presentation& p, const Word& w);
std::size_t word_length(const Presentation& p, const Word& w);  // l(w)
bool is_identity(const Presentation& p, const Word& w);
bool equal(const Presentation& p, const Word& u, const Word& v);
bool commutes(const Presentation& p, const Word& u, const Word& v);

// Shortest conjugate reachable by single-letter conjugations, as a
// normal-form word.
Word cyclic_reduce(const Presentation& p, const Word& w);

// Right descent set: all generators (s letters and t^{+-1} letters) whose
// right multiplication shortens l(w).
std::vector<Letter> descent_set(const Presentation& p, const Word& w);

enum class TorsionStatus { Finite, Infinite };
TorsionStatus torsion_status(const Presentation& p, const Word& w);

// ---- Theorem B verdicts ----

struct Z2Witness {
    Word x, y;
    BeltWitness from;
};

// Builds (x, y) from the first square witness and verifies commutation plus
// the bounded-power independence check (inconsistency error on failure).
std::optional<Z2Witness> z2_witness(const SimpleHandlebody& h);
bool has_Z2(const SimpleHandlebody& h);  // precondition: is_flag(h)

// ---- ball enumeration over canonical forms ----

struct Ball {
    // canonical-form words grouped by length 0..radius
    std::vector<std::vector<Word>> by_length;
    bool stabilized = false;  // some layer came out empty before the radius

    std::size_t total() const;
};

// cap guards the total element count (resource error beyond).
Ball enumerate_ball(const Presentation& p, int radius, std::size_t cap = 2'000'000);

} // namespace hb
