#pragma once

#include <optional>
#include <vector>

#include "thintree/interval.hpp"
#include "thintree/multigraph.hpp"
#include "thintree/polygon.hpp"
#include "thintree/rational.hpp"

namespace thintree {

enum class SpecialKind { NearMin, Intersection, Union, Difference };

/// Why an interval's cut is special: either its boundary is below the
/// near-min threshold, or it is p op q for two crossing near-min intervals.
struct SpecialWitness {
    SpecialKind kind = SpecialKind::NearMin;
    Interval p, q;  // for Difference: the cut is C(p) minus C(q)
};

struct CanonicalEntry {
    bool shadow = false;  ///< some 1/5-near-min cut occupies exactly this stretch
    VertexSet cut;        ///< that cut (unique), oriented away from the root atom
    long long boundary = 0;
    bool near_min = false;  ///< strict eta threshold
    bool special = false;
    SpecialWitness witness;  ///< valid when special
    bool diff_of_specials = false;
    Interval diff_p, diff_q;  ///< valid when diff_of_specials: cut = C(diff_p) - C(diff_q)
};

/// Interval-indexed table of canonical cuts for one polygon.
struct CanonicalTable {
    int m = 0;  ///< outside atom count; intervals use positions 1..m-1
    long long k = 0;
    Rational eta;
    bool heuristic = false;  ///< shadows found by closure rather than exhaustion
    std::vector<CanonicalEntry> cells;

    const CanonicalEntry& at(const Interval& iv) const { return cells[iv.l * (m + 1) + iv.r]; }
    CanonicalEntry& at(const Interval& iv) { return cells[iv.l * (m + 1) + iv.r]; }
    bool shadow(const Interval& iv) const { return iv.valid() && iv.r <= m && at(iv).shadow; }
    bool special(const Interval& iv) const { return iv.valid() && iv.r <= m && at(iv).special; }
    bool near_min(const Interval& iv) const { return iv.valid() && iv.r <= m && at(iv).near_min; }
    std::vector<Interval> special_intervals() const;
    std::vector<Interval> near_min_intervals() const;
};

struct CanonicalOptions {
    /// Exhaustive atom-subset sweep up to this many atoms; larger components
    /// fall back to closing the component cuts under crossing combinations
    /// (two rounds), which is flagged on the table.
    int exact_atom_limit = 22;
};

/// Collect every 1/5-near-min cut avoiding the root atom, index each by its
/// outside stretch, and mark near-min / special / difference-of-special
/// intervals.  Two distinct cuts claiming one stretch is an integrity error.
CanonicalTable build_canonical_table(const MultiGraph& g, const PolygonRep& poly, long long k,
                                     const Rational& eta, const CanonicalOptions& opts = {});

/// Outcome of pushing a near-min interval across a special one: a special
/// choice from {A&B, A-B} and one from {A|B, B-A}, each with its witness.
struct ResolvedPair {
    Interval inner;
    SpecialWitness inner_witness;
    Interval outer;
    SpecialWitness outer_witness;
};

/// Case analysis on the witness of special A against crossing near-min B.
/// All six outcomes land on intervals that are again special (witnessed by
/// two crossing near-min intervals, so usable recursively).
ResolvedPair special_cross_resolve(const CanonicalTable& table, const Interval& a,
                                   const Interval& b);

}  // namespace thintree
