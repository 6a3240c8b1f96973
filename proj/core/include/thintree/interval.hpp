#pragma once

#include <string>

namespace thintree {

/// Stretch of outside-atom positions [l, r) with 1 <= l < r <= m; position 0
/// (the root atom) is never covered.  Empty/invalid intervals are l >= r.
struct Interval {
    int l = 0;
    int r = 0;

    bool valid() const { return 1 <= l && l < r; }
    int length() const { return r - l; }
    bool contains_pos(int p) const { return l <= p && p < r; }
    bool contains(const Interval& o) const { return l <= o.l && o.r <= r; }

    bool operator==(const Interval& o) const = default;
    bool operator<(const Interval& o) const { return l != o.l ? l < o.l : r < o.r; }

    std::string to_string() const {
        return "<" + std::to_string(l) + "," + std::to_string(r) + ">";
    }
};

/// Proper interleaving: a.l < b.l < a.r < b.r or b.l < a.l < b.r < a.r.
inline bool intervals_cross(const Interval& a, const Interval& b) {
    return (a.l < b.l && b.l < a.r && a.r < b.r) || (b.l < a.l && a.l < b.r && b.r < a.r);
}

inline Interval interval_intersection(const Interval& a, const Interval& b) {
    return {a.l > b.l ? a.l : b.l, a.r < b.r ? a.r : b.r};
}

inline Interval interval_union(const Interval& a, const Interval& b) {
    return {a.l < b.l ? a.l : b.l, a.r > b.r ? a.r : b.r};
}

/// a minus b for crossing intervals with a.l < b.l: the left remnant.
inline Interval interval_difference(const Interval& a, const Interval& b) {
    if (a.l < b.l) return {a.l, b.l};
    return {b.r, a.r};
}

/// Reflect through the root: position p maps to m - p (m = outside count).
inline Interval mirror_interval(const Interval& iv, int m) { return {m + 1 - iv.r, m + 1 - iv.l}; }

}  // namespace thintree
