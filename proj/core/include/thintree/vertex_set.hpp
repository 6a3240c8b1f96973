#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace thintree {

/// Subset of {0, ..., n-1}, packed into 64-bit blocks.  This is the shore
/// type used for cuts, atoms and laminar sets; n stays desk-sized so the
/// dense representation wins everywhere.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), blocks_((n + 63) / 64, 0) {}
    static VertexSet full(int n);
    static VertexSet of(int n, std::initializer_list<int> members);

    int universe_size() const { return n_; }

    void add(int v) { blocks_[v >> 6] |= uint64_t(1) << (v & 63); }
    void remove(int v) { blocks_[v >> 6] &= ~(uint64_t(1) << (v & 63)); }
    bool contains(int v) const { return (blocks_[v >> 6] >> (v & 63)) & 1; }

    int count() const;
    bool empty() const;
    bool is_full() const { return count() == n_; }

    /// Smallest member, or -1 when empty.
    int min_element() const;

    std::vector<int> members() const;

    VertexSet operator|(const VertexSet& o) const;
    VertexSet operator&(const VertexSet& o) const;
    VertexSet operator-(const VertexSet& o) const;  // set difference
    VertexSet complement() const;

    bool operator==(const VertexSet& o) const = default;
    bool is_subset_of(const VertexSet& o) const;
    bool intersects(const VertexSet& o) const;

    /// Order by the sorted member lists ("{1} < {1,2} < {2}"), which is the
    /// deterministic order cut enumerations are reported in.
    bool lex_less(const VertexSet& o) const;

    /// "{v0,v3,v7}" with ascending ids; used by reports and error messages.
    std::string to_string() const;

    size_t hash() const;

  private:
    int n_ = 0;
    std::vector<uint64_t> blocks_;
};

struct VertexSetHash {
    size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace thintree
