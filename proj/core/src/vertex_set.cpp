#include "thintree/vertex_set.hpp"

#include <bit>

#include "thintree/errors.hpp"

namespace thintree {

VertexSet VertexSet::full(int n) {
    VertexSet s(n);
    for (size_t i = 0; i < s.blocks_.size(); ++i) s.blocks_[i] = ~uint64_t(0);
    if (n & 63) s.blocks_.back() = (uint64_t(1) << (n & 63)) - 1;
    return s;
}

VertexSet VertexSet::of(int n, std::initializer_list<int> members) {
    VertexSet s(n);
    for (int v : members) s.add(v);
    return s;
}

int VertexSet::count() const {
    int c = 0;
    for (uint64_t b : blocks_) c += std::popcount(b);
    return c;
}

bool VertexSet::empty() const {
    for (uint64_t b : blocks_)
        if (b) return false;
    return true;
}

int VertexSet::min_element() const {
    for (size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i]) return int(i * 64 + std::countr_zero(blocks_[i]));
    return -1;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    for (size_t i = 0; i < blocks_.size(); ++i) {
        uint64_t b = blocks_[i];
        while (b) {
            out.push_back(int(i * 64 + std::countr_zero(b)));
            b &= b - 1;
        }
    }
    return out;
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
    VertexSet r(n_);
    for (size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] = blocks_[i] | o.blocks_[i];
    return r;
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
    VertexSet r(n_);
    for (size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] = blocks_[i] & o.blocks_[i];
    return r;
}

VertexSet VertexSet::operator-(const VertexSet& o) const {
    VertexSet r(n_);
    for (size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] = blocks_[i] & ~o.blocks_[i];
    return r;
}

VertexSet VertexSet::complement() const { return full(n_) - *this; }

bool VertexSet::is_subset_of(const VertexSet& o) const {
    for (size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i] & ~o.blocks_[i]) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
    for (size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i] & o.blocks_[i]) return true;
    return false;
}

bool VertexSet::lex_less(const VertexSet& o) const {
    // First differing bit decides: present-on-one-side only.  If the bit is
    // ours the other set has a larger (or no) member there, and vice versa;
    // this reproduces lexicographic comparison of the sorted member lists
    // with the prefix ordered first.
    for (size_t i = 0; i < blocks_.size(); ++i) {
        uint64_t diff = blocks_[i] ^ o.blocks_[i];
        if (!diff) continue;
        int bitpos = std::countr_zero(diff);
        uint64_t mine = (blocks_[i] >> bitpos) & 1;
        if (mine) {
            // We own the smaller element.  {x,...} < {y,...} when x < y, but
            // a proper prefix is smaller: owning an element the other lacks
            // means we are *larger* only if everything before matched and the
            // other set already ended -- ending means it has no further
            // members, i.e. it is a strict prefix of us, and prefixes come
            // first.
            // Check whether o has any member >= this position.
            uint64_t rest = o.blocks_[i] >> bitpos;
            if (rest) return true;  // o's next member is larger
            for (size_t j = i + 1; j < blocks_.size(); ++j)
                if (o.blocks_[j]) return true;
            return false;  // o is a strict prefix of us
        }
        uint64_t rest = blocks_[i] >> bitpos;
        if (rest) return false;
        for (size_t j = i + 1; j < blocks_.size(); ++j)
            if (blocks_[j]) return false;
        return true;  // we are a strict prefix of o
    }
    return false;  // equal
}

std::string VertexSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : members()) {
        if (!first) s += ",";
        s += "v" + std::to_string(v);
        first = false;
    }
    return s + "}";
}

size_t VertexSet::hash() const {
    size_t h = size_t(n_) * 0x9e3779b97f4a7c15ull;
    for (uint64_t b : blocks_) h = (h ^ b) * 0x100000001b3ull;
    return h;
}

}  // namespace thintree
