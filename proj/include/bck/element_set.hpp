#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

namespace bck {

using Element = int;

/// Dense bitset over a fixed carrier [0, n). Used for subalgebras, ideals,
/// series terms and centers; all operations assume both operands share the
/// same carrier size.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    static ElementSet full(int universe) {
        ElementSet s(universe);
        for (Element x = 0; x < universe; ++x) s.insert(x);
        return s;
    }
    static ElementSet singleton(int universe, Element x) {
        ElementSet s(universe);
        s.insert(x);
        return s;
    }

    int universe() const { return n_; }

    bool contains(Element x) const {
        assert(x >= 0 && x < n_);
        return words_[x >> 6] >> (x & 63) & 1;
    }
    void insert(Element x) {
        assert(x >= 0 && x < n_);
        words_[x >> 6] |= uint64_t{1} << (x & 63);
    }
    void erase(Element x) {
        assert(x >= 0 && x < n_);
        words_[x >> 6] &= ~(uint64_t{1} << (x & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool subset_of(const ElementSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    ElementSet operator|(const ElementSet& o) const {
        assert(n_ == o.n_);
        ElementSet r(n_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
        return r;
    }
    ElementSet operator&(const ElementSet& o) const {
        assert(n_ == o.n_);
        ElementSet r(n_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
        return r;
    }
    /// Set difference: elements of *this not in o.
    ElementSet minus(const ElementSet& o) const {
        assert(n_ == o.n_);
        ElementSet r(n_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
        return r;
    }

    bool operator==(const ElementSet& o) const = default;
    auto operator<=>(const ElementSet& o) const {
        if (auto c = n_ <=> o.n_; c != 0) return c;
        return words_ <=> o.words_;
    }

    std::vector<Element> to_vector() const {
        std::vector<Element> v;
        v.reserve(count());
        for (Element x = 0; x < n_; ++x)
            if (contains(x)) v.push_back(x);
        return v;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (Element x = 0; x < n_; ++x)
            if (contains(x)) f(x);
    }

private:
    int n_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace bck
