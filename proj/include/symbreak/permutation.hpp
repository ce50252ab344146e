#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "symbreak/errors.hpp"

namespace symbreak {

// Bijection on {0..n-1}; the carrier of graph automorphisms.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
        std::vector<char> seen(image_.size(), 0);
        for (int v : image_) {
            if (v < 0 || v >= static_cast<int>(image_.size()) || seen[v])
                throw InvalidArgument("permutation image is not a bijection");
            seen[v] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        return Permutation(std::move(img));
    }

    // Builds a permutation from disjoint cycles; unlisted points are fixed.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        for (const auto& cycle : cycles) {
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                int from = cycle[i];
                int to = cycle[(i + 1) % cycle.size()];
                if (from < 0 || from >= n || img[from] != from)
                    throw InvalidArgument("cycles are out of range or not disjoint");
                img[from] = to;
            }
        }
        return Permutation(std::move(img));
    }

    int degree() const { return static_cast<int>(image_.size()); }

    int operator()(int v) const { return image_[v]; }

    const std::vector<int>& image() const { return image_; }

    bool is_identity() const {
        for (int v = 0; v < degree(); ++v)
            if (image_[v] != v) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> inv(image_.size());
        for (int v = 0; v < degree(); ++v) inv[image_[v]] = v;
        return Permutation(std::move(inv));
    }

    std::vector<int> moved_points() const {
        std::vector<int> out;
        for (int v = 0; v < degree(); ++v)
            if (image_[v] != v) out.push_back(v);
        return out;
    }

    // Cycle notation with fixed points omitted, each cycle starting at its
    // smallest element, cycles ordered by smallest element: "(0 15)(7 17)".
    // The identity prints as "()".
    std::string cycle_string() const {
        std::string out;
        std::vector<char> done(image_.size(), 0);
        for (int v = 0; v < degree(); ++v) {
            if (done[v] || image_[v] == v) continue;
            out += '(';
            int cur = v;
            bool first = true;
            do {
                if (!first) out += ' ';
                out += std::to_string(cur);
                done[cur] = 1;
                cur = image_[cur];
                first = false;
            } while (cur != v);
            out += ')';
        }
        if (out.empty()) out = "()";
        return out;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.image_ == b.image_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) {
        return !(a == b);
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.image_ < b.image_;
    }

private:
    std::vector<int> image_;
};

// compose(outer, inner)(v) == outer(inner(v)).
inline Permutation compose(const Permutation& outer, const Permutation& inner) {
    if (outer.degree() != inner.degree())
        throw InvalidArgument("composing permutations of different degrees");
    std::vector<int> img(static_cast<std::size_t>(outer.degree()));
    for (int v = 0; v < outer.degree(); ++v) img[v] = outer(inner(v));
    return Permutation(std::move(img));
}

}  // namespace symbreak
