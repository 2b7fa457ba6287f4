#ifndef WARING_POINTSET_HPP
#define WARING_POINTSET_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "waring/errors.hpp"
#include "waring/matrix.hpp"
#include "waring/rational.hpp"
#include "waring/veronese.hpp"

namespace waring {

// A reduced finite configuration of pairwise-distinct projective points.
// Each point is stored with its canonical representative: first nonzero
// coordinate scaled to 1. Immutable after validated construction.
class PointSet {
public:
    explicit PointSet(std::vector<std::vector<Rational>> points) {
        if (points.empty()) {
            throw InputError("PointSet: at least one point required");
        }
        const std::size_t width = points[0].size();
        if (width < 1) {
            throw InputError("PointSet: points need at least one coordinate");
        }
        for (auto& p : points) {
            if (p.size() != width) {
                throw InputError("PointSet: inconsistent coordinate lengths");
            }
            std::size_t lead = width;
            for (std::size_t i = 0; i < width; ++i) {
                if (p[i] != 0) {
                    lead = i;
                    break;
                }
            }
            if (lead == width) {
                throw InputError("PointSet: zero point is not a projective point");
            }
            const Rational scale = p[lead];
            for (auto& c : p) c /= scale;
        }
        for (std::size_t a = 0; a < points.size(); ++a) {
            for (std::size_t b = a + 1; b < points.size(); ++b) {
                if (points[a] == points[b]) {
                    throw InputError("PointSet: points " + std::to_string(a) + " and " +
                                     std::to_string(b) + " coincide as projective points");
                }
            }
        }
        points_ = std::move(points);
    }

    long n() const { return static_cast<long>(points_[0].size()) - 1; }
    std::size_t size() const { return points_.size(); }
    const std::vector<Rational>& point(std::size_t i) const { return points_[i]; }
    const std::vector<std::vector<Rational>>& points() const { return points_; }

    PointSet without(std::size_t index) const {
        std::vector<std::vector<Rational>> rest;
        rest.reserve(points_.size() - 1);
        for (std::size_t i = 0; i < points_.size(); ++i) {
            if (i != index) rest.push_back(points_[i]);
        }
        return PointSet(std::move(rest));
    }

    PointSet subset(const std::vector<std::size_t>& indices) const {
        std::vector<std::vector<Rational>> sel;
        sel.reserve(indices.size());
        for (std::size_t i : indices) sel.push_back(points_[i]);
        return PointSet(std::move(sel));
    }

private:
    std::vector<std::vector<Rational>> points_;
};

// h_Z, its first difference, and the socle degree of a configuration.
struct HilbertProfile {
    std::vector<std::size_t> h;   // h_Z(0), ..., h_Z(j_stab)
    std::vector<std::size_t> dh;  // h-vector: the nonzero first differences
    long socle_degree = 0;        // largest i with Dh_Z(i+1) > 0
    std::size_t cardinality = 0;
};

// Rows: the points; columns: degree-j monomials in monomials(n, j) order.
inline RationalMatrix evaluation_matrix(const PointSet& z, long j) {
    if (j < 0) {
        throw InputError("evaluation_matrix: degree must be >= 0");
    }
    const std::size_t cols = binomial_size(z.n() + j, j);
    RationalMatrix m(z.size(), cols);
    for (std::size_t i = 0; i < z.size(); ++i) {
        const auto row = veronese_embed(z.point(i), j);
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = row[c];
    }
    return m;
}

// h_Z(j): conditions Z imposes on degree-j forms. Zero for j < 0.
inline std::size_t hilbert_function(const PointSet& z, long j) {
    if (j < 0) return 0;
    return rank(evaluation_matrix(z, j));
}

inline HilbertProfile hilbert_profile(const PointSet& z) {
    HilbertProfile profile;
    profile.cardinality = z.size();
    // h_Z stabilizes at l(Z) no later than degree l(Z) - 1.
    for (long j = 0;; ++j) {
        profile.h.push_back(hilbert_function(z, j));
        if (profile.h.back() == z.size()) break;
    }
    profile.dh.reserve(profile.h.size());
    std::size_t prev = 0;
    for (std::size_t value : profile.h) {
        profile.dh.push_back(value - prev);
        prev = value;
    }
    profile.socle_degree = static_cast<long>(profile.dh.size()) - 2;
    return profile;
}

namespace detail {

// Visits k-subsets of {0,...,total-1} in lexicographic order until the
// callback returns false; returns whether all subsets passed.
template <typename Callback>
inline bool for_each_subset(std::size_t total, std::size_t k, Callback&& cb) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!cb(idx)) return false;
        // advance
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + total - k) break;
            if (i == 0) return true;
        }
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace detail

// Largest k such that every k points are linearly independent. Sweeps from
// the maximal candidate size downward with early exit.
inline std::size_t kruskal_rank(const PointSet& z) {
    const std::size_t max_k = std::min<std::size_t>(z.size(), static_cast<std::size_t>(z.n()) + 1);
    for (std::size_t k = max_k; k >= 1; --k) {
        const bool all_independent = detail::for_each_subset(z.size(), k, [&](const std::vector<std::size_t>& idx) {
            RationalMatrix m(k, static_cast<std::size_t>(z.n()) + 1);
            for (std::size_t i = 0; i < k; ++i) {
                const auto& p = z.point(idx[i]);
                for (std::size_t c = 0; c < p.size(); ++c) m(i, c) = p[c];
            }
            return rank(m) == k;
        });
        if (all_independent) return k;
    }
    return 0; // unreachable: single points are nonzero
}

inline bool is_lgp(const PointSet& z) {
    return kruskal_rank(z) == std::min<std::size_t>(z.size(), static_cast<std::size_t>(z.n()) + 1);
}

// Hypersurfaces of degree i separate the points of Z.
inline bool separates(const PointSet& z, long i) {
    if (i < 0) {
        throw InputError("separates: degree must be >= 0");
    }
    return hilbert_function(z, i) == z.size();
}

struct CbResult {
    bool holds = false;
    // Least index of a point separable from the rest by a degree-i form,
    // present exactly when the property fails.
    std::optional<std::size_t> witness;
};

// Cayley-Bacharach in degree i: no single point can be cut away from the
// others by a degree-i form. Equivalent to h_{Z \ P}(i) = h_Z(i) for all P.
inline CbResult satisfies_cb(const PointSet& z, long i) {
    if (i < 0) {
        throw InputError("satisfies_cb: degree must be >= 0");
    }
    if (z.size() < 2) {
        throw InputError("satisfies_cb: needs at least 2 points");
    }
    const std::size_t h_full = hilbert_function(z, i);
    for (std::size_t p = 0; p < z.size(); ++p) {
        if (hilbert_function(z.without(p), i) != h_full) {
            return {false, p};
        }
    }
    return {true, std::nullopt};
}

} // namespace waring

#endif
