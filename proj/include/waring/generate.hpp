#ifndef WARING_GENERATE_HPP
#define WARING_GENERATE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "waring/errors.hpp"
#include "waring/geometry.hpp"
#include "waring/io.hpp"
#include "waring/rational.hpp"

namespace waring {

// The 9 points in P^4 of the identifiable quartic experiment (points are
// stored one per row; the classic display stacks them as columns).
inline InputDocument paper_example_document() {
    const std::vector<std::vector<long>> rows = {
        {0, -2, 2, 1, 1},   {1, -1, 0, -5, -3}, {1, 2, 5, -1, -2},
        {-3, 0, 1, 3, -5},  {-5, 1, 4, -2, -4}, {2, 2, -5, 3, 3},
        {-1, -4, -1, 5, -2}, {2, 3, -3, 2, 1},  {-1, 1, 4, -3, 4},
    };
    InputDocument doc;
    doc.n = 4;
    doc.d = 4;
    for (const auto& r : rows) {
        doc.points.emplace_back(r.begin(), r.end());
    }
    return doc;
}

inline InputDocument vandermonde_document(long n, const std::vector<Rational>& lambdas) {
    const PointSet pts = vandermonde_points(n, lambdas);
    InputDocument doc;
    doc.n = n;
    doc.d = 4;
    doc.points = pts.points();
    return doc;
}

// Deterministic integer configurations. The raw 64-bit stream of
// mt19937_64(seed) is mapped to coordinates by v = (x mod (2*bound+1)) - bound;
// zero rows and projective duplicates are rejected and redrawn, so the output
// is a function of (n, r, seed, bound) alone.
inline InputDocument random_document(long n, std::size_t r, std::uint64_t seed, long bound) {
    if (n < 1 || r < 1 || bound < 1) {
        throw InputError("random_document: need n >= 1, r >= 1, bound >= 1");
    }
    std::mt19937_64 rng(seed);
    auto draw = [&]() -> long {
        return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
    };
    std::vector<std::vector<Rational>> accepted;
    while (accepted.size() < r) {
        std::vector<Rational> candidate(static_cast<std::size_t>(n) + 1);
        for (auto& c : candidate) c = draw();
        try {
            std::vector<std::vector<Rational>> trial = accepted;
            trial.push_back(candidate);
            PointSet check(std::move(trial)); // validates nonzero + distinct
            accepted.push_back(std::move(candidate));
        } catch (const InputError&) {
            // redraw
        }
    }
    InputDocument doc;
    doc.n = n;
    doc.d = 4;
    doc.points = std::move(accepted);
    return doc;
}

} // namespace waring

#endif
