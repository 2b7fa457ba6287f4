#ifndef WARING_IDENTIFY_HPP
#define WARING_IDENTIFY_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "waring/errors.hpp"
#include "waring/matrix.hpp"
#include "waring/pointset.hpp"
#include "waring/rational.hpp"
#include "waring/veronese.hpp"

namespace waring {

// A candidate Waring decomposition T = sum_i w_i nu_d(P_i). The weights
// never influence a verdict (every test is a span condition); they only
// matter for materializing T itself.
class Decomposition {
public:
    Decomposition(long d, PointSet points, std::optional<std::vector<Rational>> weights = std::nullopt)
        : d_(d), points_(std::move(points)), weights_(std::move(weights)) {
        if (d_ < 1) {
            throw InputError("Decomposition: degree must be >= 1");
        }
        if (weights_) {
            if (weights_->size() != points_.size()) {
                throw InputError("Decomposition: weight count must match point count");
            }
            for (const auto& w : *weights_) {
                if (w == 0) throw InputError("Decomposition: weights must be nonzero");
            }
        }
    }

    long d() const { return d_; }
    long n() const { return points_.n(); }
    std::size_t r() const { return points_.size(); }
    const PointSet& points() const { return points_; }

    std::vector<Rational> weight_vector() const {
        if (weights_) return *weights_;
        return std::vector<Rational>(points_.size(), Rational(1));
    }

private:
    long d_;
    PointSet points_;
    std::optional<std::vector<Rational>> weights_;
};

// Coefficient vector of T in the monomial basis of degree d.
inline std::vector<Rational> tensor_coefficients(const Decomposition& dec) {
    const auto weights = dec.weight_vector();
    std::vector<Rational> acc(binomial_size(dec.n() + dec.d(), dec.d()));
    for (std::size_t i = 0; i < dec.r(); ++i) {
        const auto v = veronese_embed(dec.points().point(i), dec.d());
        for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += weights[i] * v[c];
    }
    return acc;
}

// Passes iff the r Veronese images are linearly independent.
inline std::pair<bool, std::size_t> minimality_test(const Decomposition& dec) {
    const std::size_t rk = rank(evaluation_matrix(dec.points(), dec.d()));
    return {rk == dec.r(), rk};
}

// Passes iff the points are in linear general position.
inline std::pair<bool, std::size_t> kruskal_test(const Decomposition& dec) {
    const std::size_t k = kruskal_rank(dec.points());
    const std::size_t maximal = std::min<std::size_t>(dec.r(), static_cast<std::size_t>(dec.n()) + 1);
    return {k == maximal, k};
}

// Stacks the r(n+1) Jacobian vectors of nu_4 at the decomposition points;
// passes iff they span the expected dimension 2n^2 + 3n + 1 = (2n+1)(n+1).
// Only defined at r = 2n+1, the one rank where the verdict hinges on it.
inline std::pair<bool, std::size_t> terracini_test(const Decomposition& dec) {
    const long n = dec.n();
    if (dec.r() != static_cast<std::size_t>(2 * n + 1)) {
        throw WrongRank("terracini_test: requires r = 2n+1");
    }
    const std::size_t cols = binomial_size(n + 4, 4);
    const std::size_t width = static_cast<std::size_t>(n) + 1;
    RationalMatrix stacked(dec.r() * width, cols);
    for (std::size_t i = 0; i < dec.r(); ++i) {
        const auto basis = tangent_basis(dec.points().point(i), 4);
        for (std::size_t j = 0; j < width; ++j)
            for (std::size_t c = 0; c < cols; ++c)
                stacked(i * width + j, c) = basis[j][c];
    }
    const std::size_t dim = rank(stacked);
    const std::size_t expected = static_cast<std::size_t>(2 * n * n + 3 * n + 1);
    return {dim == expected, dim};
}

struct ReshapedKruskalDetails {
    bool lgp_nu2 = false;        // LGP of the degree-2 Veronese image
    bool lgp_points = false;     // LGP of the points themselves (both unit factors)
    bool inequality = false;     // Kruskal bound for the (2,1,1) reshaping
    std::size_t kruskal_rank = 0;
};

// Kruskal's criterion on the (2,1,1) reshaping of the quartic, the partition
// with the widest reach at d = 4: applicable up to r = 2n.
inline std::pair<bool, ReshapedKruskalDetails> reshaped_kruskal_test(const Decomposition& dec) {
    const long n = dec.n();
    const std::size_t r = dec.r();
    if (r > static_cast<std::size_t>(2 * n)) {
        throw RankOutOfRange("reshaped_kruskal_test: requires r <= 2n");
    }
    ReshapedKruskalDetails details;
    details.kruskal_rank = kruskal_rank(dec.points());
    details.lgp_points =
        details.kruskal_rank == std::min<std::size_t>(r, static_cast<std::size_t>(n) + 1);

    const std::size_t n2 = binomial_size(n + 2, 2);
    if (r <= n2) {
        // The only maximal subset of the nu_2 image is the whole set.
        details.lgp_nu2 = rank(evaluation_matrix(dec.points(), 2)) == r;
    } else {
        std::vector<std::vector<Rational>> embedded;
        embedded.reserve(r);
        for (std::size_t i = 0; i < r; ++i) {
            embedded.push_back(veronese_embed(dec.points().point(i), 2));
        }
        const PointSet image(std::move(embedded));
        details.lgp_nu2 = is_lgp(image);
    }

    const std::size_t bound = std::min(n2, r) + 2 * std::min<std::size_t>(static_cast<std::size_t>(n) + 1, r);
    details.inequality = 2 * (r + 1) <= bound; // r <= bound/2 - 1 in integers
    const bool ok = details.lgp_nu2 && details.lgp_points && details.inequality;
    return {ok, details};
}

enum class Verdict { IDENTIFIABLE, NOT_APPLICABLE, RESHAPED_KRUSKAL_OK, TEST_FAILED };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::IDENTIFIABLE: return "IDENTIFIABLE";
        case Verdict::NOT_APPLICABLE: return "NOT_APPLICABLE";
        case Verdict::RESHAPED_KRUSKAL_OK: return "RESHAPED_KRUSKAL_OK";
        case Verdict::TEST_FAILED: return "TEST_FAILED";
    }
    return "?";
}

struct IdentifiabilityReport {
    Verdict verdict = Verdict::NOT_APPLICABLE;
    std::size_t r = 0;
    long n = 0;
    std::optional<std::size_t> minimality_rank;
    std::optional<std::size_t> kruskal_rank;
    std::optional<std::size_t> terracini_dim;
    std::optional<std::string> failed_test;
    std::string notes;
};

// The full pipeline: the rank gate, then either the reshaped Kruskal
// criterion (r < 2n+1) or the minimality / Kruskal / Terracini sequence at
// the boundary rank r = 2n+1.
inline IdentifiabilityReport certify(const Decomposition& dec) {
    if (dec.d() != 4) {
        throw InputError("certify: pipeline is defined for quartics (d = 4)");
    }
    const long n = dec.n();
    if (n < 1) {
        throw InputError("certify: requires n >= 1");
    }
    IdentifiabilityReport report;
    report.r = dec.r();
    report.n = n;
    const std::size_t boundary = static_cast<std::size_t>(2 * n + 1);

    if (dec.r() > boundary) {
        report.verdict = Verdict::NOT_APPLICABLE;
        report.notes = "r = " + std::to_string(dec.r()) + " exceeds 2n+1 = " +
                       std::to_string(boundary) + "; the criterion cannot be applied";
        return report;
    }

    const auto [minimal, min_rank] = minimality_test(dec);
    report.minimality_rank = min_rank;
    if (!minimal) {
        report.verdict = Verdict::TEST_FAILED;
        report.failed_test = "minimality";
        report.notes = "Veronese images span dimension " + std::to_string(min_rank) +
                       " < r = " + std::to_string(dec.r()) + "; the decomposition is not minimal";
        return report;
    }

    if (dec.r() < boundary) {
        const auto [ok, details] = reshaped_kruskal_test(dec);
        report.kruskal_rank = details.kruskal_rank;
        if (ok) {
            report.verdict = Verdict::RESHAPED_KRUSKAL_OK;
            report.notes = "reshaped Kruskal criterion (partition 2+1+1) holds; "
                           "the tensor has rank r and the decomposition is unique";
        } else {
            report.verdict = Verdict::TEST_FAILED;
            report.failed_test = "reshaped_kruskal";
            report.notes = std::string("reshaped Kruskal criterion failed: ") +
                           (!details.lgp_points   ? "points not in LGP"
                            : !details.lgp_nu2    ? "degree-2 Veronese image not in LGP"
                                                  : "rank exceeds the Kruskal bound");
        }
        return report;
    }

    const auto [lgp, k_rank] = kruskal_test(dec);
    report.kruskal_rank = k_rank;
    if (!lgp) {
        report.verdict = Verdict::TEST_FAILED;
        report.failed_test = "kruskal";
        report.notes = "Kruskal rank " + std::to_string(k_rank) + " < " +
                       std::to_string(std::min<std::size_t>(dec.r(), static_cast<std::size_t>(n) + 1)) +
                       "; the points are not in linear general position";
        return report;
    }

    const auto [terracini_ok, dim] = terracini_test(dec);
    report.terracini_dim = dim;
    if (!terracini_ok) {
        report.verdict = Verdict::TEST_FAILED;
        report.failed_test = "terracini";
        report.notes = "Terracini's test failed: tangent spaces span dimension " +
                       std::to_string(dim) + " < " + std::to_string(2 * n * n + 3 * n + 1) +
                       "; cannot conclude identifiability. For a minimal LGP decomposition this "
                       "means the points lie on a rational normal curve and the tensor is computed "
                       "by a 1-dimensional family of decompositions";
        return report;
    }

    report.verdict = Verdict::IDENTIFIABLE;
    report.notes = "minimality, Kruskal and Terracini tests all passed; the tensor has rank r "
                   "and the decomposition is unique up to scaling and reordering";
    return report;
}

} // namespace waring

#endif
