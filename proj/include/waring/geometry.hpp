#ifndef WARING_GEOMETRY_HPP
#define WARING_GEOMETRY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "waring/errors.hpp"
#include "waring/matrix.hpp"
#include "waring/pointset.hpp"
#include "waring/rational.hpp"

namespace waring {

// Points (1, l_i, l_i^2, ..., l_i^n) on the standard rational normal curve.
inline PointSet vandermonde_points(long n, const std::vector<Rational>& lambdas) {
    if (n < 1) {
        throw InputError("vandermonde_points: dimension must be >= 1");
    }
    std::vector<std::vector<Rational>> pts;
    pts.reserve(lambdas.size());
    for (const Rational& lambda : lambdas) {
        std::vector<Rational> p(static_cast<std::size_t>(n) + 1);
        p[0] = 1;
        for (long k = 1; k <= n; ++k) p[k] = p[k - 1] * lambda;
        pts.push_back(std::move(p));
    }
    // PointSet construction rejects repeated lambdas (coincident points).
    return PointSet(std::move(pts));
}

struct GkrResult {
    bool holds = false;
    std::optional<long> violating_j;
    explicit operator bool() const { return holds; }
};

// Partial-sum inequality on the h-vector of a set with CB(i): for every
// 0 <= j <= i+1, the first j+1 differences are dominated by the last j+1
// up to degree i+1. A false return on valid input falsifies the underlying
// theorem, so this doubles as a test oracle.
inline GkrResult gkr_inequality_check(const PointSet& z, long i) {
    if (!satisfies_cb(z, i).holds) {
        throw CBNotSatisfied("gkr_inequality_check: CB(" + std::to_string(i) + ") does not hold");
    }
    const HilbertProfile profile = hilbert_profile(z);
    auto dh = [&](long k) -> long {
        if (k < 0 || k >= static_cast<long>(profile.dh.size())) return 0;
        return static_cast<long>(profile.dh[static_cast<std::size_t>(k)]);
    };
    for (long j = 0; j <= i + 1; ++j) {
        long lhs = 0;
        long rhs = 0;
        for (long k = 0; k <= j; ++k) lhs += dh(k);
        for (long k = i + 1 - j; k <= i + 1; ++k) rhs += dh(k);
        if (lhs > rhs) return {false, j};
    }
    return {true, std::nullopt};
}

// Maximal-growth constraint on a difference sequence: once Dh(j) <= j at a
// positive index, Dh is non-increasing from there on; in particular a zero
// at positive index forces zeros ever after.
inline bool macaulay_check(const std::vector<long>& dh) {
    auto at = [&](std::size_t k) -> long {
        return k < dh.size() ? dh[k] : 0;
    };
    for (std::size_t j = 1; j + 1 <= dh.size(); ++j) {
        if (at(j) <= static_cast<long>(j) && at(j) < at(j + 1)) return false;
        if (at(j) == 0 && at(j + 1) > 0) return false;
    }
    return true;
}

inline bool macaulay_check(const HilbertProfile& profile) {
    std::vector<long> dh(profile.dh.begin(), profile.dh.end());
    return macaulay_check(dh);
}

enum class RncVerdict { ON_RNC, NO_LGP_SUBSET, H2_TOO_BIG, TOO_FEW_POINTS };

inline std::string to_string(RncVerdict v) {
    switch (v) {
        case RncVerdict::ON_RNC: return "ON_RNC";
        case RncVerdict::NO_LGP_SUBSET: return "NO_LGP_SUBSET";
        case RncVerdict::H2_TOO_BIG: return "H2_TOO_BIG";
        case RncVerdict::TOO_FEW_POINTS: return "TOO_FEW_POINTS";
    }
    return "?";
}

// Existence certificate for a rational normal curve through Z. ON_RNC is
// asserted only when all three hypotheses hold: l(Z) >= 2n+3, h_Z(2) <= 2n+1,
// and some (2n+1)-subset in LGP. The curve itself is never constructed.
struct RncCertificate {
    RncVerdict verdict = RncVerdict::TOO_FEW_POINTS;
    std::size_t h2 = 0;
    std::optional<std::vector<std::size_t>> lgp_subset;
};

inline RncCertificate castelnuovo_certificate(const PointSet& z) {
    RncCertificate cert;
    cert.h2 = hilbert_function(z, 2);
    const long n = z.n();
    const std::size_t needed = static_cast<std::size_t>(2 * n + 3);
    const std::size_t subset_size = static_cast<std::size_t>(2 * n + 1);
    if (z.size() < needed) {
        cert.verdict = RncVerdict::TOO_FEW_POINTS;
        return cert;
    }
    if (cert.h2 > subset_size) {
        cert.verdict = RncVerdict::H2_TOO_BIG;
        return cert;
    }
    std::optional<std::vector<std::size_t>> found;
    detail::for_each_subset(z.size(), subset_size, [&](const std::vector<std::size_t>& idx) {
        if (is_lgp(z.subset(idx))) {
            found = idx;
            return false; // early exit
        }
        return true;
    });
    if (found) {
        cert.verdict = RncVerdict::ON_RNC;
        cert.lgp_subset = std::move(found);
    } else {
        cert.verdict = RncVerdict::NO_LGP_SUBSET;
    }
    return cert;
}

// Kernel of the catalecticant of the binary form b(s,t) = sum_i a_i (s + l_i t)^{4n}
// contracting degree-(2n+1) duals into degree 2n-1. In the scaled basis
// b_k = sum_i a_i l_i^k the matrix is Hankel: entry (i, j) = b_{i+j}.
// A kernel of dimension >= 2 certifies a 1-parameter family of
// length-(2n+1) decompositions through the given one.
struct PencilCertificate {
    long n = 0;
    RationalMatrix catalecticant; // 2n x (2n+2)
    std::size_t kernel_dim = 0;
    RationalMatrix kernel;
};

inline PencilCertificate apolar_pencil(const std::vector<Rational>& weights,
                                       const std::vector<Rational>& lambdas, long n) {
    if (n < 1) {
        throw InputError("apolar_pencil: dimension must be >= 1");
    }
    const std::size_t r = static_cast<std::size_t>(2 * n + 1);
    if (weights.size() != r || lambdas.size() != r) {
        throw InputError("apolar_pencil: expected exactly 2n+1 weights and lambdas");
    }
    for (const auto& w : weights) {
        if (w == 0) throw InputError("apolar_pencil: weights must be nonzero");
    }
    for (std::size_t a = 0; a < lambdas.size(); ++a) {
        for (std::size_t b = a + 1; b < lambdas.size(); ++b) {
            if (lambdas[a] == lambdas[b]) throw InputError("apolar_pencil: lambdas must be distinct");
        }
    }

    // Scaled coefficients of the restricted form, degree 4n.
    std::vector<Rational> coeffs(static_cast<std::size_t>(4 * n) + 1);
    for (std::size_t i = 0; i < r; ++i) {
        Rational power = 1;
        for (auto& c : coeffs) {
            c += weights[i] * power;
            power *= lambdas[i];
        }
    }

    PencilCertificate cert;
    cert.n = n;
    const std::size_t rows = static_cast<std::size_t>(2 * n);
    const std::size_t cols = static_cast<std::size_t>(2 * n + 2);
    cert.catalecticant = RationalMatrix(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            cert.catalecticant(i, j) = coeffs[i + j];
    cert.kernel = kernel_basis(cert.catalecticant);
    cert.kernel_dim = cert.kernel.cols();
    return cert;
}

} // namespace waring

#endif
