#ifndef WARING_ERRORS_HPP
#define WARING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace waring {

// Malformed or inconsistent caller input (empty matrix, zero point,
// repeated interpolation node, ...).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Entries do not fit the floating-point range in a float cross-check.
struct NumericalRangeError : std::runtime_error {
    explicit NumericalRangeError(const std::string& what) : std::runtime_error(what) {}
};

// gkr_inequality_check called on a set without the required CB property.
struct CBNotSatisfied : std::runtime_error {
    explicit CBNotSatisfied(const std::string& what) : std::runtime_error(what) {}
};

// terracini_test requires r = 2n+1.
struct WrongRank : std::runtime_error {
    explicit WrongRank(const std::string& what) : std::runtime_error(what) {}
};

// reshaped_kruskal_test requires r <= 2n.
struct RankOutOfRange : std::runtime_error {
    explicit RankOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

} // namespace waring

#endif
