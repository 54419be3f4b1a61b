#ifndef FJD_ERRORS_HPP
#define FJD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fjd {

// Each named error corresponds to one violated contract; the what() string
// carries the offending values.

struct NotSymmetric : std::invalid_argument {
    explicit NotSymmetric(const std::string& m) : std::invalid_argument("NotSymmetric: " + m) {}
};
struct NotEven : std::invalid_argument {
    explicit NotEven(const std::string& m) : std::invalid_argument("NotEven: " + m) {}
};
struct NotPositiveDefinite : std::invalid_argument {
    explicit NotPositiveDefinite(const std::string& m) : std::invalid_argument("NotPositiveDefinite: " + m) {}
};
struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& m) : std::invalid_argument("DimensionMismatch: " + m) {}
};
struct CongruenceViolated : std::invalid_argument {
    explicit CongruenceViolated(const std::string& m) : std::invalid_argument("CongruenceViolated: " + m) {}
};
struct Singular : std::invalid_argument {
    explicit Singular(const std::string& m) : std::invalid_argument("Singular: " + m) {}
};
struct ZeroModulus : std::invalid_argument {
    explicit ZeroModulus(const std::string& m) : std::invalid_argument("ZeroModulus: " + m) {}
};
struct OddRank : std::invalid_argument {
    explicit OddRank(const std::string& m) : std::invalid_argument("OddRank: " + m) {}
};
struct UnsupportedFamily : std::invalid_argument {
    explicit UnsupportedFamily(const std::string& m) : std::invalid_argument("UnsupportedFamily: " + m) {}
};
struct NotDiscriminant : std::invalid_argument {
    explicit NotDiscriminant(const std::string& m) : std::invalid_argument("NotDiscriminant: " + m) {}
};
struct NotSquarefree : std::invalid_argument {
    explicit NotSquarefree(const std::string& m) : std::invalid_argument("NotSquarefree: " + m) {}
};
struct DenominatorVanishesAtZero : std::invalid_argument {
    explicit DenominatorVanishesAtZero(const std::string& m) : std::invalid_argument("DenominatorVanishesAtZero: " + m) {}
};
struct MissingPrime : std::invalid_argument {
    explicit MissingPrime(const std::string& m) : std::invalid_argument("MissingPrime: " + m) {}
};
struct HalfShiftUnpaired : std::invalid_argument {
    explicit HalfShiftUnpaired(const std::string& m) : std::invalid_argument("HalfShiftUnpaired: " + m) {}
};
struct OddEvenMismatch : std::invalid_argument {
    explicit OddEvenMismatch(const std::string& m) : std::invalid_argument("OddEvenMismatch: " + m) {}
};
struct KeyOutsideSupport : std::invalid_argument {
    explicit KeyOutsideSupport(const std::string& m) : std::invalid_argument("KeyOutsideSupport: " + m) {}
};
struct ProviderUndefined : std::invalid_argument {
    explicit ProviderUndefined(const std::string& m) : std::invalid_argument("ProviderUndefined: " + m) {}
};
struct UnsupportedXi : std::invalid_argument {
    explicit UnsupportedXi(const std::string& m) : std::invalid_argument("UnsupportedXi: " + m) {}
};

} // namespace fjd

#endif
