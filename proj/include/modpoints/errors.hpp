#pragma once

#include <stdexcept>
#include <string>

namespace modpoints {

// Single error type for the whole library; the code makes failures
// machine-checkable in tests and lets the CLI map them to exit status 2.
enum class errc {
    singular_model,
    non_minimal_model,
    not_prime,
    even_prime,
    equal_primes,
    empty_degree_list,
    non_negative_discriminant,
    non_integral_entry,
    bad_prime,
    level_mismatch,
    not_finite_order,
    infeasible_size,
    malformed_record,
    conductor_mismatch,
    not_tate_at_p,
    supersingular_ap,
    bad_reduction_class,
    unsupported,
    internal
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::singular_model: return "SingularModel";
        case errc::non_minimal_model: return "NonMinimalModel";
        case errc::not_prime: return "NotPrime";
        case errc::even_prime: return "EvenPrime";
        case errc::equal_primes: return "EqualPrimes";
        case errc::empty_degree_list: return "EmptyDegreeList";
        case errc::non_negative_discriminant: return "NonNegativeDiscriminant";
        case errc::non_integral_entry: return "NonIntegralEntry";
        case errc::bad_prime: return "BadPrime";
        case errc::level_mismatch: return "LevelMismatch";
        case errc::not_finite_order: return "NotFiniteOrder";
        case errc::infeasible_size: return "InfeasibleSize";
        case errc::malformed_record: return "Malformed";
        case errc::conductor_mismatch: return "ConductorMismatch";
        case errc::not_tate_at_p: return "NotTateAtP";
        case errc::supersingular_ap: return "SupersingularAp";
        case errc::bad_reduction_class: return "BadReductionClass";
        case errc::unsupported: return "Unsupported";
        case errc::internal: return "Internal";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

}  // namespace modpoints
