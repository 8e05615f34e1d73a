#ifndef SPECRED_TYPES_HPP
#define SPECRED_TYPES_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace specred {

// Arbitrary-precision integers and rationals. Coefficient growth in
// subresultant chains overflows 64-bit machine words almost immediately,
// so every exact computation in this library runs on these types.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Thrown when an input exceeds a size guard (vertex-count limits on
// enumeration, isomorphism, characteristic polynomials).
class guard_error : public std::runtime_error {
public:
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed external input (graph6 text, CLI values).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

inline const char* version() { return "0.1.0"; }

}  // namespace specred

#endif
