#ifndef ESS_SCALAR_HPP
#define ESS_SCALAR_HPP

#include <gmpxx.h>
#include <string>

namespace ess {

/// Exact rational scalar. All arithmetic in the library is exact; there are
/// no tolerances anywhere, so rank and kernel decisions are unambiguous.
using Scalar = mpq_class;

inline Scalar scalar(long num, long den = 1) {
    Scalar s(num, den);
    s.canonicalize();
    return s;
}

/// Serialized form: "p/q" or "n", lowest terms, q > 0. mpq_class keeps
/// canonical form under arithmetic, so get_str is already in this shape.
inline std::string to_string(const Scalar& s) {
    return s.get_str();
}

} // namespace ess

#endif
