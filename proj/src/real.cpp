#include "harmid/real.hpp"

#include <memory>
#include <vector>

namespace harmid {

std::string Real::str(int sig_digits) const {
    int d = sig_digits > 0 ? sig_digits : ctx_.digits;
    std::vector<char> buf(static_cast<size_t>(d) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", d, v_);
    return std::string(buf.data());
}

Real const_pi(const PrecisionContext& ctx) {
    Real r(ctx);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Real const_log2(const PrecisionContext& ctx) {
    Real r(ctx);
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}

} // namespace harmid
