#include "cadet/bigint.hpp"

#include <stdexcept>

#include "cadet/errors.hpp"

namespace cadet {

Int exact_div(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("exact_div: zero divisor");
    Int q, r;
    divide_qr(num, den, q, r);
    if (r != 0) throw VerificationError("exact_div: " + num.str() + " not divisible by " + den.str());
    return q;
}

}  // namespace cadet
