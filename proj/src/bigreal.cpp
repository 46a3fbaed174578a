#include "moran/bigreal.hpp"

#include <cstdio>
#include <vector>

namespace moran {

std::string BigReal::str(int significant_digits) const {
    if (significant_digits < 2)
        significant_digits = 2;
    char* out = nullptr;
    // %.*Re prints one digit before the point plus (n) after it
    if (mpfr_asprintf(&out, "%.*Re", significant_digits - 1, v_) < 0)
        return "nan";
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

} // namespace moran
