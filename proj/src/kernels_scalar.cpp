#include "nonef/kernels.hpp"
#include "nonef/modarith.hpp"

namespace nonef::kern {

void row_submul_scalar(u64* dst, const u64* src, std::size_t n, u64 f, u64 f_shoup, u64 p) {
    for (std::size_t i = 0; i < n; ++i) {
        u64 t = fp::mul_shoup(src[i], f, f_shoup, p);
        u64 d = dst[i];
        dst[i] = d >= t ? d - t : d + p - t;
    }
}

}  // namespace nonef::kern
