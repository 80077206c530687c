#include "nonef/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace nonef::kern {

namespace {

row_submul_fn g_active = nullptr;
const char* g_name = "";

void select(const char* name) {
    std::string want = name ? name : "auto";
#if defined(__x86_64__)
    if (want == "auto") want = avx2_supported() ? "avx2" : "scalar";
    if (want == "avx2") {
        if (!avx2_supported()) throw std::invalid_argument("kernels: avx2 not supported on this CPU");
        g_active = row_submul_avx2;
        g_name = "avx2";
        return;
    }
#else
    if (want == "auto") want = "scalar";
#endif
    if (want == "scalar") {
        g_active = row_submul_scalar;
        g_name = "scalar";
        return;
    }
    throw std::invalid_argument("kernels: unknown variant \"" + want + "\"");
}

void init_once() {
    if (g_active) return;
    select(std::getenv("NONEF_KERNEL"));
}

}  // namespace

bool avx2_supported() {
#if defined(__x86_64__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

row_submul_fn row_submul() {
    init_once();
    return g_active;
}

const char* active_name() {
    init_once();
    return g_name;
}

void force(const char* name) {
    select(name);
}

}  // namespace nonef::kern
