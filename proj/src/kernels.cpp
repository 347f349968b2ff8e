#include "ducov/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace ducov::kernels {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {

const KernelTable& select() {
    const KernelTable* simd = (avx2_table() && cpu_has_avx2()) ? avx2_table() : nullptr;
    if (const char* env = std::getenv("DUCOV_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return scalar_table();
        if (std::strcmp(env, "avx2") == 0 && simd) return *simd;
    }
    return simd ? *simd : scalar_table();
}

} // namespace

const KernelTable& active() {
    static const KernelTable& table = select();
    return table;
}

std::vector<const KernelTable*> available_tables() {
    std::vector<const KernelTable*> out{&scalar_table()};
    if (avx2_table() && cpu_has_avx2()) out.push_back(avx2_table());
    return out;
}

} // namespace ducov::kernels
