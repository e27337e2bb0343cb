#include <cstdlib>

#include "monodromy/errors.hpp"
#include "monodromy/kernels.hpp"

namespace monodromy {

KernelChoice kernel_choice_from_name(const std::string& name) {
    if (name == "auto") return KernelChoice::Auto;
    if (name == "scalar") return KernelChoice::Scalar;
    if (name == "avx2") return KernelChoice::Avx2;
    if (name == "neon") return KernelChoice::Neon;
    throw ConfigError("unknown kernel '" + name + "' (expected auto|scalar|avx2|neon)");
}

KernelFn select_kernel(KernelChoice choice) {
    if (choice == KernelChoice::Auto) {
        if (const char* env = std::getenv("MONODROMY_KERNEL"))
            choice = kernel_choice_from_name(env);
    }
    switch (choice) {
    case KernelChoice::Scalar:
        return &scalar_kernel;
    case KernelChoice::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
        if (avx2_supported()) return &avx2_kernel;
#endif
        throw ConfigError("avx2 kernel not available on this CPU");
    case KernelChoice::Neon:
#if defined(__aarch64__)
        return &neon_kernel;
#else
        throw ConfigError("neon kernel not available on this CPU");
#endif
    case KernelChoice::Auto:
        break;
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_supported()) return &avx2_kernel;
#elif defined(__aarch64__)
    return &neon_kernel;
#endif
    return &scalar_kernel;
}

const char* kernel_name(KernelFn fn) {
#if defined(__x86_64__) || defined(_M_X64)
    if (fn == &avx2_kernel) return "avx2";
#endif
#if defined(__aarch64__)
    if (fn == &neon_kernel) return "neon";
#endif
    if (fn == &scalar_kernel) return "scalar";
    return "unknown";
}

} // namespace monodromy
