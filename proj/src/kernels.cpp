#include "lrc/kernels.hpp"

#include <atomic>

#if defined(__x86_64__) || defined(_M_X64)
#define LRC_X86 1
#include <immintrin.h>
#else
#define LRC_X86 0
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
#define LRC_NEON 1
#include <arm_neon.h>
#else
#define LRC_NEON 0
#endif

namespace lrc::kernels {

namespace detail {

void xor_words_scalar(uint64_t* dst, const uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

void xor_and_words_scalar(uint64_t* dst, const uint64_t* a, const uint64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= a[i] & b[i];
}

std::size_t popcount_words_scalar(const uint64_t* p, std::size_t n) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(__builtin_popcountll(p[i]));
    return total;
}

std::size_t and_popcount_words_scalar(const uint64_t* a, const uint64_t* b, std::size_t n) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
    return total;
}

bool parity_and_words_scalar(const uint64_t* a, const uint64_t* b, std::size_t n) {
    uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc ^= a[i] & b[i];
    return __builtin_parityll(acc) != 0;
}

bool is_zero_words_scalar(const uint64_t* p, std::size_t n) {
    uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc |= p[i];
    return acc == 0;
}

bool equal_words_scalar(const uint64_t* a, const uint64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

}  // namespace detail

#if LRC_X86

__attribute__((target("avx2"))) static void xor_words_avx2(uint64_t* dst, const uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

__attribute__((target("avx2"))) static void xor_and_words_avx2(uint64_t* dst, const uint64_t* a, const uint64_t* b,
                                                               std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, _mm256_and_si256(x, y)));
    }
    for (; i < n; ++i) dst[i] ^= a[i] & b[i];
}

// Harley-Seal style accumulation is overkill at our row widths; per-word
// popcnt on the extracted lanes already saturates the load ports.
__attribute__((target("avx2"))) static std::size_t popcount_words_avx2(const uint64_t* p, std::size_t n) {
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
        total += static_cast<std::size_t>(__builtin_popcountll(static_cast<uint64_t>(_mm256_extract_epi64(v, 0))));
        total += static_cast<std::size_t>(__builtin_popcountll(static_cast<uint64_t>(_mm256_extract_epi64(v, 1))));
        total += static_cast<std::size_t>(__builtin_popcountll(static_cast<uint64_t>(_mm256_extract_epi64(v, 2))));
        total += static_cast<std::size_t>(__builtin_popcountll(static_cast<uint64_t>(_mm256_extract_epi64(v, 3))));
    }
    for (; i < n; ++i) total += static_cast<std::size_t>(__builtin_popcountll(p[i]));
    return total;
}

__attribute__((target("avx2"))) static std::size_t and_popcount_words_avx2(const uint64_t* a, const uint64_t* b,
                                                                           std::size_t n) {
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i v = _mm256_and_si256(x, y);
        total += static_cast<std::size_t>(__builtin_popcountll(static_cast<uint64_t>(_mm256_extract_epi64(v, 0))));
        total += static_cast<std::size_t>(__builtin_popcountll(static_cast<uint64_t>(_mm256_extract_epi64(v, 1))));
        total += static_cast<std::size_t>(__builtin_popcountll(static_cast<uint64_t>(_mm256_extract_epi64(v, 2))));
        total += static_cast<std::size_t>(__builtin_popcountll(static_cast<uint64_t>(_mm256_extract_epi64(v, 3))));
    }
    for (; i < n; ++i) total += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
    return total;
}

__attribute__((target("avx2"))) static bool parity_and_words_avx2(const uint64_t* a, const uint64_t* b,
                                                                  std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_xor_si256(acc, _mm256_and_si256(x, y));
    }
    uint64_t tail = 0;
    for (; i < n; ++i) tail ^= a[i] & b[i];
    tail ^= static_cast<uint64_t>(_mm256_extract_epi64(acc, 0));
    tail ^= static_cast<uint64_t>(_mm256_extract_epi64(acc, 1));
    tail ^= static_cast<uint64_t>(_mm256_extract_epi64(acc, 2));
    tail ^= static_cast<uint64_t>(_mm256_extract_epi64(acc, 3));
    return __builtin_parityll(tail) != 0;
}

__attribute__((target("avx2"))) static bool is_zero_words_avx2(const uint64_t* p, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i)));
    if (_mm256_testz_si256(acc, acc) == 0) return false;
    for (; i < n; ++i)
        if (p[i] != 0) return false;
    return true;
}

static bool cpu_has_avx2() {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
}

#endif  // LRC_X86

#if LRC_NEON

static void xor_words_neon(uint64_t* dst, const uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t d = vld1q_u64(dst + i);
        uint64x2_t s = vld1q_u64(src + i);
        vst1q_u64(dst + i, veorq_u64(d, s));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

static void xor_and_words_neon(uint64_t* dst, const uint64_t* a, const uint64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t d = vld1q_u64(dst + i);
        uint64x2_t x = vld1q_u64(a + i);
        uint64x2_t y = vld1q_u64(b + i);
        vst1q_u64(dst + i, veorq_u64(d, vandq_u64(x, y)));
    }
    for (; i < n; ++i) dst[i] ^= a[i] & b[i];
}

static std::size_t popcount_words_neon(const uint64_t* p, std::size_t n) {
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint8x16_t v = vreinterpretq_u8_u64(vld1q_u64(p + i));
        total += vaddvq_u8(vcntq_u8(v));
    }
    for (; i < n; ++i) total += static_cast<std::size_t>(__builtin_popcountll(p[i]));
    return total;
}

static std::size_t and_popcount_words_neon(const uint64_t* a, const uint64_t* b, std::size_t n) {
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t v = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        total += vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v)));
    }
    for (; i < n; ++i) total += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
    return total;
}

static bool parity_and_words_neon(const uint64_t* a, const uint64_t* b, std::size_t n) {
    return detail::parity_and_words_scalar(a, b, n);
}

static bool is_zero_words_neon(const uint64_t* p, std::size_t n) {
    return detail::is_zero_words_scalar(p, n);
}

#endif  // LRC_NEON

namespace {

Backend pick_backend() {
#if LRC_X86
    if (cpu_has_avx2()) return Backend::Avx2;
#endif
#if LRC_NEON
    return Backend::Neon;
#endif
    return Backend::Scalar;
}

std::atomic<Backend> g_backend{pick_backend()};

}  // namespace

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

bool force_backend(Backend b) {
    switch (b) {
        case Backend::Scalar:
            break;
        case Backend::Avx2:
#if LRC_X86
            if (!cpu_has_avx2()) return false;
            break;
#else
            return false;
#endif
        case Backend::Neon:
#if LRC_NEON
            break;
#else
            return false;
#endif
    }
    g_backend.store(b, std::memory_order_relaxed);
    return true;
}

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "?";
}

void xor_words(uint64_t* dst, const uint64_t* src, std::size_t n) {
    switch (active_backend()) {
#if LRC_X86
        case Backend::Avx2: xor_words_avx2(dst, src, n); return;
#endif
#if LRC_NEON
        case Backend::Neon: xor_words_neon(dst, src, n); return;
#endif
        default: detail::xor_words_scalar(dst, src, n); return;
    }
}

void xor_and_words(uint64_t* dst, const uint64_t* a, const uint64_t* b, std::size_t n) {
    switch (active_backend()) {
#if LRC_X86
        case Backend::Avx2: xor_and_words_avx2(dst, a, b, n); return;
#endif
#if LRC_NEON
        case Backend::Neon: xor_and_words_neon(dst, a, b, n); return;
#endif
        default: detail::xor_and_words_scalar(dst, a, b, n); return;
    }
}

std::size_t popcount_words(const uint64_t* p, std::size_t n) {
    switch (active_backend()) {
#if LRC_X86
        case Backend::Avx2: return popcount_words_avx2(p, n);
#endif
#if LRC_NEON
        case Backend::Neon: return popcount_words_neon(p, n);
#endif
        default: return detail::popcount_words_scalar(p, n);
    }
}

std::size_t and_popcount_words(const uint64_t* a, const uint64_t* b, std::size_t n) {
    switch (active_backend()) {
#if LRC_X86
        case Backend::Avx2: return and_popcount_words_avx2(a, b, n);
#endif
#if LRC_NEON
        case Backend::Neon: return and_popcount_words_neon(a, b, n);
#endif
        default: return detail::and_popcount_words_scalar(a, b, n);
    }
}

bool parity_and_words(const uint64_t* a, const uint64_t* b, std::size_t n) {
    switch (active_backend()) {
#if LRC_X86
        case Backend::Avx2: return parity_and_words_avx2(a, b, n);
#endif
#if LRC_NEON
        case Backend::Neon: return parity_and_words_neon(a, b, n);
#endif
        default: return detail::parity_and_words_scalar(a, b, n);
    }
}

bool is_zero_words(const uint64_t* p, std::size_t n) {
    switch (active_backend()) {
#if LRC_X86
        case Backend::Avx2: return is_zero_words_avx2(p, n);
#endif
#if LRC_NEON
        case Backend::Neon: return is_zero_words_neon(p, n);
#endif
        default: return detail::is_zero_words_scalar(p, n);
    }
}

bool equal_words(const uint64_t* a, const uint64_t* b, std::size_t n) {
    return detail::equal_words_scalar(a, b, n);
}

}  // namespace lrc::kernels
