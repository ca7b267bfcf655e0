#pragma once

#include <cstddef>
#include <cstdint>

// Bit-packed GF(2) word kernels. Every matrix/vector routine in the library
// funnels through these, so they come in a scalar reference version plus
// SIMD variants picked at runtime. The scalar versions are the semantic
// ground truth; the SIMD ones are equivalence-tested against them.

namespace lrc::kernels {

enum class Backend {
    Scalar,
    Avx2,
    Neon,
};

// Backend currently in use (auto-detected on first call).
Backend active_backend();

// Force a specific backend (tests). Returns false if unsupported on this CPU.
bool force_backend(Backend b);

const char* backend_name(Backend b);

// dst ^= src, n words
void xor_words(uint64_t* dst, const uint64_t* src, std::size_t n);

// dst ^= a & b, n words
void xor_and_words(uint64_t* dst, const uint64_t* a, const uint64_t* b, std::size_t n);

// popcount over n words
std::size_t popcount_words(const uint64_t* p, std::size_t n);

// popcount of a & b over n words (no writes)
std::size_t and_popcount_words(const uint64_t* a, const uint64_t* b, std::size_t n);

// parity of popcount(a & b); GF(2) inner product of packed vectors
bool parity_and_words(const uint64_t* a, const uint64_t* b, std::size_t n);

bool is_zero_words(const uint64_t* p, std::size_t n);

bool equal_words(const uint64_t* a, const uint64_t* b, std::size_t n);

namespace detail {
// Scalar reference implementations, always available (used as oracle in tests).
void xor_words_scalar(uint64_t* dst, const uint64_t* src, std::size_t n);
void xor_and_words_scalar(uint64_t* dst, const uint64_t* a, const uint64_t* b, std::size_t n);
std::size_t popcount_words_scalar(const uint64_t* p, std::size_t n);
std::size_t and_popcount_words_scalar(const uint64_t* a, const uint64_t* b, std::size_t n);
bool parity_and_words_scalar(const uint64_t* a, const uint64_t* b, std::size_t n);
bool is_zero_words_scalar(const uint64_t* p, std::size_t n);
bool equal_words_scalar(const uint64_t* a, const uint64_t* b, std::size_t n);
}  // namespace detail

}  // namespace lrc::kernels
