#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace ellgen::kernels {

// Code words are bit masks over at most 64 coordinates.

// out[i] = popcount(words[i]).
void popcount_scalar(const std::uint64_t* words, std::uint32_t* out, std::size_t n);
// Number of j in [0, n) with popcount(a ^ words[j]) > popcount(a) + popcount(words[j]).
std::size_t sublinear_violations_scalar(std::uint64_t a, const std::uint64_t* words, std::size_t n);

#if defined(__x86_64__) || defined(__i386__)
void popcount_avx2(const std::uint64_t* words, std::uint32_t* out, std::size_t n);
std::size_t sublinear_violations_avx2(std::uint64_t a, const std::uint64_t* words, std::size_t n);
#endif
#if defined(__aarch64__)
void popcount_neon(const std::uint64_t* words, std::uint32_t* out, std::size_t n);
std::size_t sublinear_violations_neon(std::uint64_t a, const std::uint64_t* words, std::size_t n);
#endif

// Dispatched at first use from the CPU feature flags.
void popcount(const std::uint64_t* words, std::uint32_t* out, std::size_t n);
std::size_t sublinear_violations(std::uint64_t a, const std::uint64_t* words, std::size_t n);
// "avx2", "neon" or "scalar".
std::string active_backend();

}  // namespace ellgen::kernels
