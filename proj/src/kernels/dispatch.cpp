#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "kernels_impl.hpp"

namespace trifree::kernels {

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool available(Isa isa) {
  if (isa == Isa::Scalar) return true;
#if defined(__x86_64__) || defined(_M_X64)
  static const bool has_avx2 = detail::avx2_compiled() && __builtin_cpu_supports("avx2");
  return has_avx2;
#else
  return false;
#endif
}

const KernelTable& table(Isa isa) {
  if (!available(isa)) throw std::runtime_error("kernel variant not available: " + std::string(to_string(isa)));
  return isa == Isa::Avx2 ? detail::avx2_table() : detail::scalar_table();
}

Isa active() {
  static const Isa chosen = [] {
    const char* forced = std::getenv("TRIFREE_SIMD");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return Isa::Scalar;
    return available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
  }();
  return chosen;
}

const KernelTable& active_table() {
  static const KernelTable& t = table(active());
  return t;
}

namespace {

void check_order(std::size_t n) {
  if (n > 64) throw std::invalid_argument("bit-row kernels need order <= 64");
}

}  // namespace

void degrees(std::span<const std::uint64_t> rows, std::span<int> out, std::uint64_t mask) {
  check_order(rows.size());
  if (out.size() < rows.size()) throw std::invalid_argument("degree output too short");
  active_table().degrees(rows.data(), static_cast<int>(rows.size()), mask & full_mask(static_cast<int>(rows.size())),
                         out.data());
}

std::int64_t count_c4(std::span<const std::uint64_t> rows, std::uint64_t mask) {
  check_order(rows.size());
  return active_table().common_pair_sum(rows.data(), static_cast<int>(rows.size()),
                                        mask & full_mask(static_cast<int>(rows.size()))) / 2;
}

void c4_through(std::span<const std::uint64_t> rows, std::span<std::int64_t> out, std::uint64_t mask) {
  check_order(rows.size());
  if (out.size() < rows.size()) throw std::invalid_argument("c4 output too short");
  active_table().c4_through(rows.data(), static_cast<int>(rows.size()),
                            mask & full_mask(static_cast<int>(rows.size())), out.data());
}

std::int64_t count_triangles(std::span<const std::uint64_t> rows, std::uint64_t mask) {
  check_order(rows.size());
  return active_table().triangle_walks(rows.data(), static_cast<int>(rows.size()),
                                       mask & full_mask(static_cast<int>(rows.size()))) / 6;
}

}  // namespace trifree::kernels
