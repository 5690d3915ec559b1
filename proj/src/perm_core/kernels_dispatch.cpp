#include <atomic>
#include <cstdlib>
#include <string>

#include "picc/errors.hpp"
#include "picc/kernels.hpp"

namespace picc::kernels {

const KernelTable* avx2_kernels_compiled();

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* choose_default() {
  if (const char* env = std::getenv("PICC_ISA")) {
    if (std::string(env) == "scalar") return &scalar_kernels();
  }
  if (const KernelTable* t = avx2_kernels()) return t;
  return &scalar_kernels();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{choose_default()};
  return table;
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const KernelTable* table =
      cpu_has_avx2() ? avx2_kernels_compiled() : nullptr;
  return table;
}

const KernelTable& active() {
  return *current().load(std::memory_order_acquire);
}

void select(Isa isa) {
  const KernelTable* t = nullptr;
  switch (isa) {
    case Isa::scalar:
      t = &scalar_kernels();
      break;
    case Isa::avx2:
      t = avx2_kernels();
      break;
  }
  if (t == nullptr)
    throw InvalidArgument("kernel variant unavailable: " +
                          std::string(isa_name(isa)));
  current().store(t, std::memory_order_release);
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace picc::kernels
