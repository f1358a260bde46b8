#include <cstdlib>
#include <string>

#include "trinb/error.hpp"
#include "trinb/kernels.hpp"

namespace trinb::kernels {

namespace {

const KernelSet kScalar{Isa::scalar, detail::masks_scalar, detail::outrank_scalar};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelSet& pick() {
  auto candidates = available();
  if (const char* forced = std::getenv("TRINB_ISA")) {
    for (const KernelSet* k : candidates)
      if (name(k->isa) == forced) return *k;
    throw Error(std::string("TRINB_ISA=") + forced + " is not available on this machine");
  }
  return *candidates.back();
}

}  // namespace

std::string_view name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "?";
}

const KernelSet& scalar() { return kScalar; }

std::vector<const KernelSet*> available() {
  std::vector<const KernelSet*> out{&kScalar};
  if (const KernelSet* k = detail::avx2_set(); k && cpu_has_avx2()) out.push_back(k);
  if (const KernelSet* k = detail::neon_set()) out.push_back(k);
  return out;
}

const KernelSet& active() {
  static const KernelSet& chosen = pick();
  return chosen;
}

}  // namespace trinb::kernels
