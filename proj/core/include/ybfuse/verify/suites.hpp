#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ybfuse/kernels/kernel.hpp"

namespace ybfuse {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  bool pass() const;
  std::size_t failures() const;
};

struct SuiteConfig {
  // Empty: the suite's default sweep.
  std::vector<KernelSpec> kernels;
  // Deformation parameters for the Hecke kinds in default sweeps.
  std::vector<Rational> qs{Rational(2), Rational(3, 2)};
  std::optional<std::size_t> grid;
  std::uint64_t seed = 20240601;
  // Largest tableau size; 0 picks the suite default.
  int max_n = 0;
  std::filesystem::path data_dir;
};

std::vector<std::string> suite_names();

// Throws InvalidArgument for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

SuiteReport base_ybe_suite(const SuiteConfig& config);
SuiteReport fused_ybe_suite(const SuiteConfig& config);
SuiteReport unitarity_suite(const SuiteConfig& config);
SuiteReport invariance_suite(const SuiteConfig& config);
SuiteReport equivalence_suite(const SuiteConfig& config);
SuiteReport schur_weyl_suite(const SuiteConfig& config);
SuiteReport idempotents_suite(const SuiteConfig& config);
SuiteReport nonstandard_suite(const SuiteConfig& config);
SuiteReport orders_suite(const SuiteConfig& config);
SuiteReport golden_suite(const SuiteConfig& config);

}  // namespace ybfuse
