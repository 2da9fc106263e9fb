#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ybfuse/linalg/matrix.hpp"

namespace ybfuse {

class UnknownExample : public Error {
 public:
  using Error::Error;
};

// A printed entry replaced by a corrected expression; row and col are
// 1-based.
struct Erratum {
  std::size_t row = 0;
  std::size_t col = 0;
  RationalFunction printed;
  RationalFunction corrected;
  std::string printed_text;
  std::string corrected_text;
  std::string reason;
};

struct Golden {
  std::string id;
  std::string note;
  std::string basis;
  std::string variable;
  bool q_dependent = false;
  RationalFunction prefactor{1};
  FunctionMatrix printed;  // literal transcription, prefactor applied
  FunctionMatrix matrix;   // printed with errata applied
  std::vector<Erratum> errata;
};

std::vector<std::string> example_ids();

// Reads data_dir/golden/<id>.json and evaluates its entries at q.
Golden load_golden(const std::filesystem::path& data_dir, const std::string& id,
                   const Rational& q);

// The matrix computed by the library for a named example.
FunctionMatrix compute_example(const std::string& id, const Rational& q);

struct EntryMismatch {
  std::size_t row = 0;
  std::size_t col = 0;
  RationalFunction computed;
  RationalFunction expected;
};

struct ReproduceResult {
  std::string id;
  Golden golden;
  FunctionMatrix computed;
  bool match = false;  // against golden.matrix
  bool literal_match = false;  // against golden.printed
  // Every erratum must differ from the computation where printed and
  // agree where corrected.
  bool errata_justified = true;
  std::optional<EntryMismatch> mismatch;
  // Extra checks tied to the example, e.g. the transposed-tableau basis.
  std::vector<std::pair<std::string, bool>> extra;
  bool pass() const;
};

std::optional<EntryMismatch> first_mismatch(const FunctionMatrix& computed,
                                            const FunctionMatrix& expected);

ReproduceResult reproduce(const std::filesystem::path& data_dir,
                          const std::string& id, const Rational& q);

}  // namespace ybfuse
