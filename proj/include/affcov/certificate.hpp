#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "affcov/bounds.hpp"

namespace affcov {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kCertificateVersion = 1;

struct CertificateMeta {
  std::string construction;
  std::uint64_t seed = 0;
  std::string tool_version = kToolVersion;
  int claimed_bound = 0;
};

/// Serialized drawing plus cover witness. Nothing in here is trusted until
/// verify_certificate has run.
struct CertificateFile {
  int version = kCertificateVersion;
  Drawing drawing;
  CoverWitness witness;
  CertificateMeta meta;
};

CertificateFile make_certificate(const ConstructionResult& r, std::string construction);

/// Deterministic JSON. Coordinates are [num, den] pairs; integers that do
/// not fit in 64 bits are written as decimal strings.
std::string emit_certificate(const CertificateFile& c);
/// Structural parse only. Throws ParseError.
CertificateFile parse_certificate(std::string_view text);

struct CertificateCheck {
  std::optional<VerifiedDrawing> drawing;
  std::optional<Violation> violation;
  /// Witness or claim problem when the drawing itself is fine.
  std::string error;
  int witness_size = 0;

  bool ok() const { return drawing.has_value() && error.empty(); }
  std::string describe() const;
};

/// Re-runs the crossing check, witness validation and the claimed bound.
CertificateCheck verify_certificate(const CertificateFile& c);

std::string bound_report_json(const BoundReport& r);
std::string bound_report_markdown(const BoundReport& r);

}  // namespace affcov
