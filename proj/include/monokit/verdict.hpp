#pragma once

#include <map>
#include <string>
#include <vector>

namespace monokit {

enum class VerdictClass { Radicals, KRadicals, Quadratures, KQuadratures, GeneralizedQuadratures };
enum class VerdictStatus { Representable, StronglyNonRepresentable, Inconclusive };

struct Verdict {
  VerdictClass cls = VerdictClass::Radicals;
  /// Parameter of KRadicals / KQuadratures, 0 otherwise.
  int k = 0;
  VerdictStatus status = VerdictStatus::Inconclusive;
  std::string reason;
  /// Machine-readable backing for the reason (group order, signature, witness, ...).
  std::map<std::string, std::string> fields;

  /// "Quadratures", "KRadicals(5)", ...
  std::string class_name() const;
};

std::string to_string(VerdictStatus s);
/// Parses the output of Verdict::class_name; throws ParseError.
std::pair<VerdictClass, int> parse_verdict_class(const std::string& text);

/// First verdict with the given class (and k), or nullptr.
const Verdict* find_verdict(const std::vector<Verdict>& vs, VerdictClass cls, int k = 0);

}  // namespace monokit
