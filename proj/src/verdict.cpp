#include "monokit/verdict.hpp"

#include "monokit/errors.hpp"

namespace monokit {

namespace {

std::string base_name(VerdictClass c) {
  switch (c) {
    case VerdictClass::Radicals: return "Radicals";
    case VerdictClass::KRadicals: return "KRadicals";
    case VerdictClass::Quadratures: return "Quadratures";
    case VerdictClass::KQuadratures: return "KQuadratures";
    case VerdictClass::GeneralizedQuadratures: return "GeneralizedQuadratures";
  }
  return "?";
}

bool parameterised(VerdictClass c) { return c == VerdictClass::KRadicals || c == VerdictClass::KQuadratures; }

}  // namespace

std::string Verdict::class_name() const {
  if (parameterised(cls)) return base_name(cls) + "(" + std::to_string(k) + ")";
  return base_name(cls);
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Representable: return "Representable";
    case VerdictStatus::StronglyNonRepresentable: return "StronglyNonRepresentable";
    case VerdictStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::pair<VerdictClass, int> parse_verdict_class(const std::string& text) {
  for (auto c : {VerdictClass::Radicals, VerdictClass::KRadicals, VerdictClass::Quadratures,
                 VerdictClass::KQuadratures, VerdictClass::GeneralizedQuadratures}) {
    const std::string name = base_name(c);
    if (!parameterised(c)) {
      if (text == name) return {c, 0};
      continue;
    }
    if (text.size() > name.size() + 2 && text.compare(0, name.size() + 1, name + "(") == 0 && text.back() == ')') {
      try {
        return {c, std::stoi(text.substr(name.size() + 1))};
      } catch (const std::exception&) {
        break;
      }
    }
  }
  throw Error(ErrorKind::ParseError, "unknown verdict class '" + text + "'");
}

const Verdict* find_verdict(const std::vector<Verdict>& vs, VerdictClass cls, int k) {
  for (const auto& v : vs)
    if (v.cls == cls && v.k == k) return &v;
  return nullptr;
}

}  // namespace monokit
