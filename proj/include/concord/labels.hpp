#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace concord {

/// Ordinal (dis)agreement label. The order NN < N < O < P < PP is fixed and
/// total; index() exposes the position on that scale.
enum class OrdinalLabel : std::uint8_t { NN = 0, N = 1, O = 2, P = 3, PP = 4 };

inline constexpr std::size_t kNumLabels = 5;

inline constexpr std::array<OrdinalLabel, kNumLabels> kLabelOrder = {
    OrdinalLabel::NN, OrdinalLabel::N, OrdinalLabel::O, OrdinalLabel::P,
    OrdinalLabel::PP};

constexpr std::size_t index_of(OrdinalLabel l) {
  return static_cast<std::size_t>(l);
}

constexpr OrdinalLabel label_at(std::size_t i) {
  return static_cast<OrdinalLabel>(i);
}

constexpr std::string_view to_string(OrdinalLabel l) {
  switch (l) {
    case OrdinalLabel::NN: return "NN";
    case OrdinalLabel::N: return "N";
    case OrdinalLabel::O: return "O";
    case OrdinalLabel::P: return "P";
    case OrdinalLabel::PP: return "PP";
  }
  return "?";
}

inline std::optional<OrdinalLabel> label_from_string(std::string_view s) {
  if (s == "NN") return OrdinalLabel::NN;
  if (s == "N") return OrdinalLabel::N;
  if (s == "O") return OrdinalLabel::O;
  if (s == "P") return OrdinalLabel::P;
  if (s == "PP") return OrdinalLabel::PP;
  return std::nullopt;
}

/// Collapsed test-phase classes: NN,N -> disagreement; P,PP -> agreement;
/// O -> neutral.
enum class AgreementClass : std::uint8_t {
  Disagreement = 0,
  Neutral = 1,
  Agreement = 2
};

constexpr AgreementClass collapse_label(OrdinalLabel l) {
  switch (l) {
    case OrdinalLabel::NN:
    case OrdinalLabel::N: return AgreementClass::Disagreement;
    case OrdinalLabel::O: return AgreementClass::Neutral;
    case OrdinalLabel::P:
    case OrdinalLabel::PP: return AgreementClass::Agreement;
  }
  return AgreementClass::Neutral;
}

constexpr std::string_view to_string(AgreementClass c) {
  switch (c) {
    case AgreementClass::Disagreement: return "disagreement";
    case AgreementClass::Neutral: return "neutral";
    case AgreementClass::Agreement: return "agreement";
  }
  return "?";
}

inline std::optional<AgreementClass> class_from_string(std::string_view s) {
  if (s == "disagreement") return AgreementClass::Disagreement;
  if (s == "neutral") return AgreementClass::Neutral;
  if (s == "agreement") return AgreementClass::Agreement;
  return std::nullopt;
}

}  // namespace concord
