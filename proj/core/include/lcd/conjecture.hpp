#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lcd/linear_code.hpp"

namespace lcd {

/// A pair of coordinates (0-based) and the code punctured on both.
struct PunctureWitness {
  std::size_t u = 0;
  std::size_t v = 0;
  LinearCode punctured;
  bool lcd = false;
  std::size_t dmin = 0;
};

/// LCD pairs (u, v) for a fixed u: v runs over the support of the hull vector
/// of C punctured at u, which is the sum of the orthonormal basis rows having
/// a 1 at u. Requires C to be LCD_oe with k >= 2 and d >= 3; at least d - 1
/// witnesses are returned.
std::vector<PunctureWitness> good_puncture_pairs(const LinearCode& c, std::size_t u);
/// Same, with the distance of C already known.
std::vector<PunctureWitness> good_puncture_pairs(const LinearCode& c, std::size_t u, std::size_t d);

/// Span of the weight-(d-2) codewords of the punctured code (zero code if none).
LinearCode min_weight_span_punctured(const PunctureWitness& w, std::size_t d);

/// Appends the column y to the stored generator of an LCD_eo code. The result
/// is LCD for every y; a symplectic basis is used to certify it.
LinearCode column_append_even(const LinearCode& c, const BitVector& y);

/// Appends (y_prefix, y_k) to a generator of an odd-like LCD code whose last
/// row is orthogonal to the others, choosing y_k so the result is LCD.
LinearCode column_append_odd(const LinearCode& c, const BitVector& y_prefix);
/// The bit column_append_odd would choose.
bool column_append_odd_last_bit(const LinearCode& c, const BitVector& y_prefix);

/// Extends the punctured code of an LCD witness by one coordinate to an
/// [n, k] LCD code whose weight-(d-2) words all gain a trailing 1. Rejects
/// span_d2 containing the all-one vector. The distance is left to the caller.
LinearCode extend_after_puncture(const PunctureWitness& w, const LinearCode& span_d2);

struct TraceStep {
  std::string step;
  nlohmann::json detail;
};

enum class StepDownRoute { padded_puncture, extension };

std::string to_string(StepDownRoute route);

struct ConjectureCertificate {
  std::size_t input_length = 0;  // n + 1
  std::size_t dimension = 0;
  std::size_t input_distance = 0;
  StepDownRoute route = StepDownRoute::padded_puncture;
  LinearCode output;
  std::size_t output_distance = 0;
  std::size_t u = 0;
  std::size_t v = 0;
  /// Descents through the case (2)(ii) decomposition.
  std::size_t recursion_depth = 0;
  /// The proof's candidate pair failed the direct check and a scan was needed.
  bool used_fallback = false;
  std::vector<TraceStep> trace;
};

/// From an [n+1, k, d] LCD_oe code with k >= 2, d >= 3, an [n, k, >= d-1] LCD
/// code, re-verified before returning.
ConjectureCertificate certify_step_down(const LinearCode& c);

/// One JSON object per line: a header, then the trace steps.
std::string to_json_lines(const ConjectureCertificate& cert);

}  // namespace lcd
