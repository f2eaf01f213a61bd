#pragma once

#include <stdexcept>
#include <string>

namespace beltlab {

enum class Errc {
  bad_vertex,
  frozen_vertex,
  division_by_zero,
  not_bipartite,
  bad_rank,
  affine_unsupported,
  missing_metadata,
  color_clash,
  index_out_of_window,
  too_large,
  degenerate,
  degenerate_input,
  genericity_failure,
  insufficient_data,
  bad_input,
  internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::bad_vertex: return "BadVertex";
    case Errc::frozen_vertex: return "FrozenVertex";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::not_bipartite: return "NotBipartite";
    case Errc::bad_rank: return "BadRank";
    case Errc::affine_unsupported: return "AffineUnsupported";
    case Errc::missing_metadata: return "MissingMetadata";
    case Errc::color_clash: return "ColorClash";
    case Errc::index_out_of_window: return "IndexOutOfWindow";
    case Errc::too_large: return "TooLarge";
    case Errc::degenerate: return "Degenerate";
    case Errc::degenerate_input: return "DegenerateInput";
    case Errc::genericity_failure: return "GenericityFailure";
    case Errc::insufficient_data: return "InsufficientData";
    case Errc::bad_input: return "BadInput";
    case Errc::internal: return "InternalError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        message_(std::move(message)) {}

  Errc code() const { return code_; }
  const std::string& message() const { return message_; }

 private:
  Errc code_;
  std::string message_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool cond, Errc code, const std::string& message) {
  if (!cond) fail(code, message);
}

// Consistency checks on computed state; a failure here is a bug, not bad input.
inline void require_internal(bool cond, const std::string& message) {
  if (!cond) fail(Errc::internal, message);
}

}  // namespace beltlab
