#pragma once

#include <stdexcept>
#include <string>

namespace stab {

enum class Errc {
  NonRectilinear,
  Collinear,
  SelfIntersecting,
  TooFewVertices,
  NoCommonEndpoint,
  NotAPartition,
  IterationGuardExceeded,
  TooLarge,
  SyntaxError,
  GenerationFailed,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

}  // namespace stab
