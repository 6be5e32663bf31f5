#pragma once

#include <stdexcept>
#include <string>

namespace semitsp {

// Tag for every domain failure. The CLI maps these to exit code 2; tests
// match on the tag instead of parsing message text.
enum class Errc {
  AsymmetricWeights,
  NonzeroDiagonal,
  NonpositiveWeight,
  TooFewVertices,
  IndexOutOfRange,
  NotAPermutation,
  InstanceTooLarge,
  NotSpanning,
  RootNotInTree,
  MalformedTraversal,
  OddVertexCount,
  SubsetTooLarge,
  OddCardinality,
  NotCycleFree,
  OddDegreeVertex,
  DisconnectedMultigraph,
  BadStartVertex,
  EdgeNotInTree,
  TreeTooSmall,
  BadConfig,
  EmptyRecords,
  IoFailure,
  MalformedInput,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& message);

}  // namespace semitsp
