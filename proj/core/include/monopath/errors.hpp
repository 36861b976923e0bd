#pragma once

#include <stdexcept>
#include <string>

namespace monopath {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input documents: malformed JSON, bad ranges, unknown names.
struct ParseError : Error {
  using Error::Error;
};

// A Polytope violating its structural invariants (face edges missing from
// the edge list, Euler failure in dim 3, repeated vertices in a cycle, ...).
struct InvalidPolytope : Error {
  using Error::Error;
};

// Two vertices share an f-value, or a vector-form functional was given for
// a polytope without coordinates.
struct NonGenericFunctional : Error {
  using Error::Error;
};

// Order-form functional that is not a permutation of 0..n-1.
struct OrderArityMismatch : Error {
  using Error::Error;
};

// Operation parameters outside their documented ranges.
struct BadParams : Error {
  using Error::Error;
};

// Family parameters outside the generator's valid range.
struct InvalidSpec : Error {
  using Error::Error;
};

struct UnknownBound : Error {
  using Error::Error;
};

// h-vector requested for a polytope that is not simple.
struct NotSimple : Error {
  using Error::Error;
};

// Counting requires exactly one global source and sink.
struct NotSingleSourceSink : Error {
  using Error::Error;
};

// A non-sink vertex with outdegree zero makes the arborescence product
// meaningless; only malformed orientations reach this.
struct ZeroOutdegreeNonSink : Error {
  using Error::Error;
};

// Enumeration or graph construction would exceed the configured cap.
struct CapExceeded : Error {
  using Error::Error;
};

// Flip-graph operations on a polytope with an empty 2-face list.
struct NoFaces : Error {
  using Error::Error;
};

// A 2-face without a unique source/sink, so its two chains are undefined.
struct NotLpAdmissibleFace : Error {
  using Error::Error;
};

// Distance/diameter queries on a flip graph that fell apart.
struct Disconnected : Error {
  using Error::Error;
};

// A vertex sequence that is not a monotone path of the orientation.
struct NotAPath : Error {
  using Error::Error;
};

// Flip walk replay hit a face whose chains do not match the current path.
struct IllegalFlip : Error {
  int index;  // 0-based position in the face sequence
  IllegalFlip(int idx, const std::string& what) : Error(what), index(idx) {}
};

// Fiber machinery is defined here for 3-dimensional polytopes only.
struct NotDim3 : Error {
  using Error::Error;
};

// Orientation failed validate_lp_admissible where admissibility is required.
struct NotLpAdmissible : Error {
  using Error::Error;
};

// A slab-node sequence violating the compatibility conditions.
struct IncompatibleSequence : Error {
  using Error::Error;
};

}  // namespace monopath
