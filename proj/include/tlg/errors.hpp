#pragma once

#include <stdexcept>
#include <string>

namespace tlg {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (shapes, schema, preconditions on data).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A cokernel has torsion where a torsion-free group is required.
class TorsionError : public InputError {
 public:
  using InputError::InputError;
};

/// The origin is not an interior point of a polyhedron that must contain it.
class NotInteriorError : public InputError {
 public:
  using InputError::InputError;
};

/// A polytope expected to have lattice vertices does not.
class NotLatticeError : public InputError {
 public:
  using InputError::InputError;
};

/// Polyhedron is unbounded where a polytope is required.
class UnboundedError : public InputError {
 public:
  using InputError::InputError;
};

/// Polyhedron has empty interior where a full-dimensional set is required.
class EmptyInteriorError : public InputError {
 public:
  using InputError::InputError;
};

/// Ambient dimension exceeds the vertex-enumeration cap.
class DimensionCapError : public InputError {
 public:
  using InputError::InputError;
};

/// Block structure of a sigma-built model is absent or violated.
class BlockStructureError : public InputError {
 public:
  using InputError::InputError;
};

/// A derived object disagrees with what the theory guarantees. Indicates a bug
/// or a violated hypothesis that slipped past validation.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace tlg
