#pragma once

#include <stdexcept>
#include <string>

namespace kgstep {

// Broad failure classes; the CLI maps them to process exit codes.
enum class ErrorClass { InvalidInput, Numerical, Io };

class Error : public std::runtime_error {
public:
  Error(ErrorClass cls, const std::string& msg) : std::runtime_error(msg), cls_(cls) {}
  ErrorClass error_class() const noexcept { return cls_; }

private:
  ErrorClass cls_;
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& msg) : Error(ErrorClass::InvalidInput, msg) {}
};

// No propagating incident beam exists (E <= m).
struct NoPropagatingBeam : Error {
  explicit NoPropagatingBeam(const std::string& msg) : Error(ErrorClass::InvalidInput, msg) {}
};

// Operation is not defined in the requested regime.
struct UnsupportedRegime : Error {
  explicit UnsupportedRegime(const std::string& msg) : Error(ErrorClass::InvalidInput, msg) {}
};

// k1 = k2 makes the matching formulas divide by zero.
struct DegenerateMomenta : Error {
  explicit DegenerateMomenta(const std::string& msg) : Error(ErrorClass::InvalidInput, msg) {}
};

// Superposed solutions do not belong to the same scattering problem.
struct InconsistentSolutions : Error {
  explicit InconsistentSolutions(const std::string& msg) : Error(ErrorClass::InvalidInput, msg) {}
};

struct InvalidConfig : Error {
  explicit InvalidConfig(const std::string& msg) : Error(ErrorClass::InvalidInput, msg) {}
};

// Initial packet overlaps the potential step.
struct PacketTooClose : Error {
  explicit PacketTooClose(const std::string& msg) : Error(ErrorClass::InvalidInput, msg) {}
};

struct NumericalBlowup : Error {
  explicit NumericalBlowup(const std::string& msg) : Error(ErrorClass::Numerical, msg) {}
};

struct PacketNeverSeparated : Error {
  explicit PacketNeverSeparated(const std::string& msg) : Error(ErrorClass::Numerical, msg) {}
};

// Field evaluation requested at a source point.
struct SingularPoint : Error {
  explicit SingularPoint(const std::string& msg) : Error(ErrorClass::InvalidInput, msg) {}
};

struct OutOfDomain : Error {
  explicit OutOfDomain(const std::string& msg) : Error(ErrorClass::InvalidInput, msg) {}
};

struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(ErrorClass::Io, msg) {}
};

}  // namespace kgstep
