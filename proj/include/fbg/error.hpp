#ifndef FBG_ERROR_HPP
#define FBG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fbg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands drawn from different frame instances.
class InstanceMismatch : public Error {
public:
    using Error::Error;
};

/// A degree that does not belong to the carrier of its frame.
class DegreeOutOfRange : public Error {
public:
    using Error::Error;
};

/// Composition or comparison across interfaces that do not line up.
class InterfaceMismatch : public Error {
public:
    using Error::Error;
};

/// Operands whose node or edge supports intersect.
class SupportOverlap : public Error {
public:
    using Error::Error;
};

/// Tensor operands sharing an inner or outer name.
class NameClash : public Error {
public:
    using Error::Error;
};

/// Two signatures assign different arities to one control.
class SignatureConflict : public Error {
public:
    using Error::Error;
};

/// defuzzify() on a structure that is not functional at degree top.
class NotCrisp : public Error {
public:
    using Error::Error;
};

/// A support translation that is not a bijection, or a fuzzy one with
/// entries outside the supports it relates.
class MalformedTranslation : public Error {
public:
    using Error::Error;
};

/// Arrows whose endpoints or payloads do not compose.
class NotComposable : public Error {
public:
    using Error::Error;
};

/// A graph name that a document does not define, or a graph without the
/// requested part.
class UnknownGraph : public Error {
public:
    using Error::Error;
};

} // namespace fbg

#endif
