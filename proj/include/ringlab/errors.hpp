#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringlab {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed constructor input: wrong table dimensions, wrong coordinate
/// arity, or a coordinate outside its canonical range.
class BadShape : public Error {
public:
  explicit BadShape(const std::string& what) : Error("bad shape: " + what) {}
};

/// Structure constant incompatible with the cyclic orders: n_i * c_ij != 0.
class OrderIncompatible : public Error {
public:
  OrderIncompatible(std::size_t i, std::size_t j)
      : Error("structure constant at (" + std::to_string(i + 1) + "," +
              std::to_string(j + 1) + ") is not annihilated by the factor orders"),
        i(i), j(j) {}
  std::size_t i, j;
};

/// Generator associativity (e_i e_j) e_l == e_i (e_j e_l) failed.
class NonAssociative : public Error {
public:
  NonAssociative(std::size_t i, std::size_t j, std::size_t l)
      : Error("generator triple (" + std::to_string(i + 1) + "," +
              std::to_string(j + 1) + "," + std::to_string(l + 1) +
              ") violates associativity"),
        i(i), j(j), l(l) {}
  std::size_t i, j, l;
};

/// Mixed elements of two different additive groups.
class GroupMismatch : public Error {
public:
  GroupMismatch() : Error("elements belong to different groups") {}
};

class TooLarge : public Error {
public:
  explicit TooLarge(const std::string& what) : Error("too large: " + what) {}
};

class UnsupportedParameter : public Error {
public:
  explicit UnsupportedParameter(const std::string& what)
      : Error("unsupported parameter: " + what) {}
};

class BaseNotUnital : public Error {
public:
  explicit BaseNotUnital(const std::string& name)
      : Error("base ring " + name + " has no two-sided identity") {}
};

class BadInterval : public Error {
public:
  BadInterval() : Error("interval endpoints must satisfy a < b") {}
};

class EmptyInput : public Error {
public:
  explicit EmptyInput(const std::string& what) : Error("empty input: " + what) {}
};

/// A piecewise function whose pieces do not meet continuously, or whose
/// boundary values are nonzero.
class DiscontinuousInput : public Error {
public:
  explicit DiscontinuousInput(const std::string& what)
      : Error("discontinuous: " + what) {}
};

class NotIdempotentInput : public Error {
public:
  explicit NotIdempotentInput(const std::string& what)
      : Error("not an admissible idempotent: " + what) {}
};

class NotOrthogonal : public Error {
public:
  NotOrthogonal(std::size_t i, std::size_t j)
      : Error("family members " + std::to_string(i) + " and " +
              std::to_string(j) + " are not orthogonal"),
        i(i), j(j) {}
  std::size_t i, j;
};

class NotCommuting : public Error {
public:
  NotCommuting() : Error("the two idempotents do not commute") {}
};

/// A unit/quasi-inverse oracle could not serve a request; carries the
/// rendered element it failed on.
class OracleFailed : public Error {
public:
  explicit OracleFailed(const std::string& element)
      : Error("oracle failed at " + element), element(element) {}
  std::string element;
};

class NotRegularAt : public Error {
public:
  explicit NotRegularAt(const std::string& element)
      : Error("no quasi-inverse exists for " + element), element(element) {}
  std::string element;
};

/// A witness algorithm's stated hypothesis was refuted by search.
class HypothesisFailed : public Error {
public:
  explicit HypothesisFailed(const std::string& what)
      : Error("hypothesis failed: " + what) {}
};

/// An identity that the construction guarantees did not hold at runtime.
class InternalCheckFailed : public Error {
public:
  explicit InternalCheckFailed(const std::string& what)
      : Error("internal check failed: " + what) {}
};

class SyntaxError : public Error {
public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line(line), column(column) {}
  std::size_t line, column;
};

class MissingProduct : public Error {
public:
  MissingProduct(std::size_t i, std::size_t j)
      : Error("no product declared for generators e" + std::to_string(i + 1) +
              " e" + std::to_string(j + 1) + " and no default"),
        i(i), j(j) {}
  std::size_t i, j;
};

class ArityMismatch : public Error {
public:
  ArityMismatch(std::size_t expected, std::size_t got)
      : Error("expected " + std::to_string(expected) + " coordinates, got " +
              std::to_string(got)),
        expected(expected), got(got) {}
  std::size_t expected, got;
};

}  // namespace ringlab
