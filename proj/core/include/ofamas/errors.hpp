#pragma once

#include <stdexcept>
#include <string>

namespace ofamas {

// Base class for all library errors. Subclasses map onto the CLI exit-code
// families: usage/config (2), data/parse/structure/checkpoint (3),
// numeric/dimension/contract (4), transport (5).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Tensor/operation shape mismatch.
class DimensionError : public Error {
public:
  using Error::Error;
};

// Invalid caller-supplied value (empty text, out-of-range size, ...).
class InputError : public Error {
public:
  using Error::Error;
};

// Inconsistent configuration: missing parameters, stage/init mismatch,
// missing script entries.
class ConfigError : public Error {
public:
  using Error::Error;
};

// Bad records or datasets.
class DataError : public Error {
public:
  using Error::Error;
};

// Malformed textual input (edge strings, JSONL lines).
class ParseError : public Error {
public:
  using Error::Error;
};

// Graph-structural violations detected at runtime (cycles in raw input).
class StructureError : public Error {
public:
  using Error::Error;
};

// NaN/Inf or other numeric breakdown.
class NumericError : public Error {
public:
  using Error::Error;
};

// HTTP/transport failures talking to external services.
class TransportError : public Error {
public:
  using Error::Error;
};

// Checkpoint format or shape mismatches.
class CheckpointError : public Error {
public:
  using Error::Error;
};

// Internal contract violations (API misuse).
class ContractError : public Error {
public:
  using Error::Error;
};

// Command-line usage errors.
class UsageError : public Error {
public:
  using Error::Error;
};

} // namespace ofamas
