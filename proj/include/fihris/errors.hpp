#pragma once

#include <stdexcept>
#include <string>

namespace fihris {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad configuration (missing stopword file, invalid flag combination).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Corpus ingestion cannot proceed at all (empty root, unreadable root).
class IngestError : public Error {
public:
    using Error::Error;
};

/// Index construction rejected its input (duplicate doc_id, empty stream).
class BuildError : public Error {
public:
    using Error::Error;
};

/// Base for index/model file problems; loaders raise one of the
/// distinct subclasses below.
class IndexIoError : public Error {
public:
    using Error::Error;
};

class FileFormatError : public IndexIoError {  // not our file at all
public:
    using IndexIoError::IndexIoError;
};

class VersionMismatchError : public IndexIoError {
public:
    using IndexIoError::IndexIoError;
};

class ChecksumError : public IndexIoError {
public:
    using IndexIoError::IndexIoError;
};

class TruncatedFileError : public IndexIoError {
public:
    using IndexIoError::IndexIoError;
};

/// Query analyzed to zero terms.
class EmptyQueryError : public Error {
public:
    using Error::Error;
};

/// Query names a category absent from the index.
class UnknownCategoryError : public Error {
public:
    using Error::Error;
};

/// Classifier training rejected its input (e.g. single-category index).
class TrainingError : public Error {
public:
    using Error::Error;
};

/// KNN query vectorized to zero (no usable signal).
class NoSignalError : public Error {
public:
    using Error::Error;
};

/// Evaluation input problem (bad qrels line, unknown doc id, empty
/// relevant set).
class EvalError : public Error {
public:
    using Error::Error;
};

}  // namespace fihris
