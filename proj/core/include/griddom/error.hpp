#pragma once

#include <stdexcept>
#include <string>

namespace griddom {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A vertex or placement lies outside the grid it is used with.
class BoundsError : public Error
{
public:
    using Error::Error;
};

/// Input data (a coloring, a certificate, a document) violates its invariants.
class ValidationError : public Error
{
public:
    using Error::Error;
};

/// An operation was called with parameters outside its legal range.
class ParameterError : public Error
{
public:
    using Error::Error;
};

/// The planner has no construction for the requested grid shape.
class UnsupportedShape : public Error
{
public:
    UnsupportedShape(int rows, int cols, int k, const std::string & reason) :
        Error("unsupported shape G(" + std::to_string(rows) + "," + std::to_string(cols) + ") for k=" +
              std::to_string(k) + ": " + reason),
        rows_(rows), cols_(cols), k_(k), reason_(reason)
    {
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    int k() const noexcept { return k_; }
    const std::string & reason() const noexcept { return reason_; }

private:
    int rows_, cols_, k_;
    std::string reason_;
};

/// Two stamped blocks disagree on a shared cell. Never raised for planner output.
class OverlapConflict : public Error
{
public:
    OverlapConflict(int row, int col, int existing, int incoming) :
        Error("overlap conflict at (" + std::to_string(row) + "," + std::to_string(col) + "): colored " +
              std::to_string(existing) + ", later block wants " + std::to_string(incoming)),
        row_(row), col_(col), existing_(existing), incoming_(incoming)
    {
    }

    int row() const noexcept { return row_; }
    int col() const noexcept { return col_; }
    int existing() const noexcept { return existing_; }
    int incoming() const noexcept { return incoming_; }

private:
    int row_, col_, existing_, incoming_;
};

} // namespace griddom
