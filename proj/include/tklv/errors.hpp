#pragma once

#include <stdexcept>
#include <string>

namespace tklv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// structural problem in a block file; parameter/kappa are -1 when not applicable
struct ValidationError : Error {
  int parameter;
  int kappa;
  ValidationError(const std::string& what, int param = -1, int kap = -1)
      : Error(what), parameter(param), kappa(kap) {}
};

struct NotAdjacent : Error {
  using Error::Error;
};

struct NotDescent : Error {
  using Error::Error;
};

struct NotApplicable : Error {
  using Error::Error;
};

// a table entry needed by a formula has not been computed yet
struct MissingDependency : Error {
  int row;
  int col;
  MissingDependency(int r, int c)
      : Error("missing P(" + std::to_string(r) + "," + std::to_string(c) + ")"),
        row(r), col(c) {}
};

struct NoSolution : Error {
  using Error::Error;
};

struct ParityError : Error {
  using Error::Error;
};

// two recursion routes disagree, or a solver found the input inconsistent
struct RecursionError : Error {
  using Error::Error;
};

}  // namespace tklv
