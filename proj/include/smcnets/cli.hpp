#pragma once

#include <string>
#include <vector>

namespace smcnets::cli {

inline constexpr int kOk = 0;
inline constexpr int kFalsified = 1;
inline constexpr int kUnknown = 2;
inline constexpr int kUsage = 64;
inline constexpr int kDataError = 65;

struct Result {
  int status = kOk;
  std::string out;
  std::string err;
};

/// Runs one command; `args` excludes the program name.
///   check THEORY TERM
///   net THEORY TERM [--json|--dot]
///   render THEORY TERM
///   compose THEORY TERM TERM
///   correct NETFILE [--theory THEORY] [--explain]
///   equal THEORY TERM TERM [--depth N]
///   switchings THEORY TERM [--count]
/// A THEORY that is not an existing file is looked up among the bundled
/// fixture theories.
Result run(const std::vector<std::string>& args);

}  // namespace smcnets::cli
