#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sslab {

enum class Errc {
  kInvalidParameter,
  kParse,
  kCapExceeded,
  kNoEdges,
  kNotConverged,
  kRegime,
  kPatternTooLarge,
  kBudgetExceeded,
  kNotBipartite,
  kDegenerate,
  kNotHeavy,
  kTooDelocalized,
  kNotPartition,
  kEmptyMatrix,
  kInvariant,
};

const char* errc_name(Errc code);

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(Errc::kParse, "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class CapExceeded : public Error {
 public:
  CapExceeded(std::string what_size, const std::string& what)
      : Error(Errc::kCapExceeded, what), size_(std::move(what_size)) {}
  /// Would-be size in decimal (may exceed 64 bits).
  const std::string& size() const noexcept { return size_; }

 private:
  std::string size_;
};

class NotConverged : public Error {
 public:
  NotConverged(double residual, const std::string& what)
      : Error(Errc::kNotConverged, what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(double estimated_work, const std::string& what)
      : Error(Errc::kBudgetExceeded, what), work_(estimated_work) {}
  double estimated_work() const noexcept { return work_; }

 private:
  double work_;
};

class NotHeavy : public Error {
 public:
  NotHeavy(std::vector<std::pair<std::uint32_t, std::uint32_t>> edges,
           const std::string& what)
      : Error(Errc::kNotHeavy, what), edges_(std::move(edges)) {}
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const {
    return edges_;
  }

 private:
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
};

class TooDelocalized : public Error {
 public:
  TooDelocalized(long long levels, long long i_lo, long long i_hi,
                 long long ell, const std::string& what)
      : Error(Errc::kTooDelocalized, what),
        levels_(levels), i_lo_(i_lo), i_hi_(i_hi), ell_(ell) {}
  long long levels() const noexcept { return levels_; }
  long long interval_lo() const noexcept { return i_lo_; }
  long long interval_hi() const noexcept { return i_hi_; }
  long long ell() const noexcept { return ell_; }

 private:
  long long levels_, i_lo_, i_hi_, ell_;
};

}  // namespace sslab
