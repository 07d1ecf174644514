// SPDX-License-Identifier: Apache-2.0
// error.hpp -- single exception type with a machine-readable error code

#pragma once

#include <stdexcept>
#include <string>

namespace carlitz {

enum class Errc {
  NonPrimeCharacteristic,
  FieldTooSmall,
  FieldTooLarge,
  InvalidElementCode,
  ZeroInput,
  MNotDividingGroupOrder,
  MalformedForm,
  IndexOutOfRange,
  NotInL1,
  NotAPermutation,
  ConstantG,
  ParameterOutOfRange,
  ZeroCoefficient,
  BudgetExceeded,
  ConfigInvalid,
  IoFailure,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::FieldTooSmall: return "FieldTooSmall";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::InvalidElementCode: return "InvalidElementCode";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::MNotDividingGroupOrder: return "MNotDividingGroupOrder";
    case Errc::MalformedForm: return "MalformedForm";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotInL1: return "NotInL1";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::ConstantG: return "ConstantG";
    case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::ZeroCoefficient: return "ZeroCoefficient";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::IoFailure: return "IoFailure";
  }
  return "UnknownErrc";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace carlitz
