#include "blocklang/error.hpp"

namespace blocklang {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::WrongLength: return "WrongLength";
    case ErrorCode::BadSymbol: return "BadSymbol";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ParamsTooLarge: return "ParamsTooLarge";
    case ErrorCode::ParamsMismatch: return "ParamsMismatch";
    case ErrorCode::EmptyLanguage: return "EmptyLanguage";
    case ErrorCode::NotDeterministic: return "NotDeterministic";
    case ErrorCode::NotRanked: return "NotRanked";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::WidthMismatch: return "WidthMismatch";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::BadParity: return "BadParity";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace blocklang
