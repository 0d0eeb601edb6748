#include "rankforge/error.hpp"

namespace rankforge {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSingularMatrix: return "SingularMatrix";
    case ErrorKind::kNotSymmetric: return "NotSymmetric";
    case ErrorKind::kNoConvergence: return "NoConvergence";
    case ErrorKind::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::kZeroGames: return "ZeroGames";
    case ErrorKind::kOddTeamCount: return "OddTeamCount";
    case ErrorKind::kNeverConnected: return "NeverConnected";
    case ErrorKind::kNeverNonBipartite: return "NeverNonBipartite";
    case ErrorKind::kInternalMismatch: return "InternalMismatch";
    case ErrorKind::kRawUndefined: return "RawUndefined";
    case ErrorKind::kNotIrreducible: return "NotIrreducible";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
      return 2;
    case ErrorKind::kDisconnectedGraph:
    case ErrorKind::kZeroGames:
    case ErrorKind::kNotIrreducible:
      return 3;
    case ErrorKind::kNoConvergence:
      return 4;
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kOddTeamCount:
    case ErrorKind::kRawUndefined:
      return 5;
    case ErrorKind::kSingularMatrix:
    case ErrorKind::kNotSymmetric:
    case ErrorKind::kInternalMismatch:
    case ErrorKind::kNeverConnected:
    case ErrorKind::kNeverNonBipartite:
      return 1;
  }
  return 1;
}

}  // namespace rankforge
