#pragma once

// JSON forms of the library's values and reports.
//
// A ClassVector is a JSON array of integers, h-coefficient first; its lattice
// is implied by the length. Integers outside the int64 range are written as
// decimal strings, and both forms are accepted on input.

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "rbd/blowdown.hpp"
#include "rbd/cp_chain.hpp"
#include "rbd/search.hpp"
#include "rbd/sw.hpp"

namespace rbd {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

Json to_json(const Integer& x);
Integer integer_from_json(const Json& j);

Json to_json(const ClassVector& v);
ClassVector class_from_json(const Json& j);

Json to_json(const IntMatrix& m);
Json to_json(const Rational& q);

/// {"p": int, "n": int, "classes": [[ints], ...]}
struct ConfigFile {
  long p = 0;
  std::size_t n = 0;
  std::vector<ClassVector> classes;
};
ConfigFile config_from_json(const Json& j);
Json to_json(const ConfigFile& cfg);

Json to_json(const Violation& v);
Json to_json(const VerificationReport& r);
Json to_json(const BlowdownInvariants& inv);
Json to_json(const H1Certificate& c);
Json to_json(const ParityResult& r);
Json to_json(const BlowdownReport& r);
Json to_json(const LiftCertificate& c);
Json to_json(const WallCrossing& w);
Json to_json(const RestrictionReport& r);
Json to_json(const SwCertificate& c);

/// Template file:
/// {"N": int, "p": int, "body_shape": "consecutive-differences" | "free-pairs",
///  "body_start": int?, "body_pairs": [[j, k], ...]?, "tail_bound": int | [ints],
///  "tail_h_range": [lo, hi]?, "symmetry_reduction": bool?}
SearchTemplate template_from_json(const Json& j);
Json to_json(const SearchTemplate& t);

Json read_json_file(const std::filesystem::path& path);

/// Accepts an inline JSON array ("[3,-1,-1]") or the path of a file holding one.
ClassVector read_class_argument(const std::string& arg);

}  // namespace rbd
