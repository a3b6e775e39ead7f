#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "khinlab/constants.hpp"
#include "khinlab/forms.hpp"
#include "khinlab/moments.hpp"
#include "khinlab/witnesses.hpp"

namespace khinlab::io {

using Json = nlohmann::ordered_json;

/// Serializes with every floating-point number printed to 17 significant
/// digits, so binary64 values survive a round trip. Non-finite numbers
/// become null.
std::string dump_json(const Json& value, int indent = 2);

/// {"shape": [N1, ..., Nm], "entries": [...]}, entries row-major.
CoefficientTensor tensor_from_json(const Json& doc);
Json tensor_to_json(const CoefficientTensor& tensor);

struct TensorFile {
    CoefficientTensor tensor;
    std::string hash; ///< FNV-1a 64 of the raw file bytes
};

/// Throws ParseError when the file is missing or malformed.
TensorFile read_tensor_file(const std::filesystem::path& path);

std::string fnv1a_hex(std::string_view bytes);

Json exponent_to_json(Exponent p);

Json to_json(const MomentResult& result);
Json to_json(const WitnessReport& report);
Json to_json(const InequalityReport& report);
Json to_json(const HaagerupConstant& constant);

/// RFC 4180 CSV (CRLF line ends) with header N,l2,moment,ratio,bound.
std::string witness_csv(const std::vector<WitnessReport>& reports);

/// %.17g rendering used by both the JSON and CSV writers.
std::string format_number(double x);

} // namespace khinlab::io
