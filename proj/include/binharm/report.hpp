#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "binharm/exact.hpp"
#include "binharm/identities.hpp"
#include "binharm/padic.hpp"
#include "binharm/ratfun.hpp"
#include "binharm/sweep.hpp"

namespace binharm {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);  // "num/den"
Json to_json(const Residue& r);   // {"value": v, "modulus": p^k}
Json to_json(const IdentityParams& params);
Json to_json(const IdentityReport& report);
Json to_json(const PFD& pfd);
Json to_json(const PfdCheck& check);
Json to_json(const SuperCongruenceReport& report);
Json to_json(const SkippedCase& skipped);

enum class Format { json, csv, text };
Format parse_format(const std::string& name);

// Nested objects become dotted columns, arrays are embedded as compact JSON.
Json flatten(const Json& row);

// A batch of reports sharing one kind. Serialized deterministically.
struct ReportSet {
  std::string kind;
  std::vector<Json> rows;
  std::vector<SkippedCase> skipped;
  bool single = false;  // one-off command: JSON output is the bare row

  bool all_pass() const;
  std::size_t passed() const;
  void write(std::ostream& out, Format format) const;
};

}  // namespace binharm
