#include "binharm/report.hpp"

#include <algorithm>

#include "binharm/errors.hpp"

namespace binharm {

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const Residue& r) {
  Json j;
  j["value"] = r.value();
  j["modulus"] = r.modulus();
  return j;
}

Json to_json(const IdentityParams& p) {
  Json j;
  j["kind"] = to_string(p.kind);
  switch (p.kind) {
    case IdentityKind::chu:
      j["n"] = p.n;
      break;
    case IdentityKind::thm1:
      j["m"] = p.m;
      j["n"] = p.n;
      break;
    case IdentityKind::thm2:
      j["l"] = p.l;
      j["m"] = p.m;
      j["n"] = p.n;
      j["c1"] = to_json(p.c1);
      j["c2"] = to_json(p.c2);
      break;
  }
  return j;
}

Json to_json(const IdentityReport& report) {
  Json j = to_json(report.params);
  j["lhs"] = to_json(report.lhs);
  j["expected"] = to_json(report.expected);
  if (report.closed_limit) j["closed_limit"] = to_json(*report.closed_limit);
  if (report.oracle_limit) j["oracle_limit"] = to_json(*report.oracle_limit);
  j["pass"] = report.pass;
  return j;
}

Json to_json(const PFD& pfd) {
  Json j;
  j["n"] = pfd.n;
  j["m"] = pfd.m;
  j["A"] = to_json(pfd.a);
  Json quad = Json::array();
  for (const auto& t : pfd.quad) quad.push_back(Json{{"k", t.k}, {"B", to_json(t.b)}, {"C", to_json(t.c)}});
  Json simple = Json::array();
  for (const auto& t : pfd.simple) simple.push_back(Json{{"k", t.k}, {"D", to_json(t.d)}});
  j["quad"] = std::move(quad);
  j["simple"] = std::move(simple);
  return j;
}

Json to_json(const PfdCheck& check) {
  Json j = to_json(check.params);
  j["closed"] = to_json(check.closed);
  j["oracle"] = to_json(check.oracle);
  j["coefficients_match"] = check.coefficients_match;
  j["points_checked"] = check.points_checked;
  j["recombination_ok"] = check.recombination_ok;
  j["pass"] = check.pass();
  return j;
}

Json to_json(const SuperCongruenceReport& report) {
  Json j;
  j["d"] = report.d;
  j["r"] = report.r;
  j["p"] = report.p;
  j["modulus"] = report.lhs.modulus();
  j["lhs"] = to_json(report.lhs);
  j["rhs"] = to_json(report.rhs);
  j["s_p"] = to_json(report.s_p);
  j["hypothesis_holds"] = report.hypothesis_holds;
  j["pass"] = report.pass;
  return j;
}

Json to_json(const SkippedCase& skipped) { return Json{{"case", skipped.params}, {"reason", skipped.reason}}; }

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw InvalidShape("unknown format '" + name + "'");
}

namespace {

void flatten_into(const Json& value, const std::string& prefix, Json& out) {
  if (value.is_object()) {
    for (const auto& [key, inner] : value.items()) {
      flatten_into(inner, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (value.is_array()) {
    out[prefix] = value.dump();
  } else {
    out[prefix] = value;
  }
}

std::string cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  return s;
}

}  // namespace

Json flatten(const Json& row) {
  Json out = Json::object();
  flatten_into(row, "", out);
  return out;
}

bool ReportSet::all_pass() const { return passed() == rows.size(); }

std::size_t ReportSet::passed() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const Json& r) {
    return r.contains("pass") && r["pass"].is_boolean() && r["pass"].get<bool>();
  }));
}

void ReportSet::write(std::ostream& out, Format format) const {
  const std::size_t pass_count = passed();
  switch (format) {
    case Format::json: {
      if (single && rows.size() == 1) {
        out << rows.front().dump() << '\n';
        return;
      }
      Json doc;
      doc["kind"] = kind;
      doc["reports"] = rows;
      Json skip = Json::array();
      for (const auto& s : skipped) skip.push_back(to_json(s));
      doc["skipped"] = std::move(skip);
      doc["summary"] = Json{{"cases", rows.size()},
                            {"passed", pass_count},
                            {"failed", rows.size() - pass_count},
                            {"skipped", skipped.size()}};
      out << doc.dump(2) << '\n';
      return;
    }
    case Format::csv: {
      std::vector<std::string> header;
      std::vector<Json> flat;
      for (const Json& r : rows) {
        flat.push_back(flatten(r));
        for (const auto& [key, _] : flat.back().items()) {
          if (std::find(header.begin(), header.end(), key) == header.end()) header.push_back(key);
        }
      }
      for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
      out << '\n';
      for (const Json& r : flat) {
        for (std::size_t i = 0; i < header.size(); ++i) {
          out << (i ? "," : "");
          if (r.contains(header[i])) out << cell(r[header[i]]);
        }
        out << '\n';
      }
      return;
    }
    case Format::text: {
      for (const Json& r : rows) {
        const Json flat = flatten(r);
        bool first = true;
        for (const auto& [key, value] : flat.items()) {
          out << (first ? "" : " ") << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump());
          first = false;
        }
        out << '\n';
      }
      for (const auto& s : skipped) out << "skipped " << s.params << ": " << s.reason << '\n';
      if (!single) {
        out << "summary: " << rows.size() << " cases, " << pass_count << " passed, " << rows.size() - pass_count
            << " failed, " << skipped.size() << " skipped\n";
      }
      return;
    }
  }
}

}  // namespace binharm
