#include "schurring/document.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace schurring {

using nlohmann::json;

SRingDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("classes")) {
    throw ParseError("document must be an object with \"n\" and \"classes\"");
  }
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) throw ParseError("\"n\" must be a positive integer");
  if (!j["classes"].is_array()) throw ParseError("\"classes\" must be an array of integer arrays");
  SRingDocument doc;
  doc.n = j["n"].get<int>();
  for (const json& c : j["classes"]) {
    if (!c.is_array()) throw ParseError("\"classes\" must be an array of integer arrays");
    BasicSet cls;
    for (const json& x : c) {
      if (!x.is_number_integer()) throw ParseError("class elements must be integers");
      cls.push_back(x.get<int>());
    }
    doc.classes.push_back(std::move(cls));
  }
  return doc;
}

SRingDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string emit_document(const SRing& a) {
  std::ostringstream os;
  os << "{\"n\": " << a.order() << ", \"classes\": [\n";
  for (int c = 0; c < a.rank(); ++c) {
    os << "  [";
    const BasicSet& x = a.basic_set(c);
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
    os << ']' << (c + 1 < a.rank() ? "," : "") << '\n';
  }
  os << "]}\n";
  return os.str();
}

void write_document(const SRing& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << emit_document(a);
}

SRing to_sring(const SRingDocument& doc) { return SRing::validate(doc.n, doc.classes); }

}  // namespace schurring
