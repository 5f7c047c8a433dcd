// Report rendering: one canonical JSON document and one aligned text tree
// per run, both pure functions of the report fields.

#include "conormal/report.hpp"

#include <algorithm>

#include "conormal/errors.hpp"

namespace conormal {

namespace {

using nlohmann::json;

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();  // numbers, booleans, null
}

bool is_scalar(const json& v) {
  return !v.is_object() && !v.is_array();
}

void walk(const json& v, int indent, std::string& out);

void walk_object(const json& v, int indent, std::string& out) {
  size_t width = 0;
  for (const auto& item : v.items())
    if (is_scalar(item.value())) width = std::max(width, item.key().size());
  for (const auto& item : v.items()) {
    out.append(static_cast<size_t>(indent), ' ');
    out += item.key();
    if (is_scalar(item.value())) {
      out.append(width - item.key().size() + 2, ' ');
      out += scalar_text(item.value());
      out += '\n';
    } else if (item.value().empty()) {
      out += "  (none)\n";
    } else {
      out += '\n';
      walk(item.value(), indent + 2, out);
    }
  }
}

void walk_array(const json& v, int indent, std::string& out) {
  for (const auto& element : v) {
    if (is_scalar(element)) {
      out.append(static_cast<size_t>(indent), ' ');
      out += "- ";
      out += scalar_text(element);
      out += '\n';
    } else {
      out.append(static_cast<size_t>(indent), ' ');
      out += "-\n";
      walk(element, indent + 2, out);
    }
  }
}

void walk(const json& v, int indent, std::string& out) {
  if (v.is_object())
    walk_object(v, indent, out);
  else if (v.is_array())
    walk_array(v, indent, out);
  else {
    out.append(static_cast<size_t>(indent), ' ');
    out += scalar_text(v);
    out += '\n';
  }
}

} // namespace

std::string Report::render_json() const {
  json doc;
  doc["command"] = command;
  doc["seed"] = seed;
  doc["results"] = results;
  doc["warnings"] = warnings;
  return doc.dump(2) + "\n";
}

std::string Report::render_text() const {
  std::string out;
  out += "command  " + command + "\n";
  out += "seed     " + std::to_string(seed) + "\n";
  out += "\n";
  walk(results, 0, out);
  if (!warnings.empty()) {
    out += "\nwarnings\n";
    for (const auto& w : warnings) out += "  - " + w + "\n";
  }
  return out;
}

std::string Report::render(const std::string& format) const {
  if (format == "json") return render_json();
  if (format == "text") return render_text();
  throw DomainError("unknown output format \"" + format +
                    "\"; expected json or text");
}

} // namespace conormal
