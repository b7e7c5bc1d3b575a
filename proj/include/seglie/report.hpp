#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace seglie {

// Structured-text report: ordered key/value lines with two-space indented
// nesting (schema "seglie/1"). Emission order is fixed by call order, so
// equal configuration always yields byte-identical output.
class Report {
  public:
    Report() { line(0, "report: seglie/1"); }

    void kv(int indent, const std::string& key, const std::string& value) {
        line(indent, key + ": " + value);
    }
    void kv(int indent, const std::string& key, long value) { kv(indent, key, std::to_string(value)); }
    void section(int indent, const std::string& key) { line(indent, key + ":"); }
    void item(int indent, const std::string& value) { line(indent, "- " + value); }
    void list(int indent, const std::string& key, const std::vector<std::string>& values) {
        std::string joined = "[";
        for (size_t i = 0; i < values.size(); ++i) joined += (i ? ", " : "") + values[i];
        kv(indent, key, joined + "]");
    }
    void raw(const std::string& text) { out_ << text; }

    std::string str() const { return out_.str(); }

  private:
    std::ostringstream out_;
    void line(int indent, const std::string& text) {
        for (int i = 0; i < indent; ++i) out_ << "  ";
        out_ << text << "\n";
    }
};

}  // namespace seglie
