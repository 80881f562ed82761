#include "netlines/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace netlines {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

bool parse_double(const std::string& token, double& out) {
  if (token.empty()) return false;
  char* end = nullptr;
  out = std::strtod(token.c_str(), &end);
  return end == token.c_str() + token.size();
}

bool parse_int(const std::string& token, long& out) {
  if (token.empty()) return false;
  char* end = nullptr;
  out = std::strtol(token.c_str(), &end, 10);
  return end == token.c_str() + token.size();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Dataset load_csv(const std::string& path) {
  const std::string text = read_file(path);
  std::istringstream in(text);

  std::vector<Pattern> patterns;
  std::map<std::string, int> token_ids;
  std::string line;
  std::size_t line_no = 0;
  std::size_t columns = 0;
  bool saw_data = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split_csv(line);

    if (!saw_data) {
      // Header detection: a first line whose feature columns are not all
      // numeric is skipped.
      if (fields.size() < 2) throw ParseError(line_no, "need at least two columns");
      bool numeric = true;
      double ignored;
      for (std::size_t i = 0; i + 1 < fields.size(); ++i) {
        if (!parse_double(fields[i], ignored)) {
          numeric = false;
          break;
        }
      }
      if (!numeric) continue;
      columns = fields.size();
      saw_data = true;
    }

    if (fields.size() != columns) {
      throw ParseError(line_no, "expected " + std::to_string(columns) +
                                    " columns, got " + std::to_string(fields.size()));
    }
    Pattern p;
    p.features.resize(columns - 1);
    for (std::size_t i = 0; i + 1 < columns; ++i) {
      if (!parse_double(fields[i], p.features[i])) {
        throw ParseError(line_no, "bad numeric value '" + fields[i] + "'");
      }
    }
    const std::string& label = fields[columns - 1];
    long as_int = 0;
    if (parse_int(label, as_int)) {
      p.label = static_cast<int>(as_int);
    } else {
      auto [it, inserted] =
          token_ids.emplace(label, static_cast<int>(token_ids.size()));
      p.label = it->second;
      (void)inserted;
    }
    patterns.push_back(std::move(p));
  }
  if (patterns.empty()) throw EmptyDataset(path + " holds no data rows");
  return Dataset(std::move(patterns));
}

void save_csv(const Dataset& data, const std::string& path) {
  std::ostringstream out;
  for (const Pattern& p : data.patterns()) {
    for (double v : p.features) out << format_double(v) << ',';
    out << p.label << '\n';
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write " + path);
  file << out.str();
  if (!file) throw IoError("failed writing " + path);
}

BinaryLabeledSet load_monks(const std::string& path) {
  static const int arities[6] = {3, 3, 2, 3, 4, 2};
  const std::string text = read_file(path);
  std::istringstream in(text);

  std::vector<std::vector<double>> rows;
  std::vector<int> targets;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (fields >> tok) tokens.push_back(tok);
    if (tokens.size() < 7) {
      throw ParseError(line_no, "expected class, six attributes and an id");
    }
    long cls = 0;
    if (!parse_int(tokens[0], cls) || (cls != 0 && cls != 1)) {
      throw ParseError(line_no, "class must be 0 or 1");
    }
    std::vector<double> features(17, -1.0);
    int offset = 0;
    for (int a = 0; a < 6; ++a) {
      long value = 0;
      if (!parse_int(tokens[a + 1], value) || value < 1 || value > arities[a]) {
        throw ParseError(line_no, "attribute " + std::to_string(a + 1) +
                                      " out of range");
      }
      features[offset + value - 1] = 1.0;
      offset += arities[a];
    }
    rows.push_back(std::move(features));
    targets.push_back(cls == 1 ? 1 : -1);
  }
  if (rows.empty()) throw EmptyDataset(path + " holds no data rows");
  return BinaryLabeledSet::from_raw(rows, targets);
}

}  // namespace netlines
