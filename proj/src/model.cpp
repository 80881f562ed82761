#include "netlines/model.hpp"

#include <fstream>
#include <sstream>

#include "netlines/csv.hpp"

namespace netlines {

int predict(const Model& m, const std::vector<double>& features) {
  if (features.size() != m.input_dim) {
    throw DimensionMismatch("model expects " + std::to_string(m.input_dim) +
                            " features, got " + std::to_string(features.size()));
  }
  switch (m.kind) {
    case ModelKind::binary:
      return forward(m.binary, features) == 1 ? m.positive_class : m.negative_class;
    case ModelKind::ton:
      return ton_predict(m.ton, features);
    case ModelKind::ensemble:
      return vote_predict(m.ensemble, features);
    case ModelKind::wta:
      return wta_predict(m.wta, features);
  }
  throw Error("unknown model kind");
}

std::vector<const NetLinesNetwork*> model_networks(const Model& m) {
  std::vector<const NetLinesNetwork*> nets;
  switch (m.kind) {
    case ModelKind::binary:
      nets.push_back(&m.binary);
      break;
    case ModelKind::ton:
      for (const auto& net : m.ton.chain) nets.push_back(&net);
      break;
    case ModelKind::ensemble:
      for (const auto& ton : m.ensemble.tons) {
        for (const auto& net : ton.chain) nets.push_back(&net);
      }
      break;
    case ModelKind::wta:
      for (const auto& net : m.wta.networks) nets.push_back(&net);
      break;
  }
  return nets;
}

std::size_t total_hidden_units(const Model& m) {
  std::size_t h = 0;
  for (const NetLinesNetwork* net : model_networks(m)) h += net->hidden_count();
  return h;
}

std::size_t weight_count(const Model& m) {
  std::size_t total = 0;
  for (const NetLinesNetwork* net : model_networks(m)) {
    total += net->hidden_count() * (net->input_dim + 1) + (net->hidden_count() + 1);
  }
  return total;
}

std::string model_kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::binary: return "binary";
    case ModelKind::ton: return "ton";
    case ModelKind::ensemble: return "ensemble";
    case ModelKind::wta: return "wta";
  }
  return "unknown";
}

namespace {

void write_vector(std::ostringstream& out, const char* tag,
                  const std::vector<double>& v) {
  out << tag;
  for (double x : v) out << ' ' << format_double(x);
  out << '\n';
}

void write_network(std::ostringstream& out, const NetLinesNetwork& net,
                   const Standardizer& s, std::size_t index) {
  out << "network " << index << '\n';
  out << "standardizer " << s.feature_dim() << '\n';
  write_vector(out, "means", s.means);
  write_vector(out, "devs", s.deviations);
  out << "ls " << (net.linearly_separable ? 1 : 0) << '\n';
  out << "hidden " << net.hidden_count() << '\n';
  for (const PerceptronWeights& w : net.hidden) write_vector(out, "unit", w);
  write_vector(out, "output", net.output);
}

struct LineReader {
  std::istringstream in;
  std::size_t line_no = 0;

  explicit LineReader(const std::string& text) : in(text) {}

  std::string next() {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return line;
    }
    throw ParseError(line_no, "unexpected end of model file");
  }

  std::vector<std::string> expect(const std::string& keyword) {
    const std::string line = next();
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (fields >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens[0] != keyword) {
      throw ParseError(line_no, "expected '" + keyword + "', got '" + line + "'");
    }
    return tokens;
  }

  long expect_int(const std::string& keyword) {
    const auto tokens = expect(keyword);
    if (tokens.size() != 2) throw ParseError(line_no, keyword + " needs one value");
    return std::stol(tokens[1]);
  }

  std::vector<double> expect_doubles(const std::string& keyword, std::size_t n) {
    const auto tokens = expect(keyword);
    if (tokens.size() != n + 1) {
      throw ParseError(line_no, keyword + " needs " + std::to_string(n) + " values");
    }
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = std::stod(tokens[i + 1]);
    return out;
  }
};

void read_network(LineReader& r, std::size_t index, std::size_t input_dim,
                  NetLinesNetwork& net, Standardizer& s) {
  const auto head = r.expect("network");
  if (head.size() != 2 || std::stoul(head[1]) != index) {
    throw ParseError(r.line_no, "network blocks out of order");
  }
  const std::size_t sdim = static_cast<std::size_t>(r.expect_int("standardizer"));
  s.means = r.expect_doubles("means", sdim);
  s.deviations = r.expect_doubles("devs", sdim);
  net.input_dim = input_dim;
  net.linearly_separable = r.expect_int("ls") != 0;
  const std::size_t h = static_cast<std::size_t>(r.expect_int("hidden"));
  net.hidden.clear();
  for (std::size_t k = 0; k < h; ++k) {
    net.hidden.push_back(r.expect_doubles("unit", input_dim + 1));
  }
  net.output = r.expect_doubles("output", h + 1);
}

std::vector<int> tokens_to_ints(const std::vector<std::string>& tokens,
                                std::size_t line_no) {
  if (tokens.size() < 2) throw ParseError(line_no, "missing count");
  const std::size_t count = std::stoul(tokens[1]);
  if (tokens.size() != count + 2) throw ParseError(line_no, "bad id list length");
  std::vector<int> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = std::stoi(tokens[i + 2]);
  return out;
}

}  // namespace

std::string serialize_model(const Model& m) {
  std::ostringstream out;
  out << "netlines model 1\n";
  out << "kind " << model_kind_name(m.kind) << '\n';
  out << "input_dim " << m.input_dim << '\n';

  std::size_t index = 0;
  auto echo = [&](std::size_t i) -> const Standardizer& {
    static const Standardizer empty;
    return i < m.standardizers.size() ? m.standardizers[i] : empty;
  };

  switch (m.kind) {
    case ModelKind::binary:
      out << "positive " << m.positive_class << '\n';
      out << "negative " << m.negative_class << '\n';
      write_network(out, m.binary, echo(index), index);
      ++index;
      break;
    case ModelKind::ton: {
      out << "sequence " << m.ton.sequence.size();
      for (int c : m.ton.sequence) out << ' ' << c;
      out << '\n';
      for (const auto& net : m.ton.chain) {
        write_network(out, net, echo(index), index);
        ++index;
      }
      break;
    }
    case ModelKind::ensemble: {
      out << "tons " << m.ensemble.tons.size() << '\n';
      for (std::size_t t = 0; t < m.ensemble.tons.size(); ++t) {
        const Ton& ton = m.ensemble.tons[t];
        out << "ton " << t << '\n';
        out << "sequence " << ton.sequence.size();
        for (int c : ton.sequence) out << ' ' << c;
        out << '\n';
        for (const auto& net : ton.chain) {
          write_network(out, net, echo(index), index);
          ++index;
        }
      }
      break;
    }
    case ModelKind::wta: {
      out << "classes " << m.wta.classes.size();
      for (int c : m.wta.classes) out << ' ' << c;
      out << '\n';
      for (const auto& net : m.wta.networks) {
        write_network(out, net, echo(index), index);
        ++index;
      }
      break;
    }
  }
  out << "end\n";
  return out.str();
}

Model parse_model(const std::string& text) {
  LineReader r(text);
  if (r.next() != "netlines model 1") {
    throw ParseError(r.line_no, "unsupported model header");
  }
  const auto kind_tokens = r.expect("kind");
  if (kind_tokens.size() != 2) throw ParseError(r.line_no, "kind needs one value");

  Model m;
  const std::string& kind = kind_tokens[1];
  if (kind == "binary") m.kind = ModelKind::binary;
  else if (kind == "ton") m.kind = ModelKind::ton;
  else if (kind == "ensemble") m.kind = ModelKind::ensemble;
  else if (kind == "wta") m.kind = ModelKind::wta;
  else throw ParseError(r.line_no, "unknown model kind '" + kind + "'");

  m.input_dim = static_cast<std::size_t>(r.expect_int("input_dim"));

  std::size_t index = 0;
  auto read_one = [&](NetLinesNetwork& net) {
    Standardizer s;
    read_network(r, index, m.input_dim, net, s);
    m.standardizers.push_back(std::move(s));
    ++index;
  };

  switch (m.kind) {
    case ModelKind::binary:
      m.positive_class = static_cast<int>(r.expect_int("positive"));
      m.negative_class = static_cast<int>(r.expect_int("negative"));
      read_one(m.binary);
      break;
    case ModelKind::ton: {
      m.ton.sequence = tokens_to_ints(r.expect("sequence"), r.line_no);
      m.ton.chain.resize(m.ton.sequence.size() - 1);
      for (auto& net : m.ton.chain) read_one(net);
      break;
    }
    case ModelKind::ensemble: {
      const std::size_t tons = static_cast<std::size_t>(r.expect_int("tons"));
      m.ensemble.tons.resize(tons);
      for (std::size_t t = 0; t < tons; ++t) {
        const auto head = r.expect("ton");
        if (head.size() != 2 || std::stoul(head[1]) != t) {
          throw ParseError(r.line_no, "ton blocks out of order");
        }
        Ton& ton = m.ensemble.tons[t];
        ton.sequence = tokens_to_ints(r.expect("sequence"), r.line_no);
        ton.chain.resize(ton.sequence.size() - 1);
        for (auto& net : ton.chain) read_one(net);
      }
      break;
    }
    case ModelKind::wta: {
      m.wta.classes = tokens_to_ints(r.expect("classes"), r.line_no);
      m.wta.networks.resize(m.wta.classes.size());
      for (auto& net : m.wta.networks) read_one(net);
      break;
    }
  }
  r.expect("end");
  return m;
}

void save_model(const Model& m, const std::string& path) {
  const std::string text = serialize_model(m);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("failed writing " + path);
}

Model load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

}  // namespace netlines
