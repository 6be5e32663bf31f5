#include "semitsp/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace semitsp {

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

std::string graph_to_text(const CompleteGraph& g) {
  std::string out = std::to_string(g.size());
  out += '\n';
  for (int i = 0; i < g.size(); ++i) {
    for (int j = 0; j < g.size(); ++j) {
      if (j) out += ' ';
      out += format_double(g.weight(i, j));
    }
    out += '\n';
  }
  return out;
}

CompleteGraph graph_from_text(std::istream& in) {
  long long n = 0;
  if (!(in >> n)) raise(Errc::MalformedInput, "missing vertex count on line 1");
  if (n < 0 || n > 100000) raise(Errc::MalformedInput, "implausible vertex count " + std::to_string(n));
  std::vector<std::vector<double>> w(n, std::vector<double>(n));
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      if (!(in >> w[i][j]))
        raise(Errc::MalformedInput, "matrix entry (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") missing or not a number");
  return CompleteGraph::from_weights(w);
}

std::string graph_to_json_text(const CompleteGraph& g) {
  nlohmann::json j;
  j["n"] = g.size();
  auto rows = nlohmann::json::array();
  for (int i = 0; i < g.size(); ++i) {
    auto row = nlohmann::json::array();
    for (int k = 0; k < g.size(); ++k) row.push_back(g.weight(i, k));
    rows.push_back(std::move(row));
  }
  j["weights"] = std::move(rows);
  return j.dump();
}

CompleteGraph graph_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("weights"))
    raise(Errc::MalformedInput, "expected an object with \"n\" and \"weights\"");
  long long n;
  std::vector<std::vector<double>> w;
  try {
    n = j.at("n").get<long long>();
    w = j.at("weights").get<std::vector<std::vector<double>>>();
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::MalformedInput, std::string("bad field type: ") + e.what());
  }
  if (static_cast<long long>(w.size()) != n)
    raise(Errc::MalformedInput, "\"n\" does not match the number of weight rows");
  return CompleteGraph::from_weights(w);
}

static bool has_json_extension(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

CompleteGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::IoFailure, "cannot open " + path);
  if (has_json_extension(path)) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return graph_from_json_text(buf.str());
  }
  return graph_from_text(in);
}

void write_graph_file(const std::string& path, const CompleteGraph& g) {
  std::ofstream out(path);
  if (!out) raise(Errc::IoFailure, "cannot open " + path + " for writing");
  out << (has_json_extension(path) ? graph_to_json_text(g) : graph_to_text(g));
  if (has_json_extension(path)) out << '\n';
  if (!out) raise(Errc::IoFailure, "write to " + path + " failed");
}

}  // namespace semitsp
