#include "sumfree/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sumfree {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <class T>
T number(std::string_view key, std::string_view value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size()) {
    throw std::invalid_argument("config: bad value '" + std::string(value) + "' for " + std::string(key));
  }
  return out;
}

}  // namespace

Config parse_config(std::string_view text, Config c) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    auto line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "n_max") {
      c.n_max = number<int>(key, value);
    } else if (key == "jobs") {
      c.jobs = number<unsigned>(key, value);
    } else if (key == "mu_cap") {
      c.mu_cap = number<std::uint64_t>(key, value);
    } else if (key == "msf_cap") {
      c.msf_cap = number<std::uint64_t>(key, value);
    } else if (key == "link_cap") {
      c.link_cap = number<std::uint64_t>(key, value);
    } else if (key == "pipeline_cap") {
      c.pipeline_cap = number<std::uint64_t>(key, value);
    } else if (key == "seed") {
      c.seed = number<std::uint64_t>(key, value);
    } else if (key == "sample_size") {
      c.sample_size = number<std::size_t>(key, value);
    } else {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": unknown key '" + std::string(key) +
                                  "'");
    }
  }
  return c;
}

Config load_config(const std::string& path, Config base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), base);
}

}  // namespace sumfree
