#ifndef SUMFREE_CONFIG_HPP
#define SUMFREE_CONFIG_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace sumfree {

/// Run settings read from "key = value" text. '#' starts a comment.
struct Config {
  int n_max = 7;
  /// 0 = hardware concurrency.
  unsigned jobs = 0;
  std::uint64_t mu_cap = 24;
  std::uint64_t msf_cap = 20;
  std::uint64_t link_cap = 16;
  std::uint64_t pipeline_cap = 20;
  std::uint64_t seed = 0;
  std::size_t sample_size = 200;
};

/// Throws std::invalid_argument on unknown keys or malformed values.
Config parse_config(std::string_view text, Config base = {});
/// Throws std::runtime_error when the file cannot be read.
Config load_config(const std::string& path, Config base = {});

}  // namespace sumfree

#endif  // SUMFREE_CONFIG_HPP
