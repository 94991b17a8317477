#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#if __has_include("CLI11.hpp")
#include "CLI11.hpp"
#else
#include <CLI/CLI.hpp>
#endif

namespace sigsel::cli {

// CLI11 config reader for JSON overlays. Nested objects address subcommands
// ({"plan": {"scheme": "FG"}}), arrays become multi-value inputs and scalars
// single inputs. Values given on the command line win over the file.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App* app, bool default_also, bool write_description,
                        std::string prefix) const override;
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override;
};

}  // namespace sigsel::cli
